#include "coarsekit/coarse_map.hpp"

#include <algorithm>
#include <numeric>

namespace coarsekit {

CoarseMap make_coarse_map(SpacePtr source, SpacePtr target, std::vector<int> table,
                          std::string label) {
    if (!source || !target) fail(ErrorCode::internal, "coarse map: null space");
    if (static_cast<int>(table.size()) != source->size())
        fail(ErrorCode::malformed_file, "coarse map table must be total on the source");
    for (int y : table)
        if (y < 0 || y >= target->size())
            fail(ErrorCode::malformed_file, "coarse map image out of range");
    return CoarseMap{std::move(source), std::move(target), std::move(table), std::move(label)};
}

CoarseMap identity_map(SpacePtr X) {
    std::vector<int> table(static_cast<size_t>(X->size()));
    std::iota(table.begin(), table.end(), 0);
    return make_coarse_map(X, X, std::move(table), "id");
}

CoarseMap compose(const CoarseMap& g, const CoarseMap& f) {
    if (!same_space(*f.target, *g.source))
        fail(ErrorCode::nonconformable, "compose: middle spaces differ");
    std::vector<int> table(f.table.size());
    for (size_t x = 0; x < f.table.size(); ++x)
        table[x] = g.apply(f.table[x]);
    return make_coarse_map(f.source, g.target, std::move(table),
                           g.label.empty() || f.label.empty() ? "" : g.label + "o" + f.label);
}

Dist expansion_modulus(const CoarseMap& f, Dist R) {
    if (R < 0) fail(ErrorCode::param_out_of_range, "expansion_modulus: negative scale");
    Dist S = 0;
    const int n = f.source->size();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (f.source->dist(x, y) <= R)
                S = std::max(S, f.target->dist(f.apply(x), f.apply(y)));
    return S;
}

Dist closeness(const CoarseMap& f, const CoarseMap& g) {
    if (!same_space(*f.source, *g.source) || !same_space(*f.target, *g.target))
        fail(ErrorCode::nonconformable, "closeness: maps must share source and target");
    Dist c = 0;
    for (int x = 0; x < f.source->size(); ++x)
        c = std::max(c, f.target->dist(f.apply(x), g.apply(x)));
    return c;
}

int max_fiber(const CoarseMap& f) {
    std::vector<int> count(static_cast<size_t>(f.target->size()), 0);
    for (int y : f.table) ++count[static_cast<size_t>(y)];
    return *std::max_element(count.begin(), count.end());
}

EquivalenceDefect equivalence_defect(const CoarseMap& f, const CoarseMap& g) {
    if (!same_space(*f.target, *g.source) || !same_space(*g.target, *f.source))
        fail(ErrorCode::nonconformable, "equivalence_defect: g must run opposite to f");
    return EquivalenceDefect{closeness(compose(f, g), identity_map(f.target)),
                             closeness(compose(g, f), identity_map(f.source))};
}

} // namespace coarsekit
