#include "coarsekit/space.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "coarsekit/union_find.hpp"

namespace coarsekit {

namespace {

constexpr std::int64_t kCoordBound = 1000000000000000LL; // keeps l1 sums in int64

std::string bad_space(const std::string& label, const std::string& what) {
    return "space '" + label + "': " + what;
}

} // namespace

void MetricSpace::check_ids(const std::vector<std::string>& points) {
    if (points.empty()) fail(ErrorCode::malformed_file, "space has no points");
    std::unordered_set<std::string> seen;
    for (const auto& id : points) {
        if (id.empty()) fail(ErrorCode::malformed_file, "empty point identifier");
        if (!seen.insert(id).second)
            fail(ErrorCode::malformed_file, "duplicate point identifier '" + id + "'");
    }
}

SpacePtr MetricSpace::checked(std::string label, std::vector<std::string> points,
                              std::vector<Dist> dist, bool full_axiom_check) {
    check_ids(points);
    const size_t n = points.size();
    if (dist.size() != n * n)
        fail(ErrorCode::malformed_file, bad_space(label, "distance matrix size mismatch"));
    for (size_t i = 0; i < n; ++i) {
        if (dist[i * n + i] != 0)
            fail(ErrorCode::malformed_file, bad_space(label, "nonzero diagonal distance"));
        for (size_t j = i + 1; j < n; ++j) {
            Dist d = dist[i * n + j];
            if (d != dist[j * n + i])
                fail(ErrorCode::malformed_file, bad_space(label, "asymmetric distances"));
            if (d <= 0)
                fail(ErrorCode::malformed_file,
                     bad_space(label, "nonpositive distance between distinct points"));
        }
    }
    if (full_axiom_check) {
        // O(n^3); spaces here are desk scale by design.
        for (size_t j = 0; j < n; ++j)
            for (size_t i = 0; i < n; ++i) {
                Dist dij = dist[i * n + j];
                for (size_t k = 0; k < n; ++k)
                    if (dist[i * n + k] > dij + dist[j * n + k])
                        fail(ErrorCode::malformed_file,
                             bad_space(label, "triangle inequality violated"));
            }
    }
    return SpacePtr(new MetricSpace(std::move(label), std::move(points), std::move(dist)));
}

SpacePtr MetricSpace::from_matrix(std::string label, std::vector<std::string> points,
                                  std::vector<Dist> row_major) {
    return checked(std::move(label), std::move(points), std::move(row_major), true);
}

SpacePtr MetricSpace::from_graph(std::string label, std::vector<std::string> points,
                                 const std::vector<std::pair<std::string, std::string>>& edges) {
    check_ids(points);
    const int n = static_cast<int>(points.size());
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < n; ++i) index[points[static_cast<size_t>(i)]] = i;

    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const auto& [a, b] : edges) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end() || ib == index.end())
            fail(ErrorCode::malformed_file,
                 bad_space(label, "edge references unknown point '" + (ia == index.end() ? a : b) + "'"));
        if (ia->second == ib->second) continue; // self loops carry no metric content
        adj[static_cast<size_t>(ia->second)].push_back(ib->second);
        adj[static_cast<size_t>(ib->second)].push_back(ia->second);
    }

    std::vector<Dist> dist(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        auto* row = &dist[static_cast<size_t>(s) * static_cast<size_t>(n)];
        std::deque<int> queue{s};
        row[s] = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : adj[static_cast<size_t>(v)])
                if (row[w] < 0) {
                    row[w] = row[v] + 1;
                    queue.push_back(w);
                }
        }
        for (int t = 0; t < n; ++t)
            if (row[t] < 0)
                fail(ErrorCode::malformed_file,
                     bad_space(label, "graph backend requires a connected graph"));
    }
    // BFS shortest-path distances form a metric; skip the O(n^3) recheck.
    return checked(std::move(label), std::move(points), std::move(dist), false);
}

SpacePtr MetricSpace::from_lattice(std::string label, std::vector<std::string> points,
                                   const std::vector<std::vector<std::int64_t>>& coords) {
    check_ids(points);
    const size_t n = points.size();
    if (coords.size() != n)
        fail(ErrorCode::malformed_file, bad_space(label, "coordinate list size mismatch"));
    const size_t arity = coords.empty() ? 0 : coords[0].size();
    if (arity == 0) fail(ErrorCode::malformed_file, bad_space(label, "empty coordinate tuples"));
    for (const auto& c : coords) {
        if (c.size() != arity)
            fail(ErrorCode::malformed_file, bad_space(label, "mixed coordinate arities"));
        for (auto v : c)
            if (v > kCoordBound || v < -kCoordBound)
                fail(ErrorCode::malformed_file, bad_space(label, "coordinate out of range"));
    }

    std::vector<Dist> dist(n * n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Dist d = 0;
            for (size_t k = 0; k < arity; ++k) {
                std::int64_t diff = coords[i][k] - coords[j][k];
                d += diff < 0 ? -diff : diff;
            }
            if (d == 0)
                fail(ErrorCode::malformed_file,
                     bad_space(label, "duplicate lattice coordinates for distinct points"));
            dist[i * n + j] = dist[j * n + i] = d;
        }
    // The l1 metric is a metric; skip the O(n^3) recheck.
    return checked(std::move(label), std::move(points), std::move(dist), false);
}

int MetricSpace::index_of(const std::string& id) const {
    if (auto i = find(id)) return *i;
    fail(ErrorCode::unresolved_label, "unknown point '" + id + "' in space '" + label_ + "'");
}

std::optional<int> MetricSpace::find(const std::string& id) const {
    for (size_t i = 0; i < points_.size(); ++i)
        if (points_[i] == id) return static_cast<int>(i);
    return std::nullopt;
}

Dist MetricSpace::diameter() const {
    Dist best = 0;
    for (Dist d : dist_) best = std::max(best, d);
    return best;
}

std::vector<int> MetricSpace::ball(int center, Dist radius) const {
    std::vector<int> out;
    for (int j = 0; j < size(); ++j)
        if (dist(center, j) <= radius) out.push_back(j);
    return out;
}

bool same_space(const MetricSpace& a, const MetricSpace& b) {
    if (&a == &b) return true;
    return a.points() == b.points() && a.dist_matrix() == b.dist_matrix();
}

std::int64_t growth_profile(const MetricSpace& X, Dist R) {
    if (R < 0) fail(ErrorCode::param_out_of_range, "growth_profile: negative scale");
    std::int64_t best = 0;
    for (int i = 0; i < X.size(); ++i) {
        std::int64_t count = 0;
        for (int j = 0; j < X.size(); ++j)
            if (X.dist(i, j) <= R) ++count;
        best = std::max(best, count);
    }
    return best;
}

SpacePtr doubling(const MetricSpace& X, int n) {
    if (n < 1) fail(ErrorCode::param_out_of_range, "doubling: n must be positive");
    const int m = X.size();
    std::vector<std::string> points;
    points.reserve(static_cast<size_t>(m) * static_cast<size_t>(n));
    for (int x = 0; x < m; ++x)
        for (int i = 1; i <= n; ++i)
            points.push_back("(" + X.point_id(x) + "," + std::to_string(i) + ")");

    const size_t total = points.size();
    std::vector<Dist> dist(total * total, 0);
    for (int x = 0; x < m; ++x)
        for (int i = 0; i < n; ++i)
            for (int y = 0; y < m; ++y)
                for (int j = 0; j < n; ++j) {
                    size_t p = static_cast<size_t>(x * n + i);
                    size_t q = static_cast<size_t>(y * n + j);
                    dist[p * total + q] = X.dist(x, y) + std::abs(i - j);
                }
    // The doubling of a metric is a metric; ids still get uniqueness-checked.
    return MetricSpace::checked(X.label() + "^(" + std::to_string(n) + ")",
                                std::move(points), std::move(dist), false);
}

SpacePtr subspace(const MetricSpace& X, const std::vector<int>& members,
                  const std::string& label) {
    if (members.empty()) fail(ErrorCode::param_out_of_range, "subspace: empty point set");
    for (size_t k = 0; k < members.size(); ++k) {
        if (members[k] < 0 || members[k] >= X.size())
            fail(ErrorCode::param_out_of_range, "subspace: index out of range");
        if (k > 0 && members[k] <= members[k - 1])
            fail(ErrorCode::param_out_of_range, "subspace: indices must strictly increase");
    }
    const size_t n = members.size();
    std::vector<std::string> points;
    points.reserve(n);
    for (int idx : members) points.push_back(X.point_id(idx));
    std::vector<Dist> dist(n * n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            dist[i * n + j] = X.dist(members[i], members[j]);
    return MetricSpace::checked(label.empty() ? X.label() + "/sub" : label,
                                std::move(points), std::move(dist), false);
}

std::int64_t HeightFunction::bound() const {
    std::int64_t b = 0;
    for (auto v : values) b = std::max(b, v);
    return b;
}

std::int64_t HeightFunction::total() const {
    std::int64_t t = 0;
    for (auto v : values) t += v;
    return t;
}

HeightFunction make_height(SpacePtr base, std::vector<std::int64_t> values) {
    if (!base) fail(ErrorCode::internal, "make_height: null base space");
    if (static_cast<int>(values.size()) != base->size())
        fail(ErrorCode::malformed_file, "height function must cover every point");
    for (auto v : values)
        if (v < 1) fail(ErrorCode::malformed_file, "height values must be >= 1");
    return HeightFunction{std::move(base), std::move(values)};
}

int HeightSpace::locate(int base_index, int fiber) const {
    for (size_t p = 0; p < origin.size(); ++p)
        if (origin[p].first == base_index && origin[p].second == fiber)
            return static_cast<int>(p);
    fail(ErrorCode::param_out_of_range, "height space: no point over the requested fiber");
}

HeightSpace space_of_height(const HeightFunction& h, const std::string& label) {
    const int n = static_cast<int>(h.bound());
    SpacePtr doubled = doubling(*h.base, n);
    std::vector<int> members;
    std::vector<std::pair<int, int>> origin;
    for (int x = 0; x < h.base->size(); ++x)
        for (int i = 1; i <= h.values[static_cast<size_t>(x)]; ++i) {
            members.push_back(x * n + (i - 1)); // doubling order is base-major
            origin.emplace_back(x, i);
        }
    SpacePtr space = subspace(*doubled, members, label.empty() ? h.base->label() + "(h)" : label);
    return HeightSpace{std::move(space), h.base, std::move(origin)};
}

Components components_at_scale(const MetricSpace& X, Dist R) {
    if (R < 0) fail(ErrorCode::param_out_of_range, "components_at_scale: negative scale");
    const int n = X.size();
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (X.dist(i, j) <= R) uf.unite(i, j);

    Components comps;
    comps.scale = R;
    comps.root.assign(static_cast<size_t>(n), -1);
    // Canonical representative: least index in the class.
    std::vector<int> least(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int r = uf.find(i);
        if (least[static_cast<size_t>(r)] < 0) least[static_cast<size_t>(r)] = i;
    }
    for (int i = 0; i < n; ++i) comps.root[static_cast<size_t>(i)] = least[static_cast<size_t>(uf.find(i))];
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int i = 0; i < n; ++i)
        if (!seen[static_cast<size_t>(comps.root[static_cast<size_t>(i)])]) {
            seen[static_cast<size_t>(comps.root[static_cast<size_t>(i)])] = true;
            ++comps.count;
        }
    return comps;
}

std::vector<std::vector<int>> Components::classes() const {
    std::vector<std::vector<int>> out;
    std::vector<int> rs = roots();
    for (int r : rs) {
        std::vector<int> cls;
        for (size_t i = 0; i < root.size(); ++i)
            if (root[i] == r) cls.push_back(static_cast<int>(i));
        out.push_back(std::move(cls));
    }
    return out;
}

std::vector<int> Components::roots() const {
    std::vector<int> rs;
    for (size_t i = 0; i < root.size(); ++i)
        if (root[i] == static_cast<int>(i)) rs.push_back(static_cast<int>(i));
    return rs;
}

} // namespace coarsekit
