#include "coarsekit/entourage.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace coarsekit {

namespace {

std::vector<std::pair<int, int>> normalize_pairs(std::vector<std::pair<int, int>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

} // namespace

bool Entourage::contains(int a, int b) const {
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(a, b));
}

Dist Entourage::width() const {
    if (!same_sides()) fail(ErrorCode::nonconformable, "width: entourage sides differ");
    Dist w = 0;
    for (auto [a, b] : pairs) w = std::max(w, left->dist(a, b));
    return w;
}

Entourage make_entourage(SpacePtr left, SpacePtr right,
                         std::vector<std::pair<int, int>> pairs) {
    if (!left || !right) fail(ErrorCode::internal, "entourage: null space");
    for (auto [a, b] : pairs)
        if (a < 0 || a >= left->size() || b < 0 || b >= right->size())
            fail(ErrorCode::malformed_file, "entourage pair out of range");
    return Entourage{std::move(left), std::move(right), normalize_pairs(std::move(pairs))};
}

Entourage diagonal(SpacePtr X) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(X->size()));
    for (int i = 0; i < X->size(); ++i) pairs.emplace_back(i, i);
    return Entourage{X, X, std::move(pairs)};
}

Entourage adjoint(const Entourage& E) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(E.pairs.size());
    for (auto [a, b] : E.pairs) pairs.emplace_back(b, a);
    return Entourage{E.right, E.left, normalize_pairs(std::move(pairs))};
}

Entourage compose(const Entourage& E, const Entourage& F) {
    if (!same_space(*E.right, *F.left))
        fail(ErrorCode::nonconformable, "compose: middle spaces differ");
    std::map<int, std::vector<int>> by_left;
    for (auto [y, z] : F.pairs) by_left[y].push_back(z);
    std::set<std::pair<int, int>> out;
    for (auto [x, y] : E.pairs) {
        auto it = by_left.find(y);
        if (it == by_left.end()) continue;
        for (int z : it->second) out.emplace(x, z);
    }
    return Entourage{E.left, F.right, {out.begin(), out.end()}};
}

Entourage graph_of(const CoarseMap& f) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(f.table.size());
    for (int x = 0; x < f.source->size(); ++x) pairs.emplace_back(f.apply(x), x);
    return Entourage{f.target, f.source, normalize_pairs(std::move(pairs))};
}

bool entourage_subset(const Entourage& A, const Entourage& B) {
    return std::includes(B.pairs.begin(), B.pairs.end(), A.pairs.begin(), A.pairs.end());
}

Entourage entourage_union(const Entourage& A, const Entourage& B) {
    std::vector<std::pair<int, int>> pairs = A.pairs;
    pairs.insert(pairs.end(), B.pairs.begin(), B.pairs.end());
    return Entourage{A.left, A.right, normalize_pairs(std::move(pairs))};
}

int max_degree(const Entourage& E) {
    std::map<int, int> out_deg, in_deg;
    int best = 0;
    for (auto [a, b] : E.pairs) {
        best = std::max(best, ++out_deg[a]);
        best = std::max(best, ++in_deg[b]);
    }
    return best;
}

Dist PartialTranslation::displacement() const {
    Dist d = 0;
    for (auto [x, tx] : table) d = std::max(d, space->dist(x, tx));
    return d;
}

std::vector<int> PartialTranslation::domain() const {
    std::vector<int> out;
    out.reserve(table.size());
    for (auto [x, tx] : table) out.push_back(x);
    return out;
}

std::vector<int> PartialTranslation::range() const {
    std::vector<int> out;
    out.reserve(table.size());
    for (auto [x, tx] : table) out.push_back(tx);
    std::sort(out.begin(), out.end());
    return out;
}

Entourage PartialTranslation::graph() const {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(table.size());
    for (auto [x, tx] : table) pairs.emplace_back(tx, x);
    std::sort(pairs.begin(), pairs.end());
    return Entourage{space, space, std::move(pairs)};
}

PartialTranslation make_translation(SpacePtr space, std::vector<std::pair<int, int>> table) {
    if (!space) fail(ErrorCode::internal, "translation: null space");
    std::sort(table.begin(), table.end());
    std::set<int> ran;
    for (size_t k = 0; k < table.size(); ++k) {
        auto [x, tx] = table[k];
        if (x < 0 || x >= space->size() || tx < 0 || tx >= space->size())
            fail(ErrorCode::malformed_file, "translation entry out of range");
        if (k > 0 && table[k].first == table[k - 1].first)
            fail(ErrorCode::malformed_file, "translation table has a repeated source");
        if (!ran.insert(tx).second)
            fail(ErrorCode::malformed_file, "translation table is not injective");
    }
    return PartialTranslation{std::move(space), std::move(table)};
}

PartialTranslation identity_translation(SpacePtr X) {
    std::vector<std::pair<int, int>> table;
    table.reserve(static_cast<size_t>(X->size()));
    for (int i = 0; i < X->size(); ++i) table.emplace_back(i, i);
    return PartialTranslation{std::move(X), std::move(table)};
}

// Proper edge coloring of the bipartite multigraph (left copies, right
// copies) with exactly Delta colors, by alternating-path recoloring. The
// Kempe chain started at the right endpoint can never reach the left
// endpoint: in a bipartite graph the chain enters left vertices only through
// edges of the color that is free there.
std::vector<PartialTranslation> decompose(const Entourage& E) {
    if (!E.same_sides()) fail(ErrorCode::nonconformable, "decompose: entourage sides differ");
    const int n = E.left->size();
    const int delta = max_degree(E);
    if (delta == 0) return {};

    const int m = E.size();
    // at[v][c]: edge id colored c at vertex v; vertices 0..n-1 are left
    // copies, n..2n-1 right copies.
    std::vector<std::vector<int>> at(static_cast<size_t>(2 * n),
                                     std::vector<int>(static_cast<size_t>(delta), -1));
    std::vector<int> color(static_cast<size_t>(m), -1);

    auto first_free = [&](int v) {
        for (int c = 0; c < delta; ++c)
            if (at[static_cast<size_t>(v)][static_cast<size_t>(c)] < 0) return c;
        fail(ErrorCode::internal, "decompose: no free color at a vertex of degree < delta");
    };
    auto other_end = [&](int e, int v) {
        auto [a, b] = E.pairs[static_cast<size_t>(e)];
        return v == a ? n + b : a;
    };

    for (int e = 0; e < m; ++e) {
        auto [a, b] = E.pairs[static_cast<size_t>(e)];
        const int u = a, v = n + b;
        int ca = first_free(u);
        int cb = first_free(v);
        if (ca != cb) {
            // Flip the ca/cb chain starting at v so that ca becomes free at v.
            int x = v, want = ca, have = cb;
            std::vector<int> chain;
            while (true) {
                int e2 = at[static_cast<size_t>(x)][static_cast<size_t>(want)];
                if (e2 < 0) break;
                chain.push_back(e2);
                x = other_end(e2, x);
                std::swap(want, have);
            }
            for (int e2 : chain) {
                auto [p, q] = E.pairs[static_cast<size_t>(e2)];
                int c_old = color[static_cast<size_t>(e2)];
                int c_new = c_old == ca ? cb : ca;
                at[static_cast<size_t>(p)][static_cast<size_t>(c_old)] = -1;
                at[static_cast<size_t>(n + q)][static_cast<size_t>(c_old)] = -1;
                color[static_cast<size_t>(e2)] = c_new;
            }
            for (int e2 : chain) {
                auto [p, q] = E.pairs[static_cast<size_t>(e2)];
                int c = color[static_cast<size_t>(e2)];
                at[static_cast<size_t>(p)][static_cast<size_t>(c)] = e2;
                at[static_cast<size_t>(n + q)][static_cast<size_t>(c)] = e2;
            }
        }
        color[static_cast<size_t>(e)] = ca;
        at[static_cast<size_t>(u)][static_cast<size_t>(ca)] = e;
        at[static_cast<size_t>(v)][static_cast<size_t>(ca)] = e;
    }

    // Color class c is a matching {(a_j, b_j)}: the translation t(b_j) = a_j,
    // so its graph {(t(x), x)} is exactly the class.
    std::vector<std::vector<std::pair<int, int>>> tables(static_cast<size_t>(delta));
    for (int e = 0; e < m; ++e) {
        auto [a, b] = E.pairs[static_cast<size_t>(e)];
        tables[static_cast<size_t>(color[static_cast<size_t>(e)])].emplace_back(b, a);
    }
    std::vector<PartialTranslation> out;
    out.reserve(static_cast<size_t>(delta));
    for (auto& t : tables) out.push_back(make_translation(E.left, std::move(t)));
    return out;
}

std::optional<Dist> asymptotic_parameter(const Entourage& S1, const Entourage& S2) {
    if (!same_space(*S1.left, *S2.left) || !same_space(*S1.right, *S2.right))
        fail(ErrorCode::nonconformable, "asymptotic_parameter: ambient spaces differ");
    if (S1.empty() && S2.empty()) return 0;
    if (S1.empty() || S2.empty()) return std::nullopt;

    auto covering_radius = [](const Entourage& A, const Entourage& B) {
        // least R with B inside the union of R-ball products around A's pairs
        Dist worst = 0;
        for (auto [y2, x2] : B.pairs) {
            Dist best = -1;
            for (auto [y1, x1] : A.pairs) {
                Dist r = std::max(A.left->dist(y1, y2), A.right->dist(x1, x2));
                if (best < 0 || r < best) best = r;
            }
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(covering_radius(S1, S2), covering_radius(S2, S1));
}

} // namespace coarsekit
