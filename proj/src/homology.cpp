#include "coarsekit/homology.hpp"

#include <algorithm>
#include <deque>

#include "coarsekit/matching.hpp"

namespace coarsekit {

UFChain::UFChain(SpacePtr space, int degree) : space_(std::move(space)), degree_(degree) {
    if (!space_) fail(ErrorCode::internal, "chain: null space");
    if (degree_ < 0 || degree_ > 2)
        fail(ErrorCode::param_out_of_range, "chain degree must be 0, 1 or 2");
}

Int UFChain::at(const Tuple& t) const {
    auto it = coeffs_.find(t);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void UFChain::add(const Tuple& t, const Int& c) {
    if (static_cast<int>(t.size()) != degree_ + 1)
        fail(ErrorCode::malformed_file, "chain tuple arity does not match the degree");
    for (int p : t)
        if (p < 0 || p >= space_->size())
            fail(ErrorCode::malformed_file, "chain tuple point out of range");
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Dist UFChain::propagation() const {
    Dist p = 0;
    for (const auto& [t, c] : coeffs_)
        for (size_t i = 0; i < t.size(); ++i)
            for (size_t j = i + 1; j < t.size(); ++j)
                p = std::max(p, space_->dist(t[i], t[j]));
    return p;
}

bool operator==(const UFChain& a, const UFChain& b) {
    return a.degree() == b.degree() && same_space(*a.space(), *b.space()) &&
           a.coeffs() == b.coeffs();
}

UFChain add(const UFChain& a, const UFChain& b) {
    if (a.degree() != b.degree() || !same_space(*a.space(), *b.space()))
        fail(ErrorCode::nonconformable, "chain add: degree or space mismatch");
    UFChain out = a;
    for (const auto& [t, c] : b.coeffs()) out.add(t, c);
    return out;
}

UFChain negate(const UFChain& a) {
    UFChain out(a.space(), a.degree());
    for (const auto& [t, c] : a.coeffs()) out.add(t, -c);
    return out;
}

UFChain subtract(const UFChain& a, const UFChain& b) { return add(a, negate(b)); }

UFChain fundamental_class(SpacePtr X) {
    UFChain out(X, 0);
    for (int x = 0; x < out.space()->size(); ++x) out.add({x}, 1);
    return out;
}

UFChain indicator_chain(const Entourage& E) {
    if (!E.same_sides()) fail(ErrorCode::nonconformable, "indicator_chain: sides differ");
    UFChain out(E.left, 1);
    for (auto [a, b] : E.pairs) out.add({a, b}, 1);
    return out;
}

UFChain chain_of_height(const HeightFunction& h) {
    UFChain out(h.base, 0);
    for (int x = 0; x < h.base->size(); ++x) out.add({x}, Int(h.values[static_cast<size_t>(x)]));
    return out;
}

// partial(f)(x0..x_{n-1}) = sum_i (-1)^i sum_y f(x0,..,y at slot i,..);
// equivalently each supported tuple sends (-1)^i times its coefficient to
// the tuple with slot i removed.
UFChain boundary(const UFChain& c) {
    if (c.degree() == 0)
        fail(ErrorCode::param_out_of_range, "boundary: degree 0 has no boundary");
    UFChain out(c.space(), c.degree() - 1);
    for (const auto& [t, v] : c.coeffs())
        for (size_t i = 0; i < t.size(); ++i) {
            Tuple sub;
            sub.reserve(t.size() - 1);
            for (size_t j = 0; j < t.size(); ++j)
                if (j != i) sub.push_back(t[j]);
            out.add(sub, i % 2 == 0 ? v : -v);
        }
    return out;
}

UFChain boundary_of_translation(const PartialTranslation& t) {
    UFChain out(t.space, 0);
    for (auto [x, tx] : t.table) {
        out.add({x}, 1);   // 1_dom
        out.add({tx}, -1); // -1_ran
    }
    return out;
}

UFChain pushforward(const CoarseMap& f, const UFChain& c) {
    if (!same_space(*c.space(), *f.source))
        fail(ErrorCode::nonconformable, "pushforward: chain lives on a different space");
    UFChain out(f.target, c.degree());
    for (const auto& [t, v] : c.coeffs()) {
        Tuple image;
        image.reserve(t.size());
        for (int p : t) image.push_back(f.apply(p));
        out.add(image, v);
    }
    return out;
}

bool operator==(const H0Class& a, const H0Class& b) {
    return a.scale == b.scale && same_space(*a.space, *b.space) &&
           a.component_sums == b.component_sums;
}

H0Class h0_class(const UFChain& h, Dist R) {
    if (h.degree() != 0) fail(ErrorCode::param_out_of_range, "h0_class: chain must be degree 0");
    Components comps = components_at_scale(*h.space(), R);
    H0Class out;
    out.space = h.space();
    out.scale = R;
    for (int r : comps.roots()) out.component_sums[r] = 0;
    for (const auto& [t, v] : h.coeffs())
        out.component_sums[comps.root[static_cast<size_t>(t[0])]] += v;
    return out;
}

std::optional<UFChain> class_witness(const UFChain& g, Dist R) {
    if (g.degree() != 0)
        fail(ErrorCode::param_out_of_range, "class_witness: chain must be degree 0");
    H0Class cls = h0_class(g, R);
    for (const auto& [root, sum] : cls.component_sums)
        if (sum != 0) return std::nullopt;

    const MetricSpace& X = *g.space();
    const int n = X.size();
    Components comps = components_at_scale(X, R);

    // BFS spanning tree per component, rooted at the canonical representative.
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::vector<int> order; // BFS order, roots first
    order.reserve(static_cast<size_t>(n));
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int r : comps.roots()) {
        std::deque<int> queue{r};
        seen[static_cast<size_t>(r)] = true;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (int w = 0; w < n; ++w)
                if (!seen[static_cast<size_t>(w)] && X.dist(v, w) <= R) {
                    seen[static_cast<size_t>(w)] = true;
                    parent[static_cast<size_t>(w)] = v;
                    queue.push_back(w);
                }
        }
    }

    // Leaf-to-root accumulation: residual[v] ends up as the subtree sum of g;
    // the chain r * 1_{(parent, v)} has boundary r * (delta_v - delta_parent),
    // so the residuals telescope to g.
    std::vector<Int> residual(static_cast<size_t>(n), 0);
    for (const auto& [t, v] : g.coeffs()) residual[static_cast<size_t>(t[0])] += v;
    UFChain out(g.space(), 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        int p = parent[static_cast<size_t>(v)];
        if (p < 0) continue; // component root; residual is the component sum, zero
        if (residual[static_cast<size_t>(v)] != 0)
            out.add({p, v}, residual[static_cast<size_t>(v)]);
        residual[static_cast<size_t>(p)] += residual[static_cast<size_t>(v)];
    }
    return out;
}

BijectivizeResult bijectivize(const CoarseMap& f, Dist S, std::uint64_t seed) {
    if (S < 0) fail(ErrorCode::param_out_of_range, "bijectivize: negative scale");
    BijectivizeResult out;
    out.scale = S;
    const int nx = f.source->size();
    const int ny = f.target->size();

    if (nx != ny) {
        // Cardinality mismatch: the whole larger side is a Hall violator.
        HallCertificate cert;
        if (nx > ny) {
            cert.side = "X";
            for (int x = 0; x < nx; ++x) cert.set.push_back(x);
            cert.neighborhood_size = ny; // neighborhood lies inside Y
        } else {
            cert.side = "Y";
            for (int y = 0; y < ny; ++y) cert.set.push_back(y);
            cert.neighborhood_size = nx;
        }
        out.certificate = std::move(cert);
        return out;
    }

    std::vector<std::vector<int>> adj(static_cast<size_t>(nx));
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y)
            if (f.target->dist(f.apply(x), y) <= S) adj[static_cast<size_t>(x)].push_back(y);

    BipartiteMatching m = hopcroft_karp(nx, ny, adj, seed);
    if (m.size == nx) {
        out.bijection = make_coarse_map(f.source, f.target, m.left_match,
                                        f.label.empty() ? "bijectivized" : f.label + "~");
        return out;
    }
    HallCertificate cert;
    cert.side = "X";
    cert.set = hall_violator_left(m, adj);
    std::vector<bool> seen(static_cast<size_t>(ny), false);
    std::int64_t count = 0;
    for (int x : cert.set)
        for (int y : adj[static_cast<size_t>(x)])
            if (!seen[static_cast<size_t>(y)]) {
                seen[static_cast<size_t>(y)] = true;
                ++count;
            }
    cert.neighborhood_size = count;
    out.certificate = std::move(cert);
    return out;
}

UFChain bijection_to_cycle(const HeightSpace& X1, const HeightSpace& X2,
                           const std::vector<int>& g) {
    if (!same_space(*X1.base, *X2.base))
        fail(ErrorCode::nonconformable, "bijection_to_cycle: different base spaces");
    const int n1 = X1.space->size();
    const int n2 = X2.space->size();
    if (n1 != n2 || static_cast<int>(g.size()) != n1)
        fail(ErrorCode::nonconformable, "bijection_to_cycle: not a bijection");
    std::vector<bool> hit(static_cast<size_t>(n2), false);
    for (int q : g) {
        if (q < 0 || q >= n2 || hit[static_cast<size_t>(q)])
            fail(ErrorCode::nonconformable, "bijection_to_cycle: not a bijection");
        hit[static_cast<size_t>(q)] = true;
    }

    // delta(x,y) counts fiber points over source base y sent over target
    // base x; tuples keep the (target, source) orientation.
    UFChain delta(X1.base, 1);
    for (int p = 0; p < n1; ++p) {
        int y = X1.origin[static_cast<size_t>(p)].first;
        int x = X2.origin[static_cast<size_t>(g[static_cast<size_t>(p)])].first;
        delta.add({x, y}, 1);
    }

    // Postcondition check: boundary(delta) = h1 - h2 as degree-0 chains.
    UFChain expected(X1.base, 0);
    for (const auto& [bx, fi] : X1.origin) expected.add({bx}, 1);
    for (const auto& [bx, fi] : X2.origin) expected.add({bx}, -1);
    if (!(boundary(delta) == expected))
        fail(ErrorCode::internal, "bijection_to_cycle: boundary check failed");
    return delta;
}

TheoremAResult pipeline_theorem_a(const HeightFunction& h1, const HeightFunction& h2,
                                  Dist R, std::uint64_t seed) {
    if (!same_space(*h1.base, *h2.base))
        fail(ErrorCode::nonconformable, "pipeline: height functions on different bases");
    TheoremAResult out;
    UFChain c1 = chain_of_height(h1);
    UFChain c2 = chain_of_height(h2);
    out.class1 = h0_class(c1, R);
    out.class2 = h0_class(c2, R);
    out.classes_equal = out.class1.component_sums == out.class2.component_sums;
    out.hs1 = space_of_height(h1, h1.base->label() + "(h1)");
    out.hs2 = space_of_height(h2, h2.base->label() + "(h2)");

    // Nearest point of X(h2) over the same base: clamp the fiber index.
    std::vector<int> table;
    table.reserve(static_cast<size_t>(out.hs1.space->size()));
    for (const auto& [bx, fi] : out.hs1.origin) {
        int clamped = static_cast<int>(std::min<std::int64_t>(fi, h2.values[static_cast<size_t>(bx)]));
        table.push_back(out.hs2.locate(bx, clamped));
    }
    out.nearest_base = make_coarse_map(out.hs1.space, out.hs2.space, std::move(table),
                                       "nearest-base");
    if (!out.classes_equal) return out;

    // Equal classes imply equal totals, so the sweep succeeds no later than
    // the diameter of X(h2), where the relation is complete bipartite.
    const Dist S_max = out.hs2.space->diameter();
    for (Dist S = 0; S <= S_max; ++S) {
        BijectivizeResult r = bijectivize(out.nearest_base, S, seed);
        if (r.bijection) {
            out.sweep.emplace_back(S, out.hs1.space->size());
            out.minimal_scale = S;
            out.bijection = r.bijection;
            UFChain delta = bijection_to_cycle(out.hs1, out.hs2, r.bijection->table);
            out.cycle = delta;
            out.cycle_verified = boundary(delta) == subtract(c1, c2);
            return out;
        }
        std::int64_t matched = out.hs1.space->size() -
                               static_cast<std::int64_t>(r.certificate->set.size()) +
                               r.certificate->neighborhood_size;
        out.sweep.emplace_back(S, static_cast<int>(matched));
        if (S == S_max) out.final_certificate = r.certificate;
    }
    return out;
}

} // namespace coarsekit
