#include "coarsekit/operators.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace coarsekit {

namespace {

void validate_key(const BandOperator& A, const EntryKey& k) {
    if (k.row_pt < 0 || k.row_pt >= A.rows->size() || k.col_pt < 0 ||
        k.col_pt >= A.cols->size() || k.row_f < 0 || k.row_f >= A.row_fiber || k.col_f < 0 ||
        k.col_f >= A.col_fiber)
        fail(ErrorCode::malformed_file, "operator entry out of range");
}

// Erase entries whose magnitude fell below the drop tolerance. Applied
// after arithmetic only; construction keeps every explicit nonzero.
void drop_small(std::map<EntryKey, Scalar>& entries) {
    for (auto it = entries.begin(); it != entries.end();)
        it = std::abs(it->second) < kDropTolerance ? entries.erase(it) : std::next(it);
}

void check_same_shape(const BandOperator& A, const BandOperator& B, const char* what) {
    if (!same_space(*A.rows, *B.rows) || !same_space(*A.cols, *B.cols) ||
        A.row_fiber != B.row_fiber || A.col_fiber != B.col_fiber)
        fail(ErrorCode::nonconformable, what);
}

} // namespace

Scalar BandOperator::at(const EntryKey& k) const {
    auto it = entries.find(k);
    return it == entries.end() ? Scalar(0.0) : it->second;
}

BandOperator make_band_operator(SpacePtr rows, SpacePtr cols, int row_fiber, int col_fiber,
                                std::map<EntryKey, Scalar> entries) {
    if (!rows || !cols) fail(ErrorCode::internal, "operator: null space");
    if (row_fiber < 1 || col_fiber < 1)
        fail(ErrorCode::param_out_of_range, "operator fiber dimensions must be positive");
    BandOperator A{std::move(rows), std::move(cols), row_fiber, col_fiber, {}};
    for (auto& [k, v] : entries) {
        validate_key(A, k);
        if (v != Scalar(0.0)) A.entries.emplace(k, v);
    }
    return A;
}

BandOperator zero_operator(SpacePtr rows, SpacePtr cols, int row_fiber, int col_fiber) {
    return make_band_operator(std::move(rows), std::move(cols), row_fiber, col_fiber, {});
}

BandOperator identity_operator(SpacePtr X, int fiber) {
    BandOperator A = zero_operator(X, X, fiber, fiber);
    for (int x = 0; x < A.rows->size(); ++x)
        for (int m = 0; m < fiber; ++m) A.entries[{x, m, x, m}] = 1.0;
    return A;
}

bool operator==(const BandOperator& A, const BandOperator& B) {
    return same_space(*A.rows, *B.rows) && same_space(*A.cols, *B.cols) &&
           A.row_fiber == B.row_fiber && A.col_fiber == B.col_fiber && A.entries == B.entries;
}

BandOperator add(const BandOperator& A, const BandOperator& B) {
    check_same_shape(A, B, "operator add: shapes differ");
    BandOperator C = A;
    for (const auto& [k, v] : B.entries) C.entries[k] += v;
    drop_small(C.entries);
    return C;
}

BandOperator negate_op(const BandOperator& A) {
    BandOperator C = A;
    for (auto& [k, v] : C.entries) v = -v;
    return C;
}

BandOperator multiply(const BandOperator& A, const BandOperator& B) {
    if (!same_space(*A.cols, *B.rows) || A.col_fiber != B.row_fiber)
        fail(ErrorCode::nonconformable, "operator multiply: inner shapes differ");
    // Bucket B by its row coordinate, which is A's column coordinate.
    std::map<std::pair<int, int>, std::vector<std::pair<std::pair<int, int>, Scalar>>> by_row;
    for (const auto& [k, v] : B.entries)
        by_row[{k.row_pt, k.row_f}].push_back({{k.col_pt, k.col_f}, v});
    BandOperator C = zero_operator(A.rows, B.cols, A.row_fiber, B.col_fiber);
    for (const auto& [k, v] : A.entries) {
        auto it = by_row.find({k.col_pt, k.col_f});
        if (it == by_row.end()) continue;
        for (const auto& [cc, w] : it->second)
            C.entries[{k.row_pt, k.row_f, cc.first, cc.second}] += v * w;
    }
    drop_small(C.entries);
    return C;
}

BandOperator adjoint_op(const BandOperator& A) {
    BandOperator C = zero_operator(A.cols, A.rows, A.col_fiber, A.row_fiber);
    for (const auto& [k, v] : A.entries)
        C.entries[{k.col_pt, k.col_f, k.row_pt, k.row_f}] = std::conj(v);
    return C;
}

Entourage support(const BandOperator& A) {
    std::set<std::pair<int, int>> pts;
    for (const auto& [k, v] : A.entries) pts.emplace(k.row_pt, k.col_pt);
    return make_entourage(A.rows, A.cols, {pts.begin(), pts.end()});
}

Dist propagation(const BandOperator& A) {
    if (!same_space(*A.rows, *A.cols))
        fail(ErrorCode::nonconformable, "propagation: operator acts between distinct spaces");
    Dist p = 0;
    for (const auto& [k, v] : A.entries) p = std::max(p, A.rows->dist(k.row_pt, k.col_pt));
    return p;
}

BandOperator isometry_from_translation(const PartialTranslation& t) {
    BandOperator A = zero_operator(t.space, t.space);
    for (auto [x, tx] : t.table) A.entries[{tx, 0, x, 0}] = 1.0;
    return A;
}

UniformCoverPlan make_uniform_cover_plan(CoarseMap f, int fiber_dim) {
    if (fiber_dim < 1) fail(ErrorCode::param_out_of_range, "cover: fiber dimension must be positive");
    const int N = max_fiber(f);
    if (fiber_dim < N)
        fail(ErrorCode::param_out_of_range,
             "cover: fiber dimension is below the largest fiber, a block would be empty");
    UniformCoverPlan plan;
    plan.fiber_dim = fiber_dim;
    plan.max_fiber_size = N;
    plan.slot.assign(f.table.size(), 0);
    std::vector<int> seen(static_cast<size_t>(f.target->size()), 0);
    for (size_t x = 0; x < f.table.size(); ++x)
        plan.slot[x] = seen[static_cast<size_t>(f.table[x])]++;
    plan.f = std::move(f);
    return plan;
}

BandOperator uniform_cover(const UniformCoverPlan& plan) {
    const int N = plan.max_fiber_size;
    const int D = plan.fiber_dim;
    BandOperator S = zero_operator(plan.f.target, plan.f.source, N * D, D);
    for (int x = 0; x < plan.f.source->size(); ++x)
        for (int n = 0; n < D; ++n)
            S.entries[{plan.f.apply(x), n * N + plan.slot[static_cast<size_t>(x)], x, n}] = 1.0;
    return S;
}

std::vector<int> fiber_image(const BandOperator& T, const std::vector<int>& V) {
    std::vector<bool> in(static_cast<size_t>(T.col_fiber), false);
    for (int m : V) {
        if (m < 0 || m >= T.col_fiber)
            fail(ErrorCode::param_out_of_range, "fiber_image: coordinate out of range");
        in[static_cast<size_t>(m)] = true;
    }
    std::set<int> out;
    for (const auto& [k, v] : T.entries)
        if (in[static_cast<size_t>(k.col_f)]) out.insert(k.row_f);
    return {out.begin(), out.end()};
}

std::vector<int> fiber_preimage(const BandOperator& T, const std::vector<int>& W) {
    std::vector<bool> in(static_cast<size_t>(T.row_fiber), false);
    for (int m : W) {
        if (m < 0 || m >= T.row_fiber)
            fail(ErrorCode::param_out_of_range, "fiber_preimage: coordinate out of range");
        in[static_cast<size_t>(m)] = true;
    }
    std::set<int> out;
    for (const auto& [k, v] : T.entries)
        if (in[static_cast<size_t>(k.row_f)]) out.insert(k.col_f);
    return {out.begin(), out.end()};
}

BandOperator conjugate(const BandOperator& S, const BandOperator& T) {
    return multiply(multiply(S, T), adjoint_op(S));
}

ConjugationBound check_conjugation_bound(const BandOperator& S, const BandOperator& T,
                                         const CoarseMap& f, std::optional<Dist> cover_radius) {
    if (!same_space(*f.source, *S.cols) || !same_space(*f.target, *S.rows))
        fail(ErrorCode::nonconformable, "conjugation bound: map does not match the isometry");
    ConjugationBound out;
    Dist needed = 0;
    for (const auto& [k, v] : S.entries)
        needed = std::max(needed, S.rows->dist(k.row_pt, f.apply(k.col_pt)));
    out.cover_radius = cover_radius.value_or(needed);
    out.covered = needed <= out.cover_radius;
    out.prop_t = propagation(T);
    out.bound = expansion_modulus(f, out.prop_t) + 2 * out.cover_radius;
    out.prop_result = propagation(conjugate(S, T));
    out.ok = out.covered && out.prop_result <= out.bound;
    return out;
}

namespace {

// Platform-independent deterministic doubles in [-1, 1) for the power
// iteration start vector.
struct SplitMix {
    std::uint64_t state;
    double next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        z ^= z >> 31;
        return static_cast<double>(z >> 11) * 0x1.0p-52 - 1.0;
    }
};

double norm2(const std::vector<Scalar>& v) {
    double s = 0.0;
    for (const Scalar& x : v) s += std::norm(x);
    return std::sqrt(s);
}

} // namespace

double spectral_norm(const std::vector<std::vector<Scalar>>& M) {
    const size_t p = M.size();
    const size_t q = p == 0 ? 0 : M[0].size();
    if (p == 0 || q == 0) return 0.0;
    SplitMix rng{0x5EEDull};
    std::vector<Scalar> v(q);
    for (Scalar& x : v) x = {rng.next(), rng.next()};
    double nv = norm2(v);
    for (Scalar& x : v) x /= nv;

    std::vector<Scalar> u(p);
    double prev = -1.0;
    for (int it = 0; it < kMaxPowerIterations; ++it) {
        for (size_t i = 0; i < p; ++i) {
            Scalar s = 0.0;
            for (size_t j = 0; j < q; ++j) s += M[i][j] * v[j];
            u[i] = s;
        }
        // With v a unit vector, |Mv| rises monotonically to the norm.
        const double est = norm2(u);
        if (est == 0.0) return 0.0;
        if (std::abs(est - prev) <= kPowerTolerance * std::max(1.0, est)) return est;
        prev = est;
        for (size_t j = 0; j < q; ++j) {
            Scalar s = 0.0;
            for (size_t i = 0; i < p; ++i) s += std::conj(M[i][j]) * u[i];
            v[j] = s;
        }
        nv = norm2(v);
        if (nv == 0.0) return est;
        for (Scalar& x : v) x /= nv;
    }
    return prev;
}

Entourage extract_coarse_relation(const BandOperator& U, double delta, Dist R, Dist r) {
    if (U.row_fiber != 1 || U.col_fiber != 1)
        fail(ErrorCode::nonconformable, "extract: operator must have scalar fibers");
    if (!(delta > 0.0 && delta < 1.0))
        fail(ErrorCode::param_out_of_range, "extract: threshold must lie strictly in (0,1)");
    if (R < 0 || r < 0) fail(ErrorCode::param_out_of_range, "extract: negative block diameter");

    std::vector<std::vector<std::pair<int, Scalar>>> row_entries(
        static_cast<size_t>(U.rows->size()));
    for (const auto& [k, v] : U.entries)
        row_entries[static_cast<size_t>(k.row_pt)].push_back({k.col_pt, v});

    std::set<std::pair<int, int>> found;
    for (int y = 0; y < U.rows->size(); ++y) {
        std::vector<int> B = U.rows->ball(y, R / 2);
        for (int x = 0; x < U.cols->size(); ++x) {
            std::vector<int> A = U.cols->ball(x, r / 2);
            std::vector<int> col_pos(static_cast<size_t>(U.cols->size()), -1);
            for (size_t j = 0; j < A.size(); ++j) col_pos[static_cast<size_t>(A[j])] = static_cast<int>(j);
            std::vector<std::vector<Scalar>> block(B.size(), std::vector<Scalar>(A.size(), 0.0));
            bool any = false;
            for (size_t i = 0; i < B.size(); ++i)
                for (const auto& [c, v] : row_entries[static_cast<size_t>(B[i])])
                    if (col_pos[static_cast<size_t>(c)] >= 0) {
                        block[i][static_cast<size_t>(col_pos[static_cast<size_t>(c)])] = v;
                        any = true;
                    }
            if (!any || spectral_norm(block) <= delta) continue;
            for (int b : B)
                for (int a : A) found.emplace(b, a);
        }
    }
    return make_entourage(U.rows, U.cols, {found.begin(), found.end()});
}

Alpha0Result alpha0(const UFChain& h, Dist R) {
    H0Class cls = h0_class(h, R);
    Alpha0Result out;
    out.space = cls.space;
    out.scale = R;
    for (const auto& [root, sum] : cls.component_sums) {
        out.roots.push_back(root);
        out.values.push_back(sum);
    }
    return out;
}

Alpha0Check alpha0_injectivity_check(const MetricSpace& X, Dist R) {
    if (R < 0) fail(ErrorCode::param_out_of_range, "alpha0 check: negative scale");
    const int n = X.size();
    Alpha0Check out;
    out.scale = R;
    out.component_count = components_at_scale(X, R).count;

    // Boundary matrix: one column delta_b - delta_a per unordered pair at
    // distance <= R; its cokernel is degree-0 homology at scale R.
    std::vector<std::pair<int, int>> cols;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (X.dist(a, b) <= R) cols.emplace_back(a, b);
    IntMatrix M(static_cast<size_t>(n), std::vector<Int>(cols.size(), 0));
    for (size_t j = 0; j < cols.size(); ++j) {
        M[static_cast<size_t>(cols[j].first)][j] = -1;
        M[static_cast<size_t>(cols[j].second)][j] = 1;
    }
    SmithResult snf = smith_normal_form(M);
    out.matrix_rank = snf.rank;
    out.h0_rank = n - snf.rank;
    out.divisors = snf.divisors;
    out.divisors_all_one =
        std::all_of(snf.divisors.begin(), snf.divisors.end(), [](const Int& d) { return d == 1; });
    out.ranks_agree = out.h0_rank == out.component_count;
    out.pass = out.divisors_all_one && out.ranks_agree;
    return out;
}

BandOperator block_operator(const std::vector<std::vector<BandOperator>>& blocks) {
    const int n = static_cast<int>(blocks.size());
    if (n == 0) fail(ErrorCode::nonconformable, "block_operator: empty block matrix");
    for (const auto& row : blocks)
        if (static_cast<int>(row.size()) != n)
            fail(ErrorCode::nonconformable, "block_operator: block matrix must be square");
    const BandOperator& first = blocks[0][0];
    if (!same_space(*first.rows, *first.cols))
        fail(ErrorCode::nonconformable, "block_operator: blocks must act on one space");
    for (const auto& row : blocks)
        for (const BandOperator& b : row)
            if (!same_space(*b.rows, *first.rows) || !same_space(*b.cols, *first.rows) ||
                b.row_fiber != first.row_fiber || b.col_fiber != first.col_fiber)
                fail(ErrorCode::nonconformable, "block_operator: mismatched block shape");
    SpacePtr doubled = doubling(*first.rows, n);
    BandOperator out = zero_operator(doubled, doubled, first.row_fiber, first.col_fiber);
    // Fiber copy i of base point x sits at doubled index x*n + i.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [k, v] : blocks[static_cast<size_t>(i)][static_cast<size_t>(j)].entries)
                out.entries[{k.row_pt * n + i, k.row_f, k.col_pt * n + j, k.col_f}] = v;
    return out;
}

} // namespace coarsekit
