#pragma once

// Sparse band operators between fibered coordinate spaces.
//
// An operator acts from l2(col_space) x C^{col_fiber} to l2(row_space) x
// C^{row_fiber}. Entries are complex, but support is structural: an absent
// entry is exactly zero, and arithmetic drops results whose magnitude falls
// below kDropTolerance so cancellation cannot manufacture phantom support.
// Sums, products and adjoints obey the support calculus
//
//   supp(A + B)  subset of  supp(A) union supp(B)
//   supp(A B)    subset of  supp(A) compose supp(B)
//   supp(A*)     =          supp(A) reversed
//
// and propagation is always derived from the support, never declared.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "coarsekit/coarse_map.hpp"
#include "coarsekit/entourage.hpp"
#include "coarsekit/homology.hpp"
#include "coarsekit/space.hpp"

namespace coarsekit {

using Scalar = std::complex<double>;

// Magnitude floor applied after add/multiply; entries below it are erased.
inline constexpr double kDropTolerance = 1e-12;

// Power-iteration settings for block spectral norms.
inline constexpr double kPowerTolerance = 1e-10;
inline constexpr int kMaxPowerIterations = 10000;

struct EntryKey {
    int row_pt;
    int row_f;
    int col_pt;
    int col_f;

    friend auto operator<=>(const EntryKey&, const EntryKey&) = default;
};

struct BandOperator {
    SpacePtr rows;
    SpacePtr cols;
    int row_fiber = 1;
    int col_fiber = 1;
    std::map<EntryKey, Scalar> entries; // stored entries are nonzero

    Scalar at(const EntryKey& k) const;
    Scalar at(int row_pt, int col_pt) const { return at({row_pt, 0, col_pt, 0}); }
};

// Validates ranges and drops exact zeros; the map becomes the entry table.
BandOperator make_band_operator(SpacePtr rows, SpacePtr cols, int row_fiber, int col_fiber,
                                std::map<EntryKey, Scalar> entries);

BandOperator zero_operator(SpacePtr rows, SpacePtr cols, int row_fiber = 1, int col_fiber = 1);
BandOperator identity_operator(SpacePtr X, int fiber = 1);

// Exact structural equality: same spaces, fibers and entry tables.
bool operator==(const BandOperator& A, const BandOperator& B);

BandOperator add(const BandOperator& A, const BandOperator& B);
BandOperator negate_op(const BandOperator& A);
BandOperator multiply(const BandOperator& A, const BandOperator& B);
BandOperator adjoint_op(const BandOperator& A);

// Distinct (row point, col point) pairs as an entourage on rows x cols.
Entourage support(const BandOperator& A);

// Max distance over the support; requires rows and cols to be the same
// space (nonconformable otherwise), 0 for the zero operator.
Dist propagation(const BandOperator& A);

// v with v(delta_x) = delta_{t(x)} on dom(t), zero elsewhere; vv* and v*v
// are exactly the diagonal projections onto ran(t) and dom(t).
BandOperator isometry_from_translation(const PartialTranslation& t);

// Recipe for the covering isometry of a finite-to-one map: each source
// point carries its 0-based position within its fiber (ordered by point
// index); the fiber of the output is split into the interleaved blocks
// {m : m mod N == slot}, so the k-th fiber member sends coordinate n to
// n*N + k. Output fiber dimension is N*D: the blocks must tile enough room
// for every fiber member to embed D coordinates disjointly.
struct UniformCoverPlan {
    CoarseMap f;
    int fiber_dim = 1;          // D, the source truncation
    int max_fiber_size = 1;     // N
    std::vector<int> slot;      // per source point, position in its fiber
};

// Rejects D < N (an interleaved block would be empty below the truncation).
UniformCoverPlan make_uniform_cover_plan(CoarseMap f, int fiber_dim);

// The 0/1 isometry S with S(delta_x x delta_n) = delta_{f(x)} x
// delta_{n*N + slot(x)}; S*S = I exactly and supp(S) = Graph(f).
BandOperator uniform_cover(const UniformCoverPlan& plan);

// Row fiber coordinates hit by entries whose column fiber lies in V, and
// the reverse scan; the coordinate-subspace witnesses for covers.
std::vector<int> fiber_image(const BandOperator& T, const std::vector<int>& V);
std::vector<int> fiber_preimage(const BandOperator& T, const std::vector<int>& W);

// S T S*.
BandOperator conjugate(const BandOperator& S, const BandOperator& T);

// Checked band bound for conjugation: when supp(S) lies within radius r1 of
// Graph(f), prop(S T S*) <= expansion_modulus(f, prop(T)) + 2*r1.
struct ConjugationBound {
    Dist prop_t = 0;
    Dist cover_radius = 0; // r1, computed from S and f when not supplied
    Dist bound = 0;        // expansion_modulus(f, prop_t) + 2*r1
    Dist prop_result = 0;
    bool covered = false;  // supp(S) within cover_radius of Graph(f)
    bool ok = false;       // covered and prop_result <= bound
};

ConjugationBound check_conjugation_bound(const BandOperator& S, const BandOperator& T,
                                         const CoarseMap& f,
                                         std::optional<Dist> cover_radius = std::nullopt);

// Largest singular value by power iteration on M*M (deterministic seeded
// start, kPowerTolerance, kMaxPowerIterations).
double spectral_norm(const std::vector<std::vector<Scalar>>& M);

// Union of B x A over ball blocks B = B_{R/2}(y), A = B_{r/2}(x) whose
// submatrix spectral norm exceeds delta. Requires fiber dims 1 and
// delta in (0,1).
Entourage extract_coarse_relation(const BandOperator& U, double delta, Dist R, Dist r);

// Per-component sums of a degree-0 chain: the class of the diagonal
// projection-with-multiplicities in the scale-R band algebra, whose
// K-theory is the rank vector over R-components.
struct Alpha0Result {
    SpacePtr space;
    Dist scale = 0;
    std::vector<int> roots;  // sorted component representatives
    std::vector<Int> values; // aligned with roots
};

Alpha0Result alpha0(const UFChain& h, Dist R);

// Degree-0 homology at scale R computed two ways: Smith normal form of the
// boundary matrix over pairs at distance <= R, and component sums. The
// comparison map is injective iff the cokernel is free of rank exactly the
// number of components, i.e. all elementary divisors are 1 and the ranks
// agree.
struct Alpha0Check {
    Dist scale = 0;
    int component_count = 0;
    std::int64_t matrix_rank = 0; // rank of the boundary matrix
    std::int64_t h0_rank = 0;     // |X| - matrix_rank
    std::vector<Int> divisors;
    bool divisors_all_one = false;
    bool ranks_agree = false;
    bool pass = false;
};

Alpha0Check alpha0_injectivity_check(const MetricSpace& X, Dist R);

// n x n block matrix of operators on a common space X, realized as one
// operator on doubling(X, n): entry ((x,i),(y,j)) = blocks[i][j](x,y).
// This is an algebra embedding; propagation grows by at most n-1.
BandOperator block_operator(const std::vector<std::vector<BandOperator>>& blocks);

} // namespace coarsekit
