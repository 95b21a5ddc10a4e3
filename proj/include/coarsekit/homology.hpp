#pragma once

// Uniformly finite chains in degrees 0..2 with exact integer coefficients.
//
// A degree-n chain is a finitely supported Z-valued function on ordered
// (n+1)-tuples of points; its propagation is the largest pairwise distance
// inside a supported tuple. The boundary follows the alternating-sum formula
// with a point inserted at each slot; together with the (target, source)
// pair orientation this makes the boundary of the indicator of a
// translation's graph equal to 1_dom - 1_ran.
//
// Coefficients are arbitrary-precision integers: no silent wraparound.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "coarsekit/coarse_map.hpp"
#include "coarsekit/entourage.hpp"
#include "coarsekit/smith.hpp"
#include "coarsekit/space.hpp"

namespace coarsekit {

using Tuple = std::vector<int>; // point indices, arity = degree + 1

class UFChain {
public:
    UFChain(SpacePtr space, int degree);

    SpacePtr space() const { return space_; }
    int degree() const { return degree_; }
    const std::map<Tuple, Int>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    int support_size() const { return static_cast<int>(coeffs_.size()); }
    Int at(const Tuple& t) const;

    // Accumulate c into the tuple's coefficient; zero results are dropped.
    void add(const Tuple& t, const Int& c);

    // Max over supported tuples of the max pairwise distance (0 in degree 0).
    Dist propagation() const;

private:
    SpacePtr space_;
    int degree_;
    std::map<Tuple, Int> coeffs_;
};

bool operator==(const UFChain& a, const UFChain& b);

UFChain add(const UFChain& a, const UFChain& b);
UFChain negate(const UFChain& a);
UFChain subtract(const UFChain& a, const UFChain& b);

// 1_X in degree 0: the fundamental class at desk scale.
UFChain fundamental_class(SpacePtr X);

// Degree-1 indicator of a same-sides entourage (tuples in pair order).
UFChain indicator_chain(const Entourage& E);

// Degree-0 chain from a height function.
UFChain chain_of_height(const HeightFunction& h);

// The alternating-sum boundary; degree must be 1 or 2.
UFChain boundary(const UFChain& c);

// 1_dom(t) - 1_ran(t), the closed form of boundary(indicator of Graph(t)).
UFChain boundary_of_translation(const PartialTranslation& t);

// f_*(c)(ybar) = sum of c over tuples mapping to ybar componentwise.
UFChain pushforward(const CoarseMap& f, const UFChain& c);

// Per-component sums of a degree-0 chain at scale R. Components with zero
// sum are kept so that equality of classes is map equality.
struct H0Class {
    SpacePtr space;
    Dist scale = 0;
    std::map<int, Int> component_sums; // keyed by component root index
};

bool operator==(const H0Class& a, const H0Class& b);

H0Class h0_class(const UFChain& h, Dist R);

// When every R-component sum of g vanishes, a degree-1 chain c with
// propagation <= R and boundary(c) = g, built by routing the surplus along a
// BFS spanning tree of each component; otherwise nullopt.
std::optional<UFChain> class_witness(const UFChain& g, Dist R);

struct HallCertificate {
    std::string side;      // "X" (source) or "Y" (target)
    std::vector<int> set;  // vertex indices on that side
    std::int64_t neighborhood_size = 0;
};

struct BijectivizeResult {
    std::optional<CoarseMap> bijection;        // g with d(f(x), g(x)) <= S
    std::optional<HallCertificate> certificate;
    Dist scale = 0;
};

// Maximum matching on {(x,y) : d(f(x),y) <= S}; a perfect matching is the
// bijectivization, failure yields a Hall violator.
BijectivizeResult bijectivize(const CoarseMap& f, Dist S, std::uint64_t seed = 0);

// Projection of a bijection g : X(h1) -> X(h2) to a degree-1 cycle delta on
// the base, delta(x,y) = #{(i,j) : g(y,i) = (x,j)}; boundary(delta) equals
// chain(h1) - chain(h2) and is re-verified before returning.
UFChain bijection_to_cycle(const HeightSpace& X1, const HeightSpace& X2,
                           const std::vector<int>& g);

struct TheoremAResult {
    bool classes_equal = false;
    H0Class class1, class2;
    HeightSpace hs1, hs2;
    CoarseMap nearest_base;                    // X(h1) -> X(h2)
    std::optional<Dist> minimal_scale;
    std::optional<CoarseMap> bijection;        // X(h1) -> X(h2)
    std::optional<UFChain> cycle;              // degree 1 on the base
    bool cycle_verified = false;
    std::vector<std::pair<Dist, int>> sweep;   // (S, matching size)
    std::optional<HallCertificate> final_certificate;
};

// Equal-class route to a bounded-displacement bijection: compare degree-0
// classes at scale R; when equal, sweep S upward on bijectivize of the
// nearest-base-point map until a bijection appears (guaranteed at the
// diameter of X(h2)), then project it to a cycle and verify its boundary.
TheoremAResult pipeline_theorem_a(const HeightFunction& h1, const HeightFunction& h2,
                                  Dist R, std::uint64_t seed = 0);

} // namespace coarsekit
