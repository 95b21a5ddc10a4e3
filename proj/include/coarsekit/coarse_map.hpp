#pragma once

// Total maps between finite metric spaces with exact coarse moduli.
//
// On finite spaces every map is coarse, so the interesting content is
// quantitative: the expansion modulus at each scale, pointwise closeness of
// two maps, and fiber cardinality bounds. All are computed exactly by
// enumeration.

#include <string>
#include <vector>

#include "coarsekit/space.hpp"

namespace coarsekit {

struct CoarseMap {
    SpacePtr source;
    SpacePtr target;
    std::vector<int> table; // per source index: target index
    std::string label;

    int apply(int x) const { return table[static_cast<size_t>(x)]; }
};

CoarseMap make_coarse_map(SpacePtr source, SpacePtr target, std::vector<int> table,
                          std::string label = "");

CoarseMap identity_map(SpacePtr X);

// g after f; requires f.target and g.source to agree structurally.
CoarseMap compose(const CoarseMap& g, const CoarseMap& f);

// Least S with: d(x,x') <= R implies d(f(x),f(x')) <= S.
Dist expansion_modulus(const CoarseMap& f, Dist R);

// sup_x d(f(x), g(x)); requires shared source and target.
Dist closeness(const CoarseMap& f, const CoarseMap& g);

// Largest preimage cardinality; f is uniformly max_fiber-to-one.
int max_fiber(const CoarseMap& f);

// Defect of g as a coarse inverse of f: closeness(f o g, id) and
// closeness(g o f, id).
struct EquivalenceDefect {
    Dist fg_vs_id; // on f.target
    Dist gf_vs_id; // on f.source
};

EquivalenceDefect equivalence_defect(const CoarseMap& f, const CoarseMap& g);

} // namespace coarsekit
