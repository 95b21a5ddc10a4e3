#pragma once

// Entourages (finite relations near the diagonal), their composition
// calculus, and partial translations.
//
// Pair orientation is fixed as (target, source) everywhere: the graph of a
// map f sits inside target x source as {(f(x), x)}. The degree-1 boundary
// signs in the homology module depend on this convention.

#include <optional>
#include <utility>
#include <vector>

#include "coarsekit/coarse_map.hpp"
#include "coarsekit/space.hpp"

namespace coarsekit {

struct Entourage {
    SpacePtr left;  // target side
    SpacePtr right; // source side
    std::vector<std::pair<int, int>> pairs; // sorted, unique, (left idx, right idx)

    bool same_sides() const { return same_space(*left, *right); }
    bool empty() const { return pairs.empty(); }
    int size() const { return static_cast<int>(pairs.size()); }
    bool contains(int a, int b) const;

    // Max over pairs of dist(left, right); requires left = right.
    Dist width() const;
};

Entourage make_entourage(SpacePtr left, SpacePtr right,
                         std::vector<std::pair<int, int>> pairs);

Entourage diagonal(SpacePtr X);

// {(y,x) : (x,y) in E}.
Entourage adjoint(const Entourage& E);

// E o F = {(x,z) : exists y with (x,y) in E and (y,z) in F}.
Entourage compose(const Entourage& E, const Entourage& F);

// Graph(f) = {(f(x), x)} inside target x source.
Entourage graph_of(const CoarseMap& f);

bool entourage_subset(const Entourage& A, const Entourage& B);
Entourage entourage_union(const Entourage& A, const Entourage& B);

// Max of the largest out-degree (left coordinate multiplicity) and largest
// in-degree (right coordinate multiplicity): the Koenig color bound.
int max_degree(const Entourage& E);

// Partially defined injective self-map with bounded displacement.
struct PartialTranslation {
    SpacePtr space;
    std::vector<std::pair<int, int>> table; // sorted by source: (x, t(x)), injective

    Dist displacement() const;
    std::vector<int> domain() const;
    std::vector<int> range() const;
    Entourage graph() const; // pairs (t(x), x)
    int size() const { return static_cast<int>(table.size()); }
};

PartialTranslation make_translation(SpacePtr space, std::vector<std::pair<int, int>> table);
PartialTranslation identity_translation(SpacePtr X);

// Partition of a same-sides entourage into graphs of partial translations
// via proper bipartite edge coloring with exactly max_degree(E) colors.
std::vector<PartialTranslation> decompose(const Entourage& E);

// Least R with mutual ball coverage of the two relations, or nullopt
// ("unbounded") when exactly one side is empty.
std::optional<Dist> asymptotic_parameter(const Entourage& S1, const Entourage& S2);

} // namespace coarsekit
