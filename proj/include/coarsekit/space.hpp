#pragma once

// Finite metric spaces with exact nonnegative integer distances.
//
// A space is the desk-scale stand-in for a uniformly locally finite metric
// space: every construction here (graph metrics, lattice subsets, doublings,
// height subspaces) is integer valued, so growth, connectivity and homology
// downstream never meet a rounding question.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coarsekit/errors.hpp"

namespace coarsekit {

using Dist = std::int64_t;

class MetricSpace;
using SpacePtr = std::shared_ptr<const MetricSpace>;

class MetricSpace {
public:
    // Explicit distance matrix, validated against the three metric axioms.
    static SpacePtr from_matrix(std::string label, std::vector<std::string> points,
                                std::vector<Dist> row_major);

    // Connected undirected graph with unit edge weights; distances by BFS.
    static SpacePtr from_graph(std::string label, std::vector<std::string> points,
                               const std::vector<std::pair<std::string, std::string>>& edges);

    // Subset of Z^k with the l1 metric; coords aligned with the point list.
    static SpacePtr from_lattice(std::string label, std::vector<std::string> points,
                                 const std::vector<std::vector<std::int64_t>>& coords);

    const std::string& label() const { return label_; }
    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<std::string>& points() const { return points_; }
    const std::string& point_id(int i) const { return points_[static_cast<size_t>(i)]; }

    // Index of a point id; throws unresolved_label when absent.
    int index_of(const std::string& id) const;
    std::optional<int> find(const std::string& id) const;

    Dist dist(int i, int j) const {
        return dist_[static_cast<size_t>(i) * points_.size() + static_cast<size_t>(j)];
    }
    const std::vector<Dist>& dist_matrix() const { return dist_; }

    Dist diameter() const;

    // Sorted indices of the closed ball of the given radius.
    std::vector<int> ball(int center, Dist radius) const;

private:
    MetricSpace(std::string label, std::vector<std::string> points, std::vector<Dist> dist)
        : label_(std::move(label)), points_(std::move(points)), dist_(std::move(dist)) {}

    static void check_ids(const std::vector<std::string>& points);
    static SpacePtr checked(std::string label, std::vector<std::string> points,
                            std::vector<Dist> dist, bool full_axiom_check);

    friend SpacePtr doubling(const MetricSpace& X, int n);
    friend SpacePtr subspace(const MetricSpace& X, const std::vector<int>& members,
                             const std::string& label);

    std::string label_;
    std::vector<std::string> points_;
    std::vector<Dist> dist_; // row major, size n*n
};

// Structural identity: same point ids in the same order, same distances.
// Labels are bookkeeping and do not take part.
bool same_space(const MetricSpace& a, const MetricSpace& b);

// max over x of |B_R(x)|; the growth profile at scale R.
std::int64_t growth_profile(const MetricSpace& X, Dist R);

// X x {1..n} with d((x,i),(y,j)) = d(x,y) + |i-j|.  Point ids become "(id,i)",
// grouped by base point: (x,1),...,(x,n) are consecutive.
SpacePtr doubling(const MetricSpace& X, int n);

// Metric restriction to a nonempty, strictly increasing index set.
SpacePtr subspace(const MetricSpace& X, const std::vector<int>& members,
                  const std::string& label = "");

// Positive integer height function on a space.
struct HeightFunction {
    SpacePtr base;
    std::vector<std::int64_t> values; // one per base point, every value >= 1

    std::int64_t bound() const;
    std::int64_t total() const;
};

HeightFunction make_height(SpacePtr base, std::vector<std::int64_t> values);

// The subspace {(x,i) : 1 <= i <= h(x)} of doubling(base, bound(h)), with the
// origin table mapping each point back to (base index, fiber index).
struct HeightSpace {
    SpacePtr space;
    SpacePtr base;
    std::vector<std::pair<int, int>> origin; // per point: (base index, fiber 1..h)

    // Index of (base point b, fiber i) in space; throws when out of range.
    int locate(int base_index, int fiber) const;
};

HeightSpace space_of_height(const HeightFunction& h, const std::string& label = "");

// Partition of the points into classes of the transitive closure of
// {dist <= R}; roots are the least member index of each class.
struct Components {
    Dist scale = 0;
    std::vector<int> root; // per point: canonical representative (min index)
    int count = 0;

    std::vector<std::vector<int>> classes() const; // ordered by root
    std::vector<int> roots() const;                // sorted
};

Components components_at_scale(const MetricSpace& X, Dist R);

} // namespace coarsekit
