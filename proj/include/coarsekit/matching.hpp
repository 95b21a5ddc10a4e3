#pragma once

// Maximum bipartite matching (Hopcroft-Karp) with Hall certificates
// extracted from the final alternating-reachability cut.

#include <cstdint>
#include <vector>

namespace coarsekit {

struct BipartiteMatching {
    std::vector<int> left_match;  // per left vertex: right partner or -1
    std::vector<int> right_match; // per right vertex: left partner or -1
    int size = 0;
};

// adj[u] lists the right neighbors of left vertex u. A nonzero seed shuffles
// the adjacency order, reseating tie-breaks; the result is deterministic for
// a fixed seed.
BipartiteMatching hopcroft_karp(int n_left, int n_right,
                                const std::vector<std::vector<int>>& adj,
                                std::uint64_t seed = 0);

// After a maximum matching that is not left-perfect: the set W of left
// vertices reachable from unmatched left vertices by alternating paths.
// Every neighbor of W is matched into W, so |N(W)| = |W| - (number of
// unmatched vertices in W) < |W|: a Hall violator.
std::vector<int> hall_violator_left(const BipartiteMatching& m,
                                    const std::vector<std::vector<int>>& adj);

} // namespace coarsekit
