#include "coarsekit/matching.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <random>

namespace coarsekit {

namespace {
constexpr int kInf = std::numeric_limits<int>::max();
}

BipartiteMatching hopcroft_karp(int n_left, int n_right,
                                const std::vector<std::vector<int>>& adj_in,
                                std::uint64_t seed) {
    std::vector<std::vector<int>> adj = adj_in;
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        for (auto& row : adj) std::shuffle(row.begin(), row.end(), rng);
    }

    BipartiteMatching m;
    m.left_match.assign(static_cast<size_t>(n_left), -1);
    m.right_match.assign(static_cast<size_t>(n_right), -1);

    std::vector<int> layer(static_cast<size_t>(n_left));

    auto bfs = [&]() {
        std::deque<int> queue;
        for (int u = 0; u < n_left; ++u) {
            if (m.left_match[static_cast<size_t>(u)] < 0) {
                layer[static_cast<size_t>(u)] = 0;
                queue.push_back(u);
            } else {
                layer[static_cast<size_t>(u)] = kInf;
            }
        }
        bool reachable_free = false;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj[static_cast<size_t>(u)]) {
                int w = m.right_match[static_cast<size_t>(v)];
                if (w < 0) {
                    reachable_free = true;
                } else if (layer[static_cast<size_t>(w)] == kInf) {
                    layer[static_cast<size_t>(w)] = layer[static_cast<size_t>(u)] + 1;
                    queue.push_back(w);
                }
            }
        }
        return reachable_free;
    };

    std::function<bool(int)> dfs = [&](int u) -> bool {
        for (int v : adj[static_cast<size_t>(u)]) {
            int w = m.right_match[static_cast<size_t>(v)];
            if (w < 0 || (layer[static_cast<size_t>(w)] == layer[static_cast<size_t>(u)] + 1 && dfs(w))) {
                m.left_match[static_cast<size_t>(u)] = v;
                m.right_match[static_cast<size_t>(v)] = u;
                return true;
            }
        }
        layer[static_cast<size_t>(u)] = kInf;
        return false;
    };

    while (bfs())
        for (int u = 0; u < n_left; ++u)
            if (m.left_match[static_cast<size_t>(u)] < 0 && dfs(u)) ++m.size;
    return m;
}

std::vector<int> hall_violator_left(const BipartiteMatching& m,
                                    const std::vector<std::vector<int>>& adj) {
    const int n_left = static_cast<int>(m.left_match.size());
    std::vector<bool> seen_left(static_cast<size_t>(n_left), false);
    std::vector<bool> seen_right(m.right_match.size(), false);
    std::deque<int> queue;
    for (int u = 0; u < n_left; ++u)
        if (m.left_match[static_cast<size_t>(u)] < 0) {
            seen_left[static_cast<size_t>(u)] = true;
            queue.push_back(u);
        }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adj[static_cast<size_t>(u)]) {
            if (seen_right[static_cast<size_t>(v)]) continue;
            seen_right[static_cast<size_t>(v)] = true;
            int w = m.right_match[static_cast<size_t>(v)];
            // v unmatched would mean an augmenting path; cannot happen at optimum.
            if (w >= 0 && !seen_left[static_cast<size_t>(w)]) {
                seen_left[static_cast<size_t>(w)] = true;
                queue.push_back(w);
            }
        }
    }
    std::vector<int> out;
    for (int u = 0; u < n_left; ++u)
        if (seen_left[static_cast<size_t>(u)]) out.push_back(u);
    return out;
}

} // namespace coarsekit
