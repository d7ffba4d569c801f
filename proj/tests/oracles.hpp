#ifndef RAINBOWDOM_TEST_ORACLES_HPP
#define RAINBOWDOM_TEST_ORACLES_HPP

// Independent reference implementations used as oracles. Deliberately written
// against the raw adjacency structure, not the library's verification or
// search paths.

#include <cstdint>
#include <deque>
#include <vector>

#include "rainbowdom/graph.hpp"

namespace oracles {

// Exhaustive minimum over all (2^t)^n assignments. Only call on tiny inputs.
inline int brute_force_optimum(const rainbowdom::Graph& g, int t) {
    const int n = g.n_vertices();
    const std::uint32_t full = (1u << t) - 1u;
    std::vector<std::uint32_t> sets(n, 0);
    int best = -1;
    while (true) {
        int w = 0;
        for (std::uint32_t s : sets) w += __builtin_popcount(s);
        if (best == -1 || w < best) {
            bool valid = true;
            for (int v = 0; v < n && valid; ++v) {
                if (sets[v] != 0) continue;
                std::uint32_t seen = 0;
                for (int u : g.neighbors(v)) seen |= sets[u];
                valid = seen == full;
            }
            if (valid) best = w;
        }
        int pos = 0;
        while (pos < n && sets[pos] == full) sets[pos++] = 0;
        if (pos == n) break;
        ++sets[pos];
    }
    return best;
}

// Shortest cycle length via breadth-first search from every vertex; -1 when
// the graph is a forest.
inline int bfs_girth(const rainbowdom::Graph& g) {
    const int n = g.n_vertices();
    int girth = -1;
    for (int root = 0; root < n; ++root) {
        std::vector<int> dist(n, -1), parent(n, -1);
        dist[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (w != parent[v]) {
                    const int cycle = dist[v] + dist[w] + 1;
                    if (girth == -1 || cycle < girth) girth = cycle;
                }
            }
        }
    }
    return girth;
}

// Independent 2-colorability check (recursive coloring, not the library BFS).
inline bool two_colorable(const rainbowdom::Graph& g) {
    const int n = g.n_vertices();
    std::vector<int> color(n, -1);
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Small deterministic generator for property tests.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }

    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

private:
    std::uint64_t state_;
};

} // namespace oracles

#endif
