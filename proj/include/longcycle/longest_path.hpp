#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "longcycle/graph.hpp"
#include "longcycle/rng.hpp"

// Longest-path measurement: an exact bitmask dynamic program for n <= 24 and
// a rotation-extension heuristic for larger graphs. The exact solver breaks
// ties by lexicographically smallest vertex sequence.

namespace longcycle {

namespace detail {

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v)
        for (int w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= (1u << w);
    return adj;
}

// Does a simple path of `need` vertices starting at v exist using only
// vertices of `avail` (v excluded from avail)?  Memoized on (v, avail): for a
// fixed target length the needed count is a function of |avail|, so the key
// is complete. Used only for reconstruction, after the DP fixed the optimum.
class PathFeasibility {
public:
    PathFeasibility(const std::vector<std::uint32_t>& adj) : adj_(adj) {}

    bool can_reach(int v, std::uint32_t avail, int need) {
        if (need <= 1) return true;
        const std::uint64_t key = (static_cast<std::uint64_t>(avail) << 5) | static_cast<unsigned>(v);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        bool ok = false;
        std::uint32_t cand = adj_[static_cast<std::size_t>(v)] & avail;
        while (cand) {
            const int u = std::countr_zero(cand);
            cand &= cand - 1;
            if (can_reach(u, avail & ~(1u << u), need - 1)) {
                ok = true;
                break;
            }
        }
        memo_.emplace(key, ok);
        return ok;
    }

private:
    const std::vector<std::uint32_t>& adj_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

} // namespace detail

// Exact longest simple path via DP over vertex subsets: dp[mask] holds the set
// of endpoints v such that some path covering exactly `mask` ends at v.
// Cap n <= 24: the dp table is 2^n 32-bit words.
inline CycleWalk longest_path_exact(const Graph& g) {
    const int n = g.n();
    if (n < 1) throw std::invalid_argument("longest_path_exact: empty graph");
    if (n > 24)
        throw std::invalid_argument(
            "longest_path_exact: n > 24; use longest_path_rotation for large graphs");

    const auto adj = detail::adjacency_masks(g);
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
    std::vector<std::uint32_t> dp(static_cast<std::size_t>(full) + 1, 0);
    for (int v = 0; v < n; ++v) dp[1u << v] = 1u << v;

    int best_len = 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t ends = dp[mask];
        if (!ends) continue;
        const int len = std::popcount(mask);
        if (len > best_len) best_len = len;
        while (ends) {
            const int v = std::countr_zero(ends);
            ends &= ends - 1;
            std::uint32_t ext = adj[static_cast<std::size_t>(v)] & ~mask;
            while (ext) {
                const int u = std::countr_zero(ext);
                ext &= ext - 1;
                dp[mask | (1u << u)] |= 1u << u;
            }
        }
    }

    // Reconstruct the lexicographically smallest optimum greedily from the
    // front; feasibility queries are memoized DFS (paths are reversible in an
    // undirected graph, so "starts at v" and "ends at v" coincide).
    detail::PathFeasibility feas(adj);
    CycleWalk walk;
    walk.closed = false;
    std::uint32_t avail = full;
    int prev = -1;
    for (int pos = 0; pos < best_len; ++pos) {
        const int need = best_len - pos;
        std::uint32_t cand = (prev < 0) ? avail : (adj[static_cast<std::size_t>(prev)] & avail);
        bool advanced = false;
        while (cand) {
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            if (feas.can_reach(v, avail & ~(1u << v), need)) {
                walk.vertices.push_back(v);
                avail &= ~(1u << v);
                prev = v;
                advanced = true;
                break;
            }
        }
        if (!advanced)
            throw std::logic_error("longest_path_exact: reconstruction failed"); // unreachable
    }
    return walk;
}

// Rotation-extension heuristic. Restarts over start vertices (each tried at
// most once); each attempt greedily extends at both ends (smallest-id
// neighbor first) and, when blocked, rotates about a uniformly random chord
// endpoint. Extensions are free; the budget counts rotation steps across all
// restarts, so a greedy completion never stops early. Deterministic per seed;
// the result is at least as long as the best pure greedy extension among the
// starts tried.
inline CycleWalk longest_path_rotation(const Graph& g, long long budget, std::uint64_t seed) {
    const int n = g.n();
    if (n < 1) throw std::invalid_argument("longest_path_rotation: empty graph");
    if (budget < 1) throw std::invalid_argument("longest_path_rotation: budget < 1");

    Rng rng(seed);
    std::vector<int> best{0};
    std::vector<int> path;
    std::vector<int> pos(static_cast<std::size_t>(n)); // position in path, -1 if absent
    path.reserve(static_cast<std::size_t>(n));

    long long steps = 0; // rotation steps consumed
    for (int start = 0; start < n; ++start) {
        path.clear();
        std::fill(pos.begin(), pos.end(), -1);
        path.push_back(start);
        pos[static_cast<std::size_t>(start)] = 0;

        int stale = 0; // rotations since last extension; bail when saturated
        while (static_cast<int>(path.size()) < n && stale <= 2 * n + 4) {
            // extension-first: try the back end, then the front end
            bool extended = false;
            for (int side = 0; side < 2 && !extended; ++side) {
                const int tip = side == 0 ? path.back() : path.front();
                for (int w : g.neighbors(tip)) {
                    if (pos[static_cast<std::size_t>(w)] >= 0) continue;
                    if (side == 0) {
                        path.push_back(w);
                    } else {
                        path.insert(path.begin(), w);
                    }
                    extended = true;
                    break;
                }
            }
            if (extended) {
                for (std::size_t i = 0; i < path.size(); ++i)
                    pos[static_cast<std::size_t>(path[i])] = static_cast<int>(i);
                stale = 0;
                continue;
            }
            if (steps >= budget) break;
            ++steps;
            // blocked: rotate about a random chord from the back endpoint.
            // path ...-u-w-...-z with edge (z,u): reverse the tail after u.
            const int z = path.back();
            const auto& nb = g.neighbors(z);
            if (nb.size() <= 1) break; // endpoint degree too small to rotate
            const int u = nb[static_cast<std::size_t>(rng.uniform_below(nb.size()))];
            const int pu = pos[static_cast<std::size_t>(u)];
            if (pu < 0 || u == z || pu + 1 >= static_cast<int>(path.size()) - 1) {
                ++stale;
                continue; // not a useful chord
            }
            std::reverse(path.begin() + pu + 1, path.end());
            for (std::size_t i = static_cast<std::size_t>(pu) + 1; i < path.size(); ++i)
                pos[static_cast<std::size_t>(path[i])] = static_cast<int>(i);
            ++stale;
        }
        if (path.size() > best.size()) best = path;
        if (static_cast<int>(best.size()) == n || steps >= budget) break;
    }

    CycleWalk w;
    w.vertices = std::move(best);
    w.closed = false;
    return w;
}

// Event A_i: every vertex of the induced subgraph on V minus {exclude} has
// degree at least t0 within that subgraph.
inline bool min_degree_event(const Graph& g, int exclude, int t0) {
    if (exclude < 0 || exclude >= g.n())
        throw std::invalid_argument("min_degree_event: exclude out of range");
    for (int v = 0; v < g.n(); ++v) {
        if (v == exclude) continue;
        int d = g.degree(v);
        if (g.has_edge(v, exclude)) --d;
        if (d < t0) return false;
    }
    return true;
}

} // namespace longcycle
