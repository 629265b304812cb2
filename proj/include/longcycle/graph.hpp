#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Core graph value types shared by every module: undirected simple graphs on
// vertices 0..n-1 with sorted adjacency, and path/cycle walks.

namespace longcycle {

class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(checked_count(n)), adj_(static_cast<std::size_t>(n_)) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [a, b] : edges) g.add_edge(a, b);
        g.finalize();
        return g;
    }

    // Edges may arrive in any order and orientation; duplicates rejected.
    void add_edge(int a, int b) {
        check_vertex(a);
        check_vertex(b);
        if (a == b) throw std::invalid_argument("Graph: self-loop rejected");
        adj_[static_cast<std::size_t>(a)].push_back(b);
        adj_[static_cast<std::size_t>(b)].push_back(a);
        ++m_;
    }

    // Sort adjacency and verify simplicity. Must be called after the last
    // add_edge and before queries; from_edges does it automatically.
    void finalize() {
        for (auto& nb : adj_) {
            std::sort(nb.begin(), nb.end());
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
                throw std::invalid_argument("Graph: duplicate edge rejected");
        }
        finalized_ = true;
    }

    int n() const { return n_; }
    long long m() const { return m_; }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int a, int b) const {
        check_vertex(a);
        check_vertex(b);
        const auto& nb = adj_[static_cast<std::size_t>(a)];
        return std::binary_search(nb.begin(), nb.end(), b);
    }

    // Edge list in canonical order: (i,j) with i<j, ascending.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int v = 0; v < n_; ++v)
            for (int w : adj_[static_cast<std::size_t>(v)])
                if (v < w) out.emplace_back(v, w);
        return out;
    }

private:
    static int checked_count(int n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        return n;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
    }

    int n_ = 0;
    long long m_ = 0;
    bool finalized_ = false;
    std::vector<std::vector<int>> adj_;
};

// A walk through distinct vertices; `closed` marks a cycle (last connects
// back to first). Invariant: a closed walk has at least 3 vertices.
struct CycleWalk {
    std::vector<int> vertices;
    bool closed = false;

    int length() const { return static_cast<int>(vertices.size()); }
};

// Checks that a walk is a simple path/cycle of `g`. Returns an empty string
// on success, otherwise a description of the first violation found.
inline std::string check_walk(const CycleWalk& w, const Graph& g) {
    const auto& vs = w.vertices;
    if (w.closed && vs.size() < 3) return "closed walk with fewer than 3 vertices";
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    for (int v : vs) {
        if (v < 0 || v >= g.n()) return "vertex out of range: " + std::to_string(v);
        if (seen[static_cast<std::size_t>(v)]) return "repeated vertex: " + std::to_string(v);
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        if (!g.has_edge(vs[i], vs[i + 1]))
            return "missing edge (" + std::to_string(vs[i]) + "," + std::to_string(vs[i + 1]) + ")";
    if (w.closed && !g.has_edge(vs.back(), vs.front()))
        return "missing closing edge (" + std::to_string(vs.back()) + "," +
               std::to_string(vs.front()) + ")";
    return {};
}

// ===== text formats =====
//
// Graph: first line "n m", then one line "i j" per edge with i<j, ascending.
// Walk: first line "cycle k" (closed) or "path k" (open), then k vertex ids,
// one per line, walk order.

inline void write_graph(std::ostream& os, const Graph& g) {
    os << g.n() << ' ' << g.m() << '\n';
    for (auto [a, b] : g.edges()) os << a << ' ' << b << '\n';
}

inline Graph read_graph(std::istream& is) {
    int n = 0;
    long long m = 0;
    if (!(is >> n >> m)) throw std::invalid_argument("graph parse: bad header");
    Graph g(n);
    for (long long e = 0; e < m; ++e) {
        int a = 0, b = 0;
        if (!(is >> a >> b)) throw std::invalid_argument("graph parse: truncated edge list");
        if (a >= b) throw std::invalid_argument("graph parse: edges must be i<j");
        g.add_edge(a, b);
    }
    g.finalize();
    return g;
}

inline void write_cycle(std::ostream& os, const CycleWalk& w) {
    os << (w.closed ? "cycle " : "path ") << w.length() << '\n';
    for (int v : w.vertices) os << v << '\n';
}

} // namespace longcycle
