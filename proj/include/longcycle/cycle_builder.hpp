#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "longcycle/backbone.hpp"
#include "longcycle/graph.hpp"
#include "longcycle/rgg.hpp"
#include "longcycle/tiling.hpp"

// Constructive engine: per-square cycles, the backbone merge producing the
// long cycle, the sparse-square extension producing the Hamiltonian cycle,
// and validation. Construction failures (ledger exhaustion, missing dense
// neighbor) are first-class reported outcomes, never silent and never fatal.

namespace longcycle {

// Cycle over all given vertices in ascending id order. The caller guarantees
// the vertices share a tiling square, so mutual adjacency is geometric.
inline CycleWalk square_cycle(std::vector<int> vertices) {
    if (vertices.size() < 3)
        throw std::invalid_argument("square_cycle: need at least 3 vertices");
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw std::invalid_argument("square_cycle: duplicate vertex");
    return CycleWalk{std::move(vertices), true};
}

struct ValidationReport {
    bool pass = false;
    std::string first_violation; // empty iff pass
};

// Distinctness + adjacency of every consecutive pair and the closing pair;
// with a point cloud, every hop's distance is recomputed and must be < r.
inline ValidationReport validate_cycle(const CycleWalk& walk, const Graph& g,
                                       const PointCloud* cloud = nullptr) {
    ValidationReport rep;
    rep.first_violation = check_walk(walk, g);
    if (!rep.first_violation.empty()) return rep;
    if (cloud != nullptr) {
        const double r2 = cloud->r * cloud->r;
        const std::size_t m = walk.vertices.size();
        for (std::size_t i = 0; i < m; ++i) {
            const int u = walk.vertices[i];
            const int v = walk.vertices[(i + 1) % m];
            if (!walk.closed && i + 1 == m) break;
            if (!(dist2(cloud->points[static_cast<std::size_t>(u)],
                        cloud->points[static_cast<std::size_t>(v)]) < r2)) {
                rep.first_violation = "hop (" + std::to_string(u) + "," + std::to_string(v) +
                                      ") has distance >= r";
                return rep;
            }
        }
    }
    rep.pass = true;
    return rep;
}

// Outcome of a construction stage. `cycle` holds whatever was built so far
// even on failure, so partial progress stays inspectable.
struct BuildOutcome {
    CycleWalk cycle;
    bool ok = false;
    std::string failure;  // empty iff ok
    int failed_square = -1;
    std::vector<std::string> warnings;
};

// Working state shared by the merge and the sparse extension: the current
// cycle, the per-square ledger of surviving square-cycle edges, the processed
// set, and a log of invariant violations. A square's cycle edge "survives"
// while its endpoints are still consecutive in the current cycle; removals
// are counted per square so the at-most-one-removal-per-step bookkeeping can
// be checked after every splice.
class MergeState {
public:
    MergeState(const Tiling& t, const Graph& g)
        : t_(&t),
          g_(&g),
          pos_(static_cast<std::size_t>(g.n()), -1),
          processed_(static_cast<std::size_t>(t.square_count()), 0),
          removed_count_(static_cast<std::size_t>(t.square_count()), 0) {}

    void start_cycle(const CycleWalk& cycle) {
        seq_ = cycle.vertices;
        std::fill(pos_.begin(), pos_.end(), -1);
        for (std::size_t i = 0; i < seq_.size(); ++i)
            pos_[static_cast<std::size_t>(seq_[i])] = static_cast<int>(i);
    }

    void mark_processed(int square) { processed_[static_cast<std::size_t>(square)] = 1; }
    bool processed(int square) const { return processed_[static_cast<std::size_t>(square)] != 0; }
    int removed_count(int square) const {
        return removed_count_[static_cast<std::size_t>(square)];
    }
    const std::vector<int>& sequence() const { return seq_; }
    const std::vector<std::string>& log() const { return log_; }
    CycleWalk cycle() const { return CycleWalk{seq_, true}; }

    bool in_cycle(int v) const { return pos_[static_cast<std::size_t>(v)] >= 0; }

    // First edge of `square`'s ascending cycle, in canonical order
    // (consecutive ascending pairs, then the closing pair), whose endpoints
    // are currently consecutive in the cycle. Such edges are exactly the
    // square's surviving cycle edges.
    std::optional<std::pair<int, int>> first_surviving_edge(int square) const {
        std::vector<int> vs = t_->vertices_in(square);
        std::sort(vs.begin(), vs.end());
        const std::size_t m = vs.size();
        if (m < 2) return std::nullopt;
        for (std::size_t i = 0; i + 1 < m; ++i)
            if (consecutive(vs[i], vs[i + 1])) return std::make_pair(vs[i], vs[i + 1]);
        if (m >= 3 && consecutive(vs[0], vs[m - 1])) return std::make_pair(vs[0], vs[m - 1]);
        return std::nullopt;
    }

    // Replace edge (u,v), u < v, of the current cycle by the path
    // u - path.front() - ... - path.back() - v and charge the removal to
    // `owner_square`'s ledger. Returns an error message instead of splicing
    // if a required cross edge is absent from the graph.
    std::string splice(std::pair<int, int> removed, const std::vector<int>& path,
                       int owner_square) {
        const int u = removed.first, v = removed.second;
        if (path.empty()) return "splice: empty path";
        if (!g_->has_edge(u, path.front()) || !g_->has_edge(v, path.back()))
            return "splice: cross edge missing between squares";
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (!g_->has_edge(path[i], path[i + 1])) return "splice: path edge missing";
        const int L = static_cast<int>(seq_.size());
        const int pu = pos_[static_cast<std::size_t>(u)];
        const int pv = pos_[static_cast<std::size_t>(v)];
        if (pu < 0 || pv < 0) throw std::logic_error("splice: endpoint not in cycle");
        int idx = -1;
        bool forward = true;
        if ((pu + 1) % L == pv) {
            idx = pu + 1; // u then v; path forward so path.front() meets u
            forward = true;
        } else if ((pv + 1) % L == pu) {
            idx = pv + 1; // v then u; path reversed so path.back() meets v
            forward = false;
        } else {
            throw std::logic_error("splice: removed edge not consecutive in cycle");
        }
        std::vector<int> ins(path);
        if (!forward) std::reverse(ins.begin(), ins.end());
        seq_.insert(seq_.begin() + idx, ins.begin(), ins.end());
        for (std::size_t i = static_cast<std::size_t>(idx); i < seq_.size(); ++i)
            pos_[static_cast<std::size_t>(seq_[i])] = static_cast<int>(i);
        ++removed_count_[static_cast<std::size_t>(owner_square)];
        check_ledger_invariant(owner_square);
        return "";
    }

private:
    bool consecutive(int a, int b) const {
        const int pa = pos_[static_cast<std::size_t>(a)];
        const int pb = pos_[static_cast<std::size_t>(b)];
        if (pa < 0 || pb < 0) return false;
        const int L = static_cast<int>(seq_.size());
        const int d = std::abs(pa - pb);
        return d == 1 || d == L - 1;
    }

    // Bookkeeping check: removals charged to a square never exceed the number
    // of processed star-adjacent squares, and stay below the square's cycle
    // length (7 < 8 for dense squares). Violations are logged, not fatal: the
    // construction itself remains valid as long as splices keep succeeding.
    void check_ledger_invariant(int square) {
        int processed_adjacent = 0;
        t_->for_star_neighbors(square, [&](int nb) {
            if (processed_[static_cast<std::size_t>(nb)]) ++processed_adjacent;
        });
        const int rc = removed_count_[static_cast<std::size_t>(square)];
        if (rc > processed_adjacent || rc > 7) {
            log_.push_back("ledger bookkeeping bound exceeded at square " +
                           std::to_string(square) + ": removed " + std::to_string(rc) +
                           ", processed-adjacent " + std::to_string(processed_adjacent));
            assert(false && "ledger bookkeeping bound exceeded");
        }
    }

    const Tiling* t_;
    const Graph* g_;
    std::vector<int> seq_;
    std::vector<int> pos_;
    std::vector<char> processed_;
    std::vector<int> removed_count_;
    std::vector<std::string> log_;
};

namespace detail {

// Square ids of the backbone in breadth-first order from the lowest-indexed
// square, following star adjacency restricted to backbone squares. Throws if
// the backbone is not star-connected.
inline std::vector<int> backbone_bfs_order(const Tiling& t, const Backbone& b) {
    if (b.squares.empty()) throw std::invalid_argument("merge: backbone is empty");
    std::vector<char> inb(static_cast<std::size_t>(t.square_count()), 0);
    for (int id : b.squares) inb[static_cast<std::size_t>(id)] = 1;
    const int root = *std::min_element(b.squares.begin(), b.squares.end());
    std::vector<int> order;
    std::vector<char> seen(static_cast<std::size_t>(t.square_count()), 0);
    seen[static_cast<std::size_t>(root)] = 1;
    order.push_back(root);
    for (std::size_t head = 0; head < order.size(); ++head) {
        t.for_star_neighbors(order[head], [&](int nb) {
            if (inb[static_cast<std::size_t>(nb)] && !seen[static_cast<std::size_t>(nb)]) {
                seen[static_cast<std::size_t>(nb)] = 1;
                order.push_back(nb);
            }
        });
    }
    if (order.size() != b.squares.size())
        throw std::invalid_argument("merge: backbone is not star-connected");
    return order;
}

inline std::vector<int> sorted_vertices(const Tiling& t, int square) {
    std::vector<int> vs = t.vertices_in(square);
    std::sort(vs.begin(), vs.end());
    return vs;
}

} // namespace detail

// Long cycle over exactly the vertices of the backbone squares. Squares are
// merged in breadth-first order from the lowest-indexed square; each new
// square's cycle loses its closing edge to become an ascending path (a..b),
// an edge (u,v) surviving in the lowest-indexed processed star-adjacent
// square is removed from the current cycle, and the path is attached through
// the cross edges (a,u) and (b,v).
inline BuildOutcome merge_backbone_cycles(const Tiling& t, const Backbone& b, const Graph& g) {
    BuildOutcome out;
    for (int id : b.squares)
        if (!t.dense(id))
            throw std::invalid_argument("merge: backbone square " + std::to_string(id) +
                                        " is not dense");
    const std::vector<int> order = detail::backbone_bfs_order(t, b);

    MergeState st(t, g);
    st.start_cycle(square_cycle(t.vertices_in(order[0])));
    st.mark_processed(order[0]);

    for (std::size_t i = 1; i < order.size(); ++i) {
        const int sq = order[i];
        // attach square: lowest-id processed star-neighbor with a surviving edge
        int attach = -1;
        std::pair<int, int> removed{-1, -1};
        std::vector<int> nbs;
        t.for_star_neighbors(sq, [&](int nb) {
            if (st.processed(nb)) nbs.push_back(nb);
        });
        std::sort(nbs.begin(), nbs.end());
        for (int nb : nbs) {
            auto e = st.first_surviving_edge(nb);
            if (e) {
                attach = nb;
                removed = *e;
                break;
            }
        }
        if (attach < 0) {
            out.cycle = st.cycle();
            out.failure = "ledger exhausted: no removable edge adjacent to square " +
                          std::to_string(sq);
            out.failed_square = sq;
            out.warnings = st.log();
            return out;
        }
        const std::vector<int> path = detail::sorted_vertices(t, sq);
        st.mark_processed(sq);
        const std::string err = st.splice(removed, path, attach);
        if (!err.empty()) {
            out.cycle = st.cycle();
            out.failure = err + " (square " + std::to_string(sq) + ")";
            out.failed_square = sq;
            out.warnings = st.log();
            return out;
        }
#ifndef NDEBUG
        assert(check_walk(st.cycle(), g).empty());
#endif
    }
    out.cycle = st.cycle();
    out.ok = true;
    out.warnings = st.log();
    return out;
}

// Hamiltonian extension: every nonempty sparse (non-dense) square's vertices,
// as one ascending path, are spliced into the cycle through the lowest-id
// dense backbone star-neighbor that still has a surviving edge. A nonempty
// sparse square with no dense backbone star-neighbor, or with every such
// neighbor's ledger exhausted, is a reported failure.
inline BuildOutcome extend_with_sparse(const CycleWalk& tau, const Tiling& t, const Backbone& b,
                                       const Graph& g) {
    BuildOutcome out;
    std::vector<char> inb(static_cast<std::size_t>(t.square_count()), 0);
    for (int id : b.squares) inb[static_cast<std::size_t>(id)] = 1;

    MergeState st(t, g);
    st.start_cycle(tau);
    for (int id : b.squares) st.mark_processed(id);

    for (int sq = 0; sq < t.square_count(); ++sq) {
        if (inb[static_cast<std::size_t>(sq)] || t.dense(sq)) continue;
        if (t.vertices_in(sq).empty()) continue;
        std::vector<int> dense_nbs;
        t.for_star_neighbors(sq, [&](int nb) {
            if (inb[static_cast<std::size_t>(nb)] && t.dense(nb)) dense_nbs.push_back(nb);
        });
        std::sort(dense_nbs.begin(), dense_nbs.end());
        if (dense_nbs.empty()) {
            out.cycle = st.cycle();
            out.failure = "sparse square " + std::to_string(sq) +
                          " has no dense backbone star-neighbor";
            out.failed_square = sq;
            out.warnings = st.log();
            return out;
        }
        int attach = -1;
        std::pair<int, int> removed{-1, -1};
        for (int nb : dense_nbs) {
            auto e = st.first_surviving_edge(nb);
            if (e) {
                attach = nb;
                removed = *e;
                break;
            }
        }
        if (attach < 0) {
            out.cycle = st.cycle();
            out.failure = "ledger exhausted: no removable edge adjacent to sparse square " +
                          std::to_string(sq);
            out.failed_square = sq;
            out.warnings = st.log();
            return out;
        }
        const std::vector<int> path = detail::sorted_vertices(t, sq);
        st.mark_processed(sq);
        const std::string err = st.splice(removed, path, attach);
        if (!err.empty()) {
            out.cycle = st.cycle();
            out.failure = err + " (sparse square " + std::to_string(sq) + ")";
            out.failed_square = sq;
            out.warnings = st.log();
            return out;
        }
#ifndef NDEBUG
        assert(check_walk(st.cycle(), g).empty());
#endif
    }
    out.cycle = st.cycle();
    out.ok = true;
    out.warnings = st.log();
    return out;
}

} // namespace longcycle
