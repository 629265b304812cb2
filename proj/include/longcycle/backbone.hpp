#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "longcycle/graph.hpp"
#include "longcycle/tiling.hpp"

// Backbone layer: left-right / bottom-top crossings of dense squares inside
// bands, the all-bands-cross event F_n, the backbone (star-connected dense
// component containing every selected crossing), and the event report
// (F_n, I_n, J_n, H_n, X_O).

namespace longcycle {

// An ordered sequence of dense, consecutively plus-adjacent squares running
// from the band's near side to its far side.
struct Crossing {
    Band band;
    std::vector<int> squares;
};

struct Backbone {
    std::vector<int> squares;        // sorted square ids; star-connected closure
    std::vector<Crossing> crossings; // the selected per-band crossings
    bool connected = false;          // star-connectivity verified
    bool fallback = false;           // built from largest dense component (F_n failed)
};

struct BackboneBuild {
    std::optional<Backbone> backbone;
    bool F_n = false;
};

struct EventReport {
    bool F_n = false;
    bool I_n = false; // some dense star-component other than the backbone exists
    bool J_n = false; // some square has all star-neighbors sparse
    bool H_n = false; // F_n and not I_n and not J_n
    long long X_O = 0;                // n minus backbone_component_size
    int backbone_component_size = 0;  // vertices in the backbone's graph component
};

namespace detail {

// Deterministic lowest-first crossing extraction, written in (along, cross)
// coordinates: `along` runs 0..k-1 across the band, `cross` runs over the
// band's rows (horizontal) or columns (vertical). Neighbor preference
// cross-1, along+1, cross+1, along-1 gives the lowermost (resp. leftmost)
// crossing. Only dense in-band squares are traversed, so the path satisfies
// the crossing conditions by construction.
inline std::optional<std::vector<int>> crossing_path(const Tiling& t, const Band& band) {
    const int k = t.k();
    auto id_at = [&](int along, int cross) {
        return band.horizontal ? t.id(along, cross) : t.id(cross, along);
    };
    auto ok = [&](int along, int cross) {
        return along >= 0 && along < k && cross >= band.lo && cross < band.hi &&
               t.dense(id_at(along, cross));
    };
    constexpr int PREF[4][2] = {{0, -1}, {1, 0}, {0, 1}, {-1, 0}}; // (d_along, d_cross)
    for (int c0 = band.lo; c0 < band.hi; ++c0) {
        if (!ok(0, c0)) continue;
        std::vector<char> seen(static_cast<std::size_t>(t.square_count()), 0);
        std::vector<std::array<int, 3>> stack; // along, cross, next preference index
        seen[static_cast<std::size_t>(id_at(0, c0))] = 1;
        stack.push_back({0, c0, 0});
        while (!stack.empty()) {
            const int a = stack.back()[0], c = stack.back()[1];
            if (a == k - 1) {
                std::vector<int> path;
                path.reserve(stack.size());
                for (const auto& e : stack) path.push_back(id_at(e[0], e[1]));
                return path;
            }
            int pi = stack.back()[2];
            bool pushed = false;
            while (pi < 4) {
                const int na = a + PREF[pi][0], nc = c + PREF[pi][1];
                ++pi;
                if (!ok(na, nc)) continue;
                const int nid = id_at(na, nc);
                if (seen[static_cast<std::size_t>(nid)]) continue;
                stack.back()[2] = pi;
                seen[static_cast<std::size_t>(nid)] = 1;
                stack.push_back({na, nc, 0});
                pushed = true;
                break;
            }
            if (!pushed) stack.pop_back();
        }
    }
    return std::nullopt;
}

// Star-connected components over dense squares: comp[id] in [0, n_comps) for
// dense squares (numbered in square-id order of first visit), -1 otherwise.
inline std::vector<int> dense_star_components(const Tiling& t, int& n_comps) {
    std::vector<int> comp(static_cast<std::size_t>(t.square_count()), -1);
    n_comps = 0;
    std::vector<int> frontier;
    for (int start = 0; start < t.square_count(); ++start) {
        if (!t.dense(start) || comp[static_cast<std::size_t>(start)] >= 0) continue;
        const int c = n_comps++;
        comp[static_cast<std::size_t>(start)] = c;
        frontier.assign(1, start);
        while (!frontier.empty()) {
            const int id = frontier.back();
            frontier.pop_back();
            t.for_star_neighbors(id, [&](int nb) {
                if (t.dense(nb) && comp[static_cast<std::size_t>(nb)] < 0) {
                    comp[static_cast<std::size_t>(nb)] = c;
                    frontier.push_back(nb);
                }
            });
        }
    }
    return comp;
}

} // namespace detail

// Empty string if `c` is a valid crossing of its band: squares distinct and
// dense, inside the band, consecutively plus-adjacent, endpoints touching the
// band's near and far sides.
inline std::string check_crossing(const Tiling& t, const Crossing& c) {
    if (c.squares.empty()) return "crossing has no squares";
    const int k = t.k();
    std::vector<char> used(static_cast<std::size_t>(t.square_count()), 0);
    for (std::size_t i = 0; i < c.squares.size(); ++i) {
        const int id = c.squares[i];
        if (id < 0 || id >= t.square_count()) return "square id out of range";
        if (used[static_cast<std::size_t>(id)]) return "square repeated in crossing";
        used[static_cast<std::size_t>(id)] = 1;
        if (!t.dense(id)) return "crossing square is not dense";
        const int along = c.band.horizontal ? t.col(id) : t.row(id);
        const int cross = c.band.horizontal ? t.row(id) : t.col(id);
        if (cross < c.band.lo || cross >= c.band.hi) return "crossing leaves its band";
        if (i == 0 && along != 0) return "crossing does not touch the near side";
        if (i + 1 == c.squares.size() && along != k - 1)
            return "crossing does not touch the far side";
        if (i > 0) {
            const int prev = c.squares[i - 1];
            const int da = std::abs(t.col(id) - t.col(prev));
            const int db = std::abs(t.row(id) - t.row(prev));
            if (da + db != 1) return "consecutive squares not plus-adjacent";
        }
    }
    return "";
}

inline std::optional<Crossing> find_crossing(const Tiling& t, const Band& band) {
    if (band.lo < 0 || band.hi > t.k() || band.lo >= band.hi)
        throw std::invalid_argument("find_crossing: band outside the tiling");
    auto path = detail::crossing_path(t, band);
    if (!path) return std::nullopt;
    return Crossing{band, std::move(*path)};
}

// F_n = every band (both orientations) admits a crossing. When F_n holds the
// backbone is the star-connected dense component containing all selected
// crossings (any left-right plus-crossing meets any bottom-top one, so there
// is exactly one such component). When F_n fails, the largest star-connected
// dense component is returned instead, flagged as fallback; with no dense
// squares at all the backbone is absent.
inline BackboneBuild build_backbone(const Tiling& t, const BandSet& horizontal,
                                    const BandSet& vertical) {
    BackboneBuild out;
    std::vector<Crossing> crossings;
    bool all_cross = true;
    for (const BandSet* bs : {&horizontal, &vertical}) {
        for (const Band& band : bs->bands) {
            auto c = find_crossing(t, band);
            if (c)
                crossings.push_back(std::move(*c));
            else
                all_cross = false;
        }
    }
    out.F_n = all_cross;

    int n_comps = 0;
    const auto comp = detail::dense_star_components(t, n_comps);
    if (n_comps == 0) return out;

    Backbone bb;
    bb.crossings = std::move(crossings);
    if (all_cross) {
        std::vector<char> hit(static_cast<std::size_t>(n_comps), 0);
        int n_hit = 0;
        for (const auto& c : bb.crossings)
            for (int id : c.squares) {
                char& h = hit[static_cast<std::size_t>(comp[static_cast<std::size_t>(id)])];
                if (!h) {
                    h = 1;
                    ++n_hit;
                }
            }
        bb.connected = (n_hit == 1);
        for (int id = 0; id < t.square_count(); ++id) {
            const int c = comp[static_cast<std::size_t>(id)];
            if (c >= 0 && hit[static_cast<std::size_t>(c)]) bb.squares.push_back(id);
        }
        bb.fallback = false;
    } else {
        std::vector<int> size(static_cast<std::size_t>(n_comps), 0);
        for (int id = 0; id < t.square_count(); ++id)
            if (comp[static_cast<std::size_t>(id)] >= 0)
                ++size[static_cast<std::size_t>(comp[static_cast<std::size_t>(id)])];
        const int best = static_cast<int>(
            std::max_element(size.begin(), size.end()) - size.begin());
        for (int id = 0; id < t.square_count(); ++id)
            if (comp[static_cast<std::size_t>(id)] == best) bb.squares.push_back(id);
        bb.connected = true;
        bb.fallback = true;
    }
    out.backbone = std::move(bb);
    return out;
}

// Empty string if every vertex pair inside one backbone square or across a
// star-adjacent pair of backbone squares is an edge of g — the geometric
// guarantee the cycle construction relies on.
inline std::string check_backbone_geometry(const Tiling& t, const Backbone& bb,
                                           const Graph& g) {
    std::vector<char> inb(static_cast<std::size_t>(t.square_count()), 0);
    for (int id : bb.squares) inb[static_cast<std::size_t>(id)] = 1;
    std::string err;
    auto check_pair = [&](int u, int v) {
        if (err.empty() && !g.has_edge(u, v))
            err = "missing edge between vertices " + std::to_string(u) + " and " +
                  std::to_string(v) + " of star-adjacent backbone squares";
    };
    for (int id : bb.squares) {
        const auto& vs = t.vertices_in(id);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) check_pair(vs[i], vs[j]);
        t.for_star_neighbors(id, [&](int nb) {
            if (nb < id || !inb[static_cast<std::size_t>(nb)]) return;
            for (int u : vs)
                for (int v : t.vertices_in(nb)) check_pair(u, v);
        });
        if (!err.empty()) return err;
    }
    return err;
}

// Event report for one (tiling, backbone, graph) triple. X_O counts the
// vertices outside the graph component that contains the backbone's vertices.
inline EventReport detect_events(const Tiling& t, const BackboneBuild& bb, const Graph& g) {
    EventReport rep;
    rep.F_n = bb.F_n;

    if (bb.backbone) {
        std::vector<char> inb(static_cast<std::size_t>(t.square_count()), 0);
        for (int id : bb.backbone->squares) inb[static_cast<std::size_t>(id)] = 1;
        for (int id = 0; id < t.square_count(); ++id)
            if (t.dense(id) && !inb[static_cast<std::size_t>(id)]) {
                rep.I_n = true;
                break;
            }
    } else {
        rep.I_n = t.dense_count() > 0;
    }

    for (int id = 0; id < t.square_count() && !rep.J_n; ++id) {
        bool all_sparse = true;
        t.for_star_neighbors(id, [&](int nb) {
            if (t.dense(nb)) all_sparse = false;
        });
        if (all_sparse) rep.J_n = true;
    }

    rep.H_n = rep.F_n && !rep.I_n && !rep.J_n;

    if (bb.backbone && !bb.backbone->squares.empty()) {
        const std::string geom = check_backbone_geometry(t, *bb.backbone, g);
        if (!geom.empty()) throw std::logic_error("detect_events: " + geom);
        std::vector<char> reached(static_cast<std::size_t>(g.n()), 0);
        std::vector<int> frontier;
        for (int id : bb.backbone->squares)
            for (int v : t.vertices_in(id))
                if (!reached[static_cast<std::size_t>(v)]) {
                    reached[static_cast<std::size_t>(v)] = 1;
                    frontier.push_back(v);
                }
        while (!frontier.empty()) {
            const int v = frontier.back();
            frontier.pop_back();
            for (int w : g.neighbors(v))
                if (!reached[static_cast<std::size_t>(w)]) {
                    reached[static_cast<std::size_t>(w)] = 1;
                    frontier.push_back(w);
                }
        }
        for (char c : reached) rep.backbone_component_size += c;
    }
    rep.X_O = g.n() - rep.backbone_component_size;
    return rep;
}

} // namespace longcycle
