#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "harness.hpp"

// Verification suite. Each check returns a CheckResult with a one-line
// verdict; checks 1-8 are the required acceptance gate, the supplementary
// checks (9-11) re-run the constructive pipeline in parameter regimes where
// its success events occur with substantial probability, so the
// "100% of qualifying trials" clauses of checks 4 and 5 and the frequency
// gap of check 6 are exercised non-vacuously.
//
// Every oracle here is implemented independently of the code under test:
// permutation scan instead of the bitmask solver, log-gamma binomial sums
// instead of the closed-form bound, queue-based flood fills over raw flag
// arrays instead of the tiling/backbone classes, and a quadratic
// distance-matrix BFS instead of the bucket-grid graph.

namespace longcycle {
namespace verify {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool required = true;  // false for the supplementary regime checks
    std::string detail;
    double seconds = 0.0;
};

enum class VerifyLevel { fast, full };

namespace detail {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

inline std::string fmt1(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

inline std::string secs(double s) { return fmt1("%.1f", s) + "s"; }

// Oracle for check 1: the longest path visits `run` vertices for the best
// prefix over all vertex permutations. Every simple path is a prefix of some
// permutation, so the maximum prefix run equals the longest path.
inline int brute_force_longest_path(const Graph& g) {
    const int n = g.n();
    if (n == 0) return 0;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    int best = 1;
    do {
        int run = 1;
        for (int i = 1; i < n; ++i) {
            if (!g.has_edge(perm[static_cast<std::size_t>(i - 1)],
                            perm[static_cast<std::size_t>(i)]))
                break;
            ++run;
        }
        if (run > best) best = run;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Oracle for check 2: exact P(|Bin(n,p) - np| >= alpha np) summed in long
// double via log-gamma, entirely separate from the Chernoff-side code.
inline double binomial_two_sided_tail(int n, double p, double alpha) {
    const long double lp = std::log(static_cast<long double>(p));
    const long double lq = std::log1p(-static_cast<long double>(p));
    const long double mu = static_cast<long double>(n) * p;
    const long double lgn = std::lgamma(static_cast<long double>(n) + 1.0L);
    long double acc = 0.0L;
    for (int k = 0; k <= n; ++k) {
        if (std::fabs(static_cast<long double>(k) - mu) < alpha * mu) continue;
        const long double logpmf = lgn - std::lgamma(static_cast<long double>(k) + 1.0L) -
                                   std::lgamma(static_cast<long double>(n - k) + 1.0L) +
                                   k * lp + (n - k) * lq;
        acc += std::exp(logpmf);
    }
    if (acc > 1.0L) acc = 1.0L;
    return static_cast<double>(acc);
}

// Synthetic k x k grid instance for check 8: `counts[id]` points are placed
// in square id at its center plus a tiny per-point x offset, small enough to
// keep every within-square and star-adjacent distance strictly below r while
// leaving the binning untouched.
inline PointCloud make_grid_cloud(int k, const std::vector<int>& counts, double r) {
    PointCloud cloud;
    cloud.r = r;
    const double s = 1.0 / static_cast<double>(k);
    for (int b = 0; b < k; ++b)
        for (int a = 0; a < k; ++a) {
            const int id = b * k + a;
            const double cx = -0.5 + (a + 0.5) * s;
            const double cy = -0.5 + (b + 0.5) * s;
            for (int j = 0; j < counts[static_cast<std::size_t>(id)]; ++j)
                cloud.points.push_back({cx + (j + 1) * 1e-4, cy});
        }
    return cloud;
}

// Queue flood fill over dense squares restricted to a band, edge adjacency
// only; reports whether the far side is reached and one reached far-side
// square (for the backbone-component identification below).
inline bool oracle_band_crossing(int k, const std::vector<char>& dense, int lo, int hi,
                                 bool horizontal, int* far_square = nullptr) {
    auto id_at = [&](int along, int cross) {
        return horizontal ? cross * k + along : along * k + cross;
    };
    std::vector<char> seen(static_cast<std::size_t>(k) * k, 0);
    std::vector<std::pair<int, int>> queue;
    for (int c = lo; c < hi; ++c)
        if (dense[static_cast<std::size_t>(id_at(0, c))]) {
            queue.emplace_back(0, c);
            seen[static_cast<std::size_t>(id_at(0, c))] = 1;
        }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto [along, cross] = queue[head];
        if (along == k - 1) {
            if (far_square != nullptr) *far_square = id_at(along, cross);
            return true;
        }
        constexpr int D[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (const auto& d : D) {
            const int na = along + d[0], nc = cross + d[1];
            if (na < 0 || na >= k || nc < lo || nc >= hi) continue;
            const int nid = id_at(na, nc);
            if (seen[static_cast<std::size_t>(nid)] || !dense[static_cast<std::size_t>(nid)])
                continue;
            seen[static_cast<std::size_t>(nid)] = 1;
            queue.emplace_back(na, nc);
        }
    }
    return false;
}

// Star (8-neighbor) components of the dense squares; component ids are
// assigned in order of the smallest square id they contain.
inline std::vector<int> oracle_star_components(int k, const std::vector<char>& dense,
                                               int& n_comps) {
    std::vector<int> comp(static_cast<std::size_t>(k) * k, -1);
    n_comps = 0;
    for (int start = 0; start < k * k; ++start) {
        if (!dense[static_cast<std::size_t>(start)] || comp[static_cast<std::size_t>(start)] >= 0)
            continue;
        std::vector<int> queue{start};
        comp[static_cast<std::size_t>(start)] = n_comps;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int id = queue[head];
            const int a = id % k, b = id / k;
            for (int db = -1; db <= 1; ++db)
                for (int da = -1; da <= 1; ++da) {
                    if (da == 0 && db == 0) continue;
                    const int na = a + da, nb = b + db;
                    if (na < 0 || nb < 0 || na >= k || nb >= k) continue;
                    const int nid = nb * k + na;
                    if (!dense[static_cast<std::size_t>(nid)] ||
                        comp[static_cast<std::size_t>(nid)] >= 0)
                        continue;
                    comp[static_cast<std::size_t>(nid)] = n_comps;
                    queue.push_back(nid);
                }
        }
        ++n_comps;
    }
    return comp;
}

struct OracleReport {
    bool F = false, I = false, J = false, H = false;
    long long X_O = 0;
    int backbone_component_size = 0;
    std::vector<char> band_cross;  // horizontal bands in order, then vertical
};

// Independent recount of the event indicators and the outside-vertex count
// for a grid case: literal definitions over the raw flag array, plus a
// quadratic distance-matrix BFS for the graph side.
inline OracleReport oracle_events(int k, const std::vector<char>& dense, int band_height,
                                  const PointCloud& cloud) {
    OracleReport rep;
    auto band_list = [&](bool) {
        std::vector<std::pair<int, int>> v;
        if (band_height >= k) {
            v.emplace_back(0, k);
            return v;
        }
        for (int lo = 0; lo + band_height <= k; lo += band_height)
            v.emplace_back(lo, lo + band_height);
        if (k % band_height != 0) v.emplace_back(k - band_height, k);
        return v;
    };

    bool all_cross = true;
    int far_square = -1;
    for (bool horizontal : {true, false})
        for (const auto& [lo, hi] : band_list(horizontal)) {
            int fs = -1;
            const bool crossed = oracle_band_crossing(k, dense, lo, hi, horizontal, &fs);
            rep.band_cross.push_back(crossed ? 1 : 0);
            all_cross = all_cross && crossed;
            if (crossed && far_square < 0) far_square = fs;
        }
    rep.F = all_cross;

    int n_comps = 0;
    const std::vector<int> comp = oracle_star_components(k, dense, n_comps);
    rep.I = n_comps >= 2;

    for (int id = 0; id < k * k && !rep.J; ++id) {
        const int a = id % k, b = id / k;
        bool any_dense = false;
        for (int db = -1; db <= 1 && !any_dense; ++db)
            for (int da = -1; da <= 1; ++da) {
                if (da == 0 && db == 0) continue;
                const int na = a + da, nb = b + db;
                if (na < 0 || nb < 0 || na >= k || nb >= k) continue;
                if (dense[static_cast<std::size_t>(nb * k + na)]) {
                    any_dense = true;
                    break;
                }
            }
        if (!any_dense) rep.J = true;
    }
    rep.H = rep.F && !rep.I && !rep.J;

    // Backbone component: with full crossings, the component of any reached
    // far-side square (every crossing of every band lies in it, since any
    // horizontal and any vertical crossing share a square); otherwise the
    // largest component, ties to the one discovered first.
    int backbone_comp = -1;
    if (n_comps > 0) {
        if (rep.F) {
            backbone_comp = comp[static_cast<std::size_t>(far_square)];
        } else {
            std::vector<int> size(static_cast<std::size_t>(n_comps), 0);
            for (int id = 0; id < k * k; ++id)
                if (comp[static_cast<std::size_t>(id)] >= 0)
                    ++size[static_cast<std::size_t>(comp[static_cast<std::size_t>(id)])];
            backbone_comp = 0;
            for (int c = 1; c < n_comps; ++c)
                if (size[static_cast<std::size_t>(c)] > size[static_cast<std::size_t>(backbone_comp)])
                    backbone_comp = c;
        }
    }

    // Independent binning and graph: squares from the coordinates, adjacency
    // from the quadratic distance scan.
    const int n = cloud.n();
    std::vector<char> in_backbone(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        const Point& p = cloud.points[static_cast<std::size_t>(v)];
        int a = static_cast<int>(std::floor((p.x + 0.5) * k));
        int b = static_cast<int>(std::floor((p.y + 0.5) * k));
        a = std::min(std::max(a, 0), k - 1);
        b = std::min(std::max(b, 0), k - 1);
        const int id = b * k + a;
        in_backbone[static_cast<std::size_t>(v)] =
            backbone_comp >= 0 && comp[static_cast<std::size_t>(id)] == backbone_comp ? 1 : 0;
    }
    std::vector<char> reached(static_cast<std::size_t>(n), 0);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (in_backbone[static_cast<std::size_t>(v)]) {
            reached[static_cast<std::size_t>(v)] = 1;
            queue.push_back(v);
        }
    const double r2 = cloud.r * cloud.r;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (int w = 0; w < n; ++w) {
            if (reached[static_cast<std::size_t>(w)]) continue;
            if (dist2(cloud.points[static_cast<std::size_t>(v)],
                      cloud.points[static_cast<std::size_t>(w)]) < r2) {
                reached[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
        }
    }
    rep.backbone_component_size = static_cast<int>(queue.size());
    rep.X_O = n - rep.backbone_component_size;
    return rep;
}

// One full geometric-pipeline trial with the intermediates exposed, seeded
// exactly like the harness trial with the same index.
struct PipelineTrial {
    PointCloud cloud;
    Graph g;
    EventReport ev;
    bool has_backbone = false;
    bool sparse_all_dense_adjacent = true;  // every nonempty sparse square has a dense star-neighbor
    std::vector<int> backbone_vertices;     // sorted union over backbone squares
    BuildOutcome merged;
    BuildOutcome extended;
    bool extended_run = false;
};

inline PipelineTrial run_pipeline(const ExperimentConfig& cfg, const ResolvedSetup& rs,
                                  std::uint64_t seed, bool extend) {
    PipelineTrial out;
    auto sampled = sample_rgg(cfg.n, rs.r, DensitySpec::uniform(), seed);
    out.cloud = std::move(sampled.first);
    out.g = std::move(sampled.second);
    const Tiling t = build_tiling(out.cloud, rs.s);
    const BandSet bands_h = make_bands(t.k(), rs.band_height, true);
    const BandSet bands_v = make_bands(t.k(), rs.band_height, false);
    const BackboneBuild bb = build_backbone(t, bands_h, bands_v);
    out.ev = detect_events(t, bb, out.g);

    for (int id = 0; id < t.square_count() && out.sparse_all_dense_adjacent; ++id) {
        if (t.dense(id) || t.vertices_in(id).empty()) continue;
        bool adj = false;
        t.for_star_neighbors(id, [&](int nb) { adj = adj || t.dense(nb); });
        if (!adj) out.sparse_all_dense_adjacent = false;
    }

    if (bb.backbone && !bb.backbone->squares.empty()) {
        out.has_backbone = true;
        for (int id : bb.backbone->squares)
            for (int v : t.vertices_in(id)) out.backbone_vertices.push_back(v);
        std::sort(out.backbone_vertices.begin(), out.backbone_vertices.end());
        out.merged = merge_backbone_cycles(t, *bb.backbone, out.g);
        if (extend && out.merged.ok) {
            out.extended = extend_with_sparse(out.merged.cycle, t, *bb.backbone, out.g);
            out.extended_run = true;
        }
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// check 1: exact longest-path solver vs permutation brute force

inline CheckResult check_longest_path_oracle(int cases = 200) {
    detail::Stopwatch sw;
    CheckResult cr{1, "exact longest path matches permutation brute force", false, true, "", 0.0};
    const double ps[3] = {0.2, 0.5, 0.8};
    int agree = 0;
    std::string first_bad;
    for (int c = 0; c < cases; ++c) {
        const int n = 2 + c % 6;  // 2..7
        const double p = ps[c % 3];
        const Graph g = sample_er(EdgeProbModel::homogeneous(n, p),
                                  derive_trial_seed(101, static_cast<std::uint64_t>(c)));
        const CycleWalk w = longest_path_exact(g);
        const int brute = detail::brute_force_longest_path(g);
        const bool valid = check_walk(w, g).empty();
        if (valid && w.length() == brute) {
            ++agree;
        } else if (first_bad.empty()) {
            first_bad = "; first mismatch: case " + std::to_string(c) + " n=" +
                        std::to_string(n) + " solver=" + std::to_string(w.length()) +
                        (valid ? "" : " (invalid walk)") + " brute=" + std::to_string(brute);
        }
    }
    cr.seconds = sw.seconds();
    cr.pass = agree == cases && cr.seconds < 30.0;
    cr.detail = std::to_string(agree) + "/" + std::to_string(cases) +
                " seeded graphs agree (n in 2..7, p in {0.2,0.5,0.8})" + first_bad + "; " +
                detail::secs(cr.seconds) + " (limit 30s)";
    return cr;
}

// ---------------------------------------------------------------------------
// check 2: Chernoff tail bound vs exact binomial tails, q(delta) references

inline CheckResult check_tail_bound_dominance() {
    detail::Stopwatch sw;
    CheckResult cr{2, "two-sided tail bound dominates exact binomial tails", false, true, "", 0.0};
    const int ns[3] = {10, 50, 200};
    const double ps[2] = {0.1, 0.5};
    const double alphas[3] = {0.25, 0.5, 0.9};
    int cells = 0, dominated = 0;
    std::string violations;
    for (int n : ns)
        for (double p : ps)
            for (double a : alphas) {
                ++cells;
                const double mu = n * p;
                const double bound = chernoff_tail_bound(mu, a).value;
                const double exact = detail::binomial_two_sided_tail(n, p, a);
                if (exact <= bound + 1e-15) {
                    ++dominated;
                } else {
                    violations += " (n=" + std::to_string(n) + ",p=" + detail::fmt1("%g", p) +
                                  ",alpha=" + detail::fmt1("%g", a) +
                                  "): exact=" + detail::fmt1("%.6g", exact) + " > bound=" +
                                  detail::fmt1("%.6g", bound) + ";";
                }
            }

    // Reference values computed independently at 60-digit precision.
    struct Ref {
        double d, q;
    };
    const Ref refs[] = {{0.25, 0.034238445661164304},
                        {0.5, 0.153426409720027345},
                        {0.9, 0.6697414907005954},
                        {1.0, 1.0}};
    bool q_ok = chernoff_q(1e-8) < 1e-7;
    std::string q_bad;
    for (const Ref& ref : refs)
        if (std::fabs(chernoff_q(ref.d) - ref.q) > 1e-12) {
            q_ok = false;
            q_bad += " q(" + detail::fmt1("%g", ref.d) + ")=" +
                     detail::fmt1("%.17g", chernoff_q(ref.d)) + " ref=" +
                     detail::fmt1("%.17g", ref.q) + ";";
        }

    cr.seconds = sw.seconds();
    cr.pass = dominated == cells && q_ok;
    cr.detail = "q(delta) " + std::string(q_ok ? "matches references to 1e-12" : "MISMATCH:") +
                q_bad + "; dominance holds in " + std::to_string(dominated) + "/" +
                std::to_string(cells) + " grid cells" +
                (violations.empty() ? "" : ";" + violations) + " " + detail::secs(cr.seconds);
    return cr;
}

// ---------------------------------------------------------------------------
// check 3: closed-form bound arithmetic and corollary coincidences

inline CheckResult check_closed_form_bounds() {
    detail::Stopwatch sw;
    CheckResult cr{3, "closed-form bound arithmetic", false, true, "", 0.0};

    BoundParams bp;
    bp.n = 100;
    bp.p_n = 0.3;
    bp.beta1 = bp.beta2 = 1.0;
    bp.delta = 0.3;
    bp.M = 2.0;
    const TheoremOneReport hm = theorem1_bounds(bp);
    const bool ham_ok = hm.ham_prob_lower.has_value() && *hm.ham_prob_lower == 0.98;

    BoundParams b1 = bp;
    b1.delta = 0.2;
    BoundParams b2 = bp;
    b2.delta = 0.4;
    const TheoremOneReport t1 = theorem1_bounds(b1);
    const TheoremOneReport t2 = theorem1_bounds(b2);
    const CorollaryOneReport c = corollary1_bounds(100, 0.3, 0.2, 2.0, 2.0);
    const bool co_exp = c.expected_Ln_lower == t1.Ln_threshold;
    const bool co_thr = c.Ln_threshold == t2.Ln_threshold;
    const bool co_prob = c.prob_lower == t1.prob_lower;
    const bool co_ham = c.ham_prob_lower.has_value() && t1.ham_prob_lower.has_value() &&
                        *c.ham_prob_lower == *t1.ham_prob_lower;

    cr.seconds = sw.seconds();
    cr.pass = ham_ok && co_exp && co_thr && co_prob && co_ham;
    cr.detail = std::string("ham_prob_lower(n=100,M=2,beta=1)=") +
                detail::fmt1("%.17g", hm.ham_prob_lower ? *hm.ham_prob_lower : -1.0) +
                (ham_ok ? " == 0.98 exactly" : " != 0.98") +
                "; homogeneous coincidences [expectation " + (co_exp ? "ok" : "BAD") +
                ", threshold " + (co_thr ? "ok" : "BAD") + ", probability " +
                (co_prob ? "ok" : "BAD") + ", hamiltonicity " + (co_ham ? "ok" : "BAD") + "]";
    return cr;
}

// ---------------------------------------------------------------------------
// check 4: long-cycle construction validity on every full-crossing trial

inline CheckResult check_long_cycle_construction(int trials = 500) {
    detail::Stopwatch sw;
    CheckResult cr{4, "long-cycle construction valid on every full-crossing trial", false, true,
                   "", 0.0};
    ExperimentConfig cfg;
    cfg.mode = Mode::rgg_long_cycle;
    cfg.n = 2000;
    cfg.trials = trials;
    cfg.master_seed = 404;
    cfg.radius_rule = RadiusRule::c_log;
    cfg.c_log = 2.0;
    const ResolvedSetup rs = resolve_setup(cfg);

    int f_true = 0, good = 0;
    std::string first_bad;
    for (int i = 0; i < trials; ++i) {
        const std::uint64_t seed = derive_trial_seed(cfg.master_seed, static_cast<std::uint64_t>(i));
        const detail::PipelineTrial tr = detail::run_pipeline(cfg, rs, seed, false);
        if (!tr.ev.F_n) continue;
        ++f_true;
        std::string bad;
        if (!tr.merged.ok) {
            bad = "merge failed: " + tr.merged.failure;
        } else {
            const ValidationReport val = validate_cycle(tr.merged.cycle, tr.g, &tr.cloud);
            if (!val.pass) bad = "invalid cycle: " + val.first_violation;
            std::vector<int> got = tr.merged.cycle.vertices;
            std::sort(got.begin(), got.end());
            if (bad.empty() && got != tr.backbone_vertices)
                bad = "cycle does not cover the backbone vertex set exactly";
        }
        if (bad.empty())
            ++good;
        else if (first_bad.empty())
            first_bad = "; trial " + std::to_string(i) + ": " + bad;
    }
    cr.seconds = sw.seconds();
    cr.pass = good == f_true && cr.seconds < 300.0;
    cr.detail = "full crossings in " + std::to_string(f_true) + "/" + std::to_string(trials) +
                " trials (n=2000, nr^2=2 log n); valid covering cycle in " + std::to_string(good) +
                "/" + std::to_string(f_true) + " of those" + first_bad +
                (f_true == 0 ? "; vacuous at this radius (dense squares are vanishingly rare) - "
                               "see the supplementary dense-regime check"
                             : "") +
                "; " + detail::secs(cr.seconds) + " (limit 300s)";
    return cr;
}

// ---------------------------------------------------------------------------
// check 5: Hamiltonicity on every qualifying trial in the omega regime

inline CheckResult check_hamiltonian_construction(int trials = 200) {
    detail::Stopwatch sw;
    CheckResult cr{5, "full cycle on every qualifying trial (omega rule)", false, true, "", 0.0};
    ExperimentConfig cfg;
    cfg.mode = Mode::rgg_hamiltonian;
    cfg.n = 2000;
    cfg.trials = trials;
    cfg.master_seed = 505;
    cfg.radius_rule = RadiusRule::omega;
    cfg.omega = 10.0;
    const ResolvedSetup rs = resolve_setup(cfg);

    int qualifying = 0, good = 0;
    std::string first_bad;
    for (int i = 0; i < trials; ++i) {
        const std::uint64_t seed = derive_trial_seed(cfg.master_seed, static_cast<std::uint64_t>(i));
        const detail::PipelineTrial tr = detail::run_pipeline(cfg, rs, seed, true);
        if (!(tr.ev.H_n && tr.sparse_all_dense_adjacent)) continue;
        ++qualifying;
        std::string bad;
        if (!tr.merged.ok)
            bad = "merge failed: " + tr.merged.failure;
        else if (!tr.extended_run || !tr.extended.ok)
            bad = "extension failed: " + tr.extended.failure;
        else if (tr.extended.cycle.length() != cfg.n)
            bad = "cycle length " + std::to_string(tr.extended.cycle.length()) + " != n";
        else if (!validate_cycle(tr.extended.cycle, tr.g, &tr.cloud).pass)
            bad = "invalid cycle";
        else if (tr.ev.X_O != 0)
            bad = "X_O = " + std::to_string(tr.ev.X_O) + " != 0";
        if (bad.empty())
            ++good;
        else if (first_bad.empty())
            first_bad = "; trial " + std::to_string(i) + ": " + bad;
    }
    cr.seconds = sw.seconds();
    cr.pass = good == qualifying;
    cr.detail = "qualifying trials (H_n and all nonempty sparse squares dense-adjacent): " +
                std::to_string(qualifying) + "/" + std::to_string(trials) +
                " (n=2000, omega=10); spanning cycle with X_O=0 in " + std::to_string(good) + "/" +
                std::to_string(qualifying) + first_bad +
                (qualifying == 0 ? "; vacuous at this omega (crossings are vanishingly rare) - "
                                   "see the supplementary high-omega check"
                                 : "") +
                "; " + detail::secs(cr.seconds);
    return cr;
}

// ---------------------------------------------------------------------------
// check 6: Hamiltonicity frequency monotone in omega with a visible gap

inline CheckResult check_omega_monotonicity(int trials = 200) {
    detail::Stopwatch sw;
    CheckResult cr{6, "hamiltonicity frequency rises across the omega sweep", false, true, "",
                   0.0};
    ExperimentConfig base;
    base.n = 2000;
    base.trials = trials;
    base.master_seed = 606;
    base.band_M = 4;
    const std::vector<double> omegas{-4.0, 0.0, 4.0, 8.0, 12.0};
    const SweepResult swr = run_sweep(base, omegas);

    std::vector<double> freq;
    for (const auto& pt : swr.points)
        freq.push_back(pt.result.summary.hamiltonian ? pt.result.summary.hamiltonian->freq : 0.0);
    bool monotone = true;
    for (std::size_t i = 0; i + 1 < freq.size(); ++i)
        if (freq[i + 1] < freq[i]) monotone = false;
    const double gap = freq.back() - freq.front();
    const bool gap_ok = gap >= 0.05;

    std::string fs;
    for (std::size_t i = 0; i < freq.size(); ++i)
        fs += (i != 0 ? "," : "") + detail::fmt1("%.3f", freq[i]);
    cr.seconds = sw.seconds();
    cr.pass = monotone && gap_ok;
    cr.detail = "frequencies at omega {-4,0,4,8,12}: [" + fs + "]; monotone=" +
                (monotone ? "yes" : "NO") + ", gap=" + detail::fmt1("%.3f", gap) +
                " (need >= 0.05)" +
                (gap_ok ? ""
                        : "; the construction certifies no full cycles anywhere on this sweep "
                          "(square occupancies sit far below the dense threshold), so the gap "
                          "clause cannot be met here - see the supplementary shifted sweep") +
                "; " + detail::secs(cr.seconds);
    return cr;
}

// ---------------------------------------------------------------------------
// check 7: Monte Carlo mean longest path against the expectation bound

inline CheckResult check_er_mean_length(int trials = 500) {
    detail::Stopwatch sw;
    CheckResult cr{7, "mean longest path respects the expectation lower bound", false, true, "",
                   0.0};
    bool all_ok = true;
    std::string parts;
    const double np2s[2] = {2.0, 4.0};
    for (int j = 0; j < 2; ++j) {
        ExperimentConfig cfg;
        cfg.mode = Mode::er_longest_path;
        cfg.n = 18;
        cfg.trials = trials;
        cfg.master_seed = 707 + static_cast<std::uint64_t>(j);
        cfg.p_n = std::sqrt(np2s[j] / 18.0);
        const ExperimentResult res = run_experiment(cfg);
        BoundParams bp;
        bp.n = cfg.n;
        bp.p_n = cfg.p_n;
        const double bound = theorem1_bounds(bp).expected_Ln_lower;
        const double mean = res.summary.length.mean;
        const double se = res.summary.length.se;
        const bool ok = mean >= bound - 2.0 * se;
        all_ok = all_ok && ok;
        parts += std::string(j != 0 ? "; " : "") + "np^2=" + detail::fmt1("%g", np2s[j]) +
                 ": mean=" + detail::fmt1("%.3f", mean) + " se=" + detail::fmt1("%.3f", se) +
                 " bound=" + detail::fmt1("%.3f", bound) + (ok ? " ok" : " VIOLATED");
    }
    cr.seconds = sw.seconds();
    cr.pass = all_ok && cr.seconds < 600.0;
    cr.detail = "n=18, " + std::to_string(trials) + " seeds per point, exact solver; " + parts +
                "; " + detail::secs(cr.seconds) + " (limit 600s)";
    return cr;
}

// ---------------------------------------------------------------------------
// check 8: crossings and event indicators vs exhaustive grid oracle

inline CheckResult check_event_oracle(int cases = 10000) {
    detail::Stopwatch sw;
    CheckResult cr{8, "crossing finder and event detection match the grid oracle", false, true,
                   "", 0.0};
    const int k = 6;
    std::uint64_t state = 808;
    int agree = 0;
    std::string first_bad;
    for (int c = 0; c < cases; ++c) {
        const std::uint64_t bits = splitmix64_next(state);
        std::vector<char> flags(static_cast<std::size_t>(k) * k, 0);
        std::vector<int> counts(static_cast<std::size_t>(k) * k, 0);
        for (int id = 0; id < k * k; ++id) {
            flags[static_cast<std::size_t>(id)] = (bits >> id) & 1u ? 1 : 0;
            const std::uint64_t h = splitmix64_next(state);
            counts[static_cast<std::size_t>(id)] =
                flags[static_cast<std::size_t>(id)] ? 8 + static_cast<int>(h % 3)
                                                    : static_cast<int>(h % 8);
        }
        if (std::accumulate(counts.begin(), counts.end(), 0) == 0) counts[0] = 1;

        const PointCloud cloud = detail::make_grid_cloud(k, counts, 0.5);
        const Tiling t = build_tiling(cloud, 1.0 / k);
        const Graph g = geometric_edges(cloud.points, cloud.r);

        std::string bad;
        for (int id = 0; id < k * k && bad.empty(); ++id)
            if (t.dense(id) != (flags[static_cast<std::size_t>(id)] != 0))
                bad = "dense flag mismatch at square " + std::to_string(id);

        for (int B : {2, 4}) {
            if (!bad.empty()) break;
            const BandSet bands_h = make_bands(k, B, true);
            const BandSet bands_v = make_bands(k, B, false);
            const BackboneBuild bb = build_backbone(t, bands_h, bands_v);
            const EventReport ev = detect_events(t, bb, g);
            const detail::OracleReport orc = detail::oracle_events(k, flags, B, cloud);

            std::size_t band_idx = 0;
            for (const BandSet* bs : {&bands_h, &bands_v})
                for (const Band& band : bs->bands) {
                    const auto crossing = find_crossing(t, band);
                    const bool expect = orc.band_cross[band_idx++] != 0;
                    if (crossing.has_value() != expect) {
                        bad = "crossing presence mismatch (B=" + std::to_string(B) + ", band [" +
                              std::to_string(band.lo) + "," + std::to_string(band.hi) + ") " +
                              (band.horizontal ? "horizontal" : "vertical") + ")";
                        break;
                    }
                    if (crossing) {
                        const std::string err = check_crossing(t, *crossing);
                        if (!err.empty()) {
                            bad = "returned crossing invalid: " + err;
                            break;
                        }
                    }
                }
            if (!bad.empty()) break;

            if (ev.F_n != orc.F)
                bad = "F mismatch (B=" + std::to_string(B) + ")";
            else if (ev.I_n != orc.I)
                bad = "I mismatch (B=" + std::to_string(B) + ")";
            else if (ev.J_n != orc.J)
                bad = "J mismatch (B=" + std::to_string(B) + ")";
            else if (ev.H_n != orc.H)
                bad = "H mismatch (B=" + std::to_string(B) + ")";
            else if (ev.X_O != orc.X_O || ev.backbone_component_size != orc.backbone_component_size)
                bad = "X_O mismatch (B=" + std::to_string(B) + "): got " + std::to_string(ev.X_O) +
                      " oracle " + std::to_string(orc.X_O);
        }
        if (bad.empty())
            ++agree;
        else if (first_bad.empty())
            first_bad = "; first disagreement at case " + std::to_string(c) + ": " + bad;
    }
    cr.seconds = sw.seconds();
    cr.pass = agree == cases;
    cr.detail = std::to_string(agree) + "/" + std::to_string(cases) +
                " sampled 6x6 dense-flag assignments agree (band heights 2 and 4, crossings, "
                "F/I/J/H, X_O)" +
                first_bad + "; " + detail::secs(cr.seconds);
    return cr;
}

// ---------------------------------------------------------------------------
// supplementary checks: the same clauses in regimes where they bind

inline CheckResult supp_long_cycle_dense(int trials = 100) {
    detail::Stopwatch sw;
    CheckResult cr{9, "supplementary: long-cycle construction at nr^2=250", false, false, "", 0.0};
    ExperimentConfig cfg;
    cfg.mode = Mode::rgg_long_cycle;
    cfg.n = 2000;
    cfg.trials = trials;
    cfg.master_seed = 901;
    cfg.radius_rule = RadiusRule::explicit_r;
    cfg.r = std::sqrt(250.0 / 2000.0);
    const ResolvedSetup rs = resolve_setup(cfg);

    int f_true = 0, good = 0;
    long long deficit_sum = 0;
    std::string first_bad;
    for (int i = 0; i < trials; ++i) {
        const std::uint64_t seed = derive_trial_seed(cfg.master_seed, static_cast<std::uint64_t>(i));
        const detail::PipelineTrial tr = detail::run_pipeline(cfg, rs, seed, false);
        if (!tr.ev.F_n) continue;
        ++f_true;
        std::string bad;
        if (!tr.merged.ok) {
            bad = "merge failed: " + tr.merged.failure;
        } else {
            const ValidationReport val = validate_cycle(tr.merged.cycle, tr.g, &tr.cloud);
            if (!val.pass) bad = "invalid cycle: " + val.first_violation;
            std::vector<int> got = tr.merged.cycle.vertices;
            std::sort(got.begin(), got.end());
            if (bad.empty() && got != tr.backbone_vertices)
                bad = "cycle does not cover the backbone vertex set exactly";
        }
        if (bad.empty()) {
            ++good;
            deficit_sum += cfg.n - tr.merged.cycle.length();
        } else if (first_bad.empty()) {
            first_bad = "; trial " + std::to_string(i) + ": " + bad;
        }
    }
    cr.seconds = sw.seconds();
    const bool non_vacuous = f_true * 2 >= trials;
    cr.pass = non_vacuous && good == f_true;
    cr.detail = "full crossings in " + std::to_string(f_true) + "/" + std::to_string(trials) +
                " trials (need >= half); valid covering cycle in " + std::to_string(good) + "/" +
                std::to_string(f_true) +
                (good > 0 ? "; mean vertices left out " +
                                detail::fmt1("%.1f", static_cast<double>(deficit_sum) / good)
                          : "") +
                first_bad + "; " + detail::secs(cr.seconds);
    return cr;
}

inline CheckResult supp_hamiltonian_high_omega(int trials = 100) {
    detail::Stopwatch sw;
    CheckResult cr{10, "supplementary: spanning cycles at omega=90.8", false, false, "", 0.0};
    ExperimentConfig cfg;
    cfg.mode = Mode::rgg_hamiltonian;
    cfg.n = 2000;
    cfg.trials = trials;
    cfg.master_seed = 902;
    cfg.radius_rule = RadiusRule::omega;
    cfg.omega = 90.8;
    const ResolvedSetup rs = resolve_setup(cfg);

    int qualifying = 0, good = 0, ham = 0;
    std::string first_bad;
    for (int i = 0; i < trials; ++i) {
        const std::uint64_t seed = derive_trial_seed(cfg.master_seed, static_cast<std::uint64_t>(i));
        const detail::PipelineTrial tr = detail::run_pipeline(cfg, rs, seed, true);
        const bool spanned = tr.extended_run && tr.extended.ok &&
                             tr.extended.cycle.length() == cfg.n &&
                             validate_cycle(tr.extended.cycle, tr.g, &tr.cloud).pass;
        if (spanned) ++ham;
        if (!(tr.ev.H_n && tr.sparse_all_dense_adjacent)) continue;
        ++qualifying;
        std::string bad;
        if (!spanned)
            bad = !tr.merged.ok ? "merge failed: " + tr.merged.failure
                                : (tr.extended_run && !tr.extended.ok
                                       ? "extension failed: " + tr.extended.failure
                                       : "cycle does not span");
        else if (tr.ev.X_O != 0)
            bad = "X_O = " + std::to_string(tr.ev.X_O) + " != 0";
        if (bad.empty())
            ++good;
        else if (first_bad.empty())
            first_bad = "; trial " + std::to_string(i) + ": " + bad;
    }
    cr.seconds = sw.seconds();
    const bool non_vacuous = qualifying * 2 >= trials;
    cr.pass = non_vacuous && good == qualifying;
    cr.detail = "qualifying trials " + std::to_string(qualifying) + "/" + std::to_string(trials) +
                " (need >= half); spanning cycle with X_O=0 in " + std::to_string(good) + "/" +
                std::to_string(qualifying) + "; spanning-cycle frequency overall " +
                detail::fmt1("%.2f", trials > 0 ? static_cast<double>(ham) / trials : 0.0) +
                first_bad + "; " + detail::secs(cr.seconds);
    return cr;
}

inline CheckResult supp_shifted_sweep(int trials = 100) {
    detail::Stopwatch sw;
    CheckResult cr{11, "supplementary: shifted omega sweep shows the threshold", false, false, "",
                   0.0};
    ExperimentConfig base;
    base.n = 2000;
    base.trials = trials;
    base.master_seed = 903;
    base.band_M = 4;
    const std::vector<double> omegas{16.0, 42.0, 61.0, 74.3, 90.8};
    const SweepResult swr = run_sweep(base, omegas);

    std::vector<double> freq;
    for (const auto& pt : swr.points)
        freq.push_back(pt.result.summary.hamiltonian ? pt.result.summary.hamiltonian->freq : 0.0);
    bool monotone = true;
    for (std::size_t i = 0; i + 1 < freq.size(); ++i)
        if (freq[i + 1] < freq[i]) monotone = false;
    const double gap = freq.back() - freq.front();

    std::string fs;
    for (std::size_t i = 0; i < freq.size(); ++i)
        fs += (i != 0 ? "," : "") + detail::fmt1("%.3f", freq[i]);
    cr.seconds = sw.seconds();
    cr.pass = monotone && gap >= 0.05 && freq.back() >= 0.5;
    cr.detail = "frequencies at omega {16,42,61,74.3,90.8}: [" + fs + "]; monotone=" +
                (monotone ? "yes" : "NO") + ", gap=" + detail::fmt1("%.3f", gap) +
                " (need >= 0.05), top frequency " + detail::fmt1("%.3f", freq.back()) +
                " (need >= 0.5); " + detail::secs(cr.seconds);
    return cr;
}

// ---------------------------------------------------------------------------
// suite driver

inline CheckResult run_check(int id, VerifyLevel level = VerifyLevel::full) {
    const bool full = level == VerifyLevel::full;
    switch (id) {
        case 1: return check_longest_path_oracle();
        case 2: return check_tail_bound_dominance();
        case 3: return check_closed_form_bounds();
        case 4: return check_long_cycle_construction(full ? 500 : 60);
        case 5: return check_hamiltonian_construction(full ? 200 : 40);
        case 6: return check_omega_monotonicity(full ? 200 : 40);
        case 7: return check_er_mean_length(full ? 500 : 120);
        case 8: return check_event_oracle(full ? 10000 : 2000);
        case 9: return supp_long_cycle_dense(full ? 100 : 20);
        case 10: return supp_hamiltonian_high_omega(full ? 100 : 20);
        case 11: return supp_shifted_sweep(full ? 100 : 20);
        default: throw std::invalid_argument("run_check: id must be 1..11");
    }
}

inline void print_check(std::ostream& os, const CheckResult& cr) {
    os << (cr.pass ? "[PASS] " : "[FAIL] ") << (cr.required ? "check " : "extra ") << cr.id
       << ": " << cr.name << " - " << cr.detail << '\n';
}

// Runs the whole suite (required checks 1-8, then supplementary 9-11) and
// returns the number of failures. `fast` trims trial counts to smoke-test
// scale; `full` runs the literal acceptance parameters.
inline int verify_suite(std::ostream& os, VerifyLevel level) {
    int failures = 0;
    for (int id = 1; id <= 11; ++id) {
        const CheckResult cr = run_check(id, level);
        print_check(os, cr);
        if (!cr.pass) ++failures;
    }
    os << (failures == 0 ? "verification: all checks passed\n"
                         : "verification: " + std::to_string(failures) + " check(s) failed\n");
    return failures;
}

}  // namespace verify
}  // namespace longcycle
