#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "longcycle/backbone.hpp"
#include "longcycle/bounds.hpp"
#include "longcycle/cycle_builder.hpp"
#include "longcycle/er_model.hpp"
#include "longcycle/graph.hpp"
#include "longcycle/longest_path.hpp"
#include "longcycle/rgg.hpp"
#include "longcycle/rng.hpp"
#include "longcycle/tiling.hpp"

// Experiment harness: configuration, seeded per-trial pipelines, a worker
// pool over trial indices, summary statistics, and CSV emission. Two runs
// with the same config produce byte-identical CSV (wall times are only
// written when timing is requested).

namespace longcycle {

enum class Mode { er_longest_path, rgg_long_cycle, rgg_hamiltonian };

enum class RadiusRule {
    explicit_r, // r given directly
    c_log,      // n r^2 = c log n
    omega       // n r^2 = log n + 7 log log n + omega
};

inline std::string to_string(Mode m) {
    switch (m) {
        case Mode::er_longest_path: return "er-longest-path";
        case Mode::rgg_long_cycle: return "rgg-long-cycle";
        case Mode::rgg_hamiltonian: return "rgg-hamiltonian";
    }
    return "?";
}

inline std::string to_string(RadiusRule r) {
    switch (r) {
        case RadiusRule::explicit_r: return "explicit";
        case RadiusRule::c_log: return "c-log";
        case RadiusRule::omega: return "omega";
    }
    return "?";
}

struct ExperimentConfig {
    Mode mode = Mode::er_longest_path;
    int n = 100;
    int trials = 100;
    std::uint64_t master_seed = 1;
    int threads = 1;

    // ER model and bound parameters
    double p_n = 0.1;
    std::vector<double> weights; // empty = homogeneous model
    double beta1 = 1.0;
    double beta2 = 1.0;
    double delta = 0.5;
    std::optional<double> M_log;      // n p^2 = M log n; implied from p_n when absent
    long long rotation_budget = 10000;
    bool force_rotation = false;

    // RGG parameters
    RadiusRule radius_rule = RadiusRule::explicit_r;
    double r = 0.1;
    double c_log = 2.0;
    double omega = 10.0;
    int band_M = 4;       // band height knob: height = M (hamiltonian) or M*K_n
    double delta1 = 1.0;  // reference constants of the cycle-length statements
    double delta2 = 1.0;
    double C_ham = 1.0;

    bool timing = false;
    std::string output_path;

    void validate() const {
        if (n < 1) throw std::invalid_argument("config: n < 1");
        if (trials < 1) throw std::invalid_argument("config: trials < 1");
        if (threads < 1) throw std::invalid_argument("config: threads < 1");
        if (mode == Mode::er_longest_path) {
            if (!(p_n >= 0.0 && p_n <= 1.0)) throw std::invalid_argument("config: p outside [0,1]");
            if (!weights.empty() && static_cast<int>(weights.size()) != n)
                throw std::invalid_argument("config: weight count != n");
            if (rotation_budget < 1) throw std::invalid_argument("config: budget < 1");
        } else {
            if (radius_rule == RadiusRule::explicit_r && !(r > 0.0))
                throw std::invalid_argument("config: r <= 0");
            if (radius_rule == RadiusRule::c_log && !(c_log > 0.0))
                throw std::invalid_argument("config: c <= 0");
            if (band_M < 1) throw std::invalid_argument("config: band multiplier < 1");
        }
        if (!(beta1 > 0.0 && beta1 <= 1.0) || !(beta2 > 0.0 && beta2 <= 1.0))
            throw std::invalid_argument("config: beta1/beta2 outside (0,1]");
        if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("config: delta outside (0,1)");
    }
};

// ---------------------------------------------------------------------------
// config text format: flat key=value lines, '#' comments

inline bool apply_config_kv(ExperimentConfig& cfg, const std::string& key,
                            const std::string& value) {
    auto as_int = [&](long long lo, long long hi) {
        long long v = 0;
        try {
            std::size_t pos = 0;
            v = std::stoll(value, &pos);
            if (pos != value.size()) throw std::invalid_argument("trailing");
        } catch (...) {
            throw std::invalid_argument("config: bad integer for " + key + ": " + value);
        }
        if (v < lo || v > hi)
            throw std::invalid_argument("config: value out of range for " + key);
        return v;
    };
    auto as_double = [&]() {
        try {
            std::size_t pos = 0;
            double v = std::stod(value, &pos);
            if (pos != value.size()) throw std::invalid_argument("trailing");
            return v;
        } catch (...) {
            throw std::invalid_argument("config: bad number for " + key + ": " + value);
        }
    };
    auto as_bool = [&]() {
        if (value == "1" || value == "true" || value == "yes") return true;
        if (value == "0" || value == "false" || value == "no") return false;
        throw std::invalid_argument("config: bad boolean for " + key + ": " + value);
    };

    if (key == "mode") {
        if (value == "er-longest-path" || value == "er")
            cfg.mode = Mode::er_longest_path;
        else if (value == "rgg-long-cycle" || value == "rgg-cycle" || value == "rgg")
            cfg.mode = Mode::rgg_long_cycle;
        else if (value == "rgg-hamiltonian" || value == "rgg-ham")
            cfg.mode = Mode::rgg_hamiltonian;
        else
            throw std::invalid_argument("config: unknown mode " + value);
    } else if (key == "n") {
        cfg.n = static_cast<int>(as_int(1, 100000000));
    } else if (key == "trials") {
        cfg.trials = static_cast<int>(as_int(1, 100000000));
    } else if (key == "seed") {
        try {
            cfg.master_seed = std::stoull(value);
        } catch (...) {
            throw std::invalid_argument("config: bad seed: " + value);
        }
    } else if (key == "threads") {
        cfg.threads = static_cast<int>(as_int(1, 4096));
    } else if (key == "p") {
        cfg.p_n = as_double();
    } else if (key == "beta1") {
        cfg.beta1 = as_double();
    } else if (key == "beta2") {
        cfg.beta2 = as_double();
    } else if (key == "delta") {
        cfg.delta = as_double();
    } else if (key == "M-log") {
        cfg.M_log = as_double();
    } else if (key == "budget") {
        cfg.rotation_budget = as_int(1, 1000000000000LL);
    } else if (key == "force-rotation") {
        cfg.force_rotation = as_bool();
    } else if (key == "r") {
        cfg.r = as_double();
        cfg.radius_rule = RadiusRule::explicit_r;
    } else if (key == "c") {
        cfg.c_log = as_double();
        cfg.radius_rule = RadiusRule::c_log;
    } else if (key == "omega") {
        cfg.omega = as_double();
        cfg.radius_rule = RadiusRule::omega;
    } else if (key == "band-M") {
        cfg.band_M = static_cast<int>(as_int(1, 1000000));
    } else if (key == "delta1") {
        cfg.delta1 = as_double();
    } else if (key == "delta2") {
        cfg.delta2 = as_double();
    } else if (key == "C") {
        cfg.C_ham = as_double();
    } else if (key == "timing") {
        cfg.timing = as_bool();
    } else if (key == "output") {
        cfg.output_path = value;
    } else if (key == "weights-file") {
        std::ifstream in(value);
        if (!in) throw std::invalid_argument("config: cannot open weights file " + value);
        cfg.weights.clear();
        double w = 0.0;
        while (in >> w) cfg.weights.push_back(w);
    } else {
        return false;
    }
    return true;
}

inline void load_config_file(ExperimentConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: missing '=' at " + path + ":" +
                                        std::to_string(lineno));
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        if (!apply_config_kv(cfg, key, value))
            throw std::invalid_argument("config: unknown key '" + key + "' at " + path + ":" +
                                        std::to_string(lineno));
    }
}

// ---------------------------------------------------------------------------
// radius and tiling-side resolution

inline double resolve_radius(const ExperimentConfig& cfg) {
    switch (cfg.radius_rule) {
        case RadiusRule::explicit_r: return cfg.r;
        case RadiusRule::c_log:
            return std::sqrt(cfg.c_log * std::log(static_cast<double>(cfg.n)) / cfg.n);
        case RadiusRule::omega: {
            const double nr2 = std::log(static_cast<double>(cfg.n)) +
                               7.0 * std::log(std::log(static_cast<double>(cfg.n))) + cfg.omega;
            if (!(nr2 > 0.0)) throw std::invalid_argument("config: omega gives n r^2 <= 0");
            return std::sqrt(nr2 / cfg.n);
        }
    }
    throw std::logic_error("resolve_radius: bad rule");
}

struct ResolvedSetup {
    double r = 0.0;
    double nr2 = 0.0;
    double s = 0.0;
    int k = 0;
    int band_height = 1;
    std::string tiling;             // "tn" | "eps1" | "coarse"
    std::optional<double> tn_delta; // only for "tn"
};

// Side-selection ladder. The hamiltonian mode prefers the t_n rule (only
// available under the omega radius rule), then the epsilon1 rule, then a
// coarse side k = strict-ceiling(2*sqrt(2)/r) which still guarantees
// 2*sqrt(2)*s < r. The long-cycle mode starts at the epsilon1 rung. The tag
// records which rung produced the side.
inline ResolvedSetup resolve_setup(const ExperimentConfig& cfg) {
    ResolvedSetup rs;
    rs.r = resolve_radius(cfg);
    rs.nr2 = static_cast<double>(cfg.n) * rs.r * rs.r;
    bool chosen = false;
    if (cfg.mode == Mode::rgg_hamiltonian && cfg.radius_rule == RadiusRule::omega) {
        try {
            const TnChoice tc = choose_tn(cfg.n, cfg.omega);
            rs.s = tc.t;
            rs.k = tc.k;
            rs.tn_delta = tc.delta_n;
            rs.tiling = "tn";
            chosen = true;
        } catch (const std::invalid_argument&) {
        }
    }
    if (!chosen) {
        try {
            const SideChoice sc = choose_epsilon1(rs.r);
            rs.s = sc.s;
            rs.k = sc.k;
            rs.tiling = "eps1";
            chosen = true;
        } catch (const std::invalid_argument&) {
        }
    }
    if (!chosen) {
        long long k = strict_ceil(2.0 * std::sqrt(2.0) / rs.r);
        if (k < 1) k = 1;
        rs.k = static_cast<int>(k);
        rs.s = 1.0 / static_cast<double>(rs.k);
        rs.tiling = "coarse";
    }
    rs.band_height = cfg.mode == Mode::rgg_hamiltonian
                         ? cfg.band_M
                         : cfg.band_M * compute_Kn(cfg.n, rs.r);
    return rs;
}

// ---------------------------------------------------------------------------
// trials

struct TrialRecord {
    int index = 0;
    std::uint64_t seed = 0;
    int n = 0;
    int length = 0; // longest path found (ER) / constructed cycle length (RGG)
    std::optional<bool> F_n, I_n, J_n, H_n, A_i;
    std::optional<long long> X_O;
    std::string outcome; // "ok" or a failure description
    double wall_ms = 0.0;
};

namespace detail {

inline std::string sanitize_cell(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    return s;
}

inline void run_er_trial(const ExperimentConfig& cfg, TrialRecord& rec) {
    const EdgeProbModel model =
        cfg.weights.empty() ? EdgeProbModel::homogeneous(cfg.n, cfg.p_n)
                            : EdgeProbModel::weighted_product(cfg.n, cfg.p_n, cfg.weights);
    const Graph g = sample_er(model, rec.seed);
    const CycleWalk walk = (!cfg.force_rotation && cfg.n <= 24)
                               ? longest_path_exact(g)
                               : longest_path_rotation(g, cfg.rotation_budget, rec.seed);
    rec.length = static_cast<int>(walk.vertices.size());
    const int t0 = static_cast<int>(std::ceil(cfg.beta2 * cfg.n * cfg.p_n));
    rec.A_i = min_degree_event(g, 0, t0);
    rec.outcome = "ok";
}

inline void run_rgg_trial(const ExperimentConfig& cfg, const ResolvedSetup& rs,
                          TrialRecord& rec) {
    const auto sampled = sample_rgg(cfg.n, rs.r, DensitySpec::uniform(), rec.seed);
    const PointCloud& cloud = sampled.first;
    const Graph& g = sampled.second;
    const Tiling t = build_tiling(cloud, rs.s);
    const BandSet bands_h = make_bands(t.k(), rs.band_height, true);
    const BandSet bands_v = make_bands(t.k(), rs.band_height, false);
    const BackboneBuild bb = build_backbone(t, bands_h, bands_v);
    const EventReport ev = detect_events(t, bb, g);
    rec.F_n = ev.F_n;
    rec.I_n = ev.I_n;
    rec.J_n = ev.J_n;
    rec.H_n = ev.H_n;
    rec.X_O = ev.X_O;

    if (!bb.backbone || bb.backbone->squares.empty()) {
        rec.length = 0;
        rec.outcome = "no-backbone";
        return;
    }
    const BuildOutcome merged = merge_backbone_cycles(t, *bb.backbone, g);
    CycleWalk best = merged.cycle;
    std::string outcome = merged.ok ? "ok" : "merge-failed: " + merged.failure;
    if (merged.ok && cfg.mode == Mode::rgg_hamiltonian) {
        const BuildOutcome ext = extend_with_sparse(merged.cycle, t, *bb.backbone, g);
        best = ext.cycle;
        if (!ext.ok) outcome = "extend-failed: " + ext.failure;
    }
    const ValidationReport val = validate_cycle(best, g, &cloud);
    if (!val.pass) {
        rec.length = 0;
        rec.outcome = "invalid-cycle: " + val.first_violation;
        return;
    }
    rec.length = static_cast<int>(best.vertices.size());
    rec.outcome = outcome;
}

} // namespace detail

// Deterministic per (config, index): the trial seed depends only on the
// master seed and the index, and every pipeline stage is seeded from it.
// Pipeline failures are recorded in the outcome field, never thrown.
inline TrialRecord run_trial(const ExperimentConfig& cfg, int index) {
    TrialRecord rec;
    rec.index = index;
    rec.seed = derive_trial_seed(cfg.master_seed, static_cast<std::uint64_t>(index));
    rec.n = cfg.n;
    const auto start = std::chrono::steady_clock::now();
    try {
        if (cfg.mode == Mode::er_longest_path) {
            detail::run_er_trial(cfg, rec);
        } else {
            const ResolvedSetup rs = resolve_setup(cfg);
            detail::run_rgg_trial(cfg, rs, rec);
        }
    } catch (const std::exception& e) {
        rec.outcome = std::string("error: ") + e.what();
        rec.length = 0;
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return rec;
}

// ---------------------------------------------------------------------------
// statistics

struct FreqCI {
    int count = 0;
    int total = 0;
    double freq = 0.0;
    double lo = 0.0;
    double hi = 1.0;
    bool wilson = false;
};

// 95% interval: normal approximation, switching to the Wilson score interval
// when the success or failure count is below 5 (the normal approximation is
// unreliable near 0 and 1).
inline FreqCI freq_ci(int count, int total) {
    FreqCI f;
    f.count = count;
    f.total = total;
    if (total <= 0) return f;
    const double z = 1.959963984540054;
    const double p = static_cast<double>(count) / total;
    f.freq = p;
    if (count < 5 || total - count < 5) {
        f.wilson = true;
        const double z2 = z * z;
        const double denom = 1.0 + z2 / total;
        const double centre = p + z2 / (2.0 * total);
        const double half = z * std::sqrt(p * (1.0 - p) / total + z2 / (4.0 * total * total));
        f.lo = std::max(0.0, (centre - half) / denom);
        f.hi = std::min(1.0, (centre + half) / denom);
    } else {
        const double half = z * std::sqrt(p * (1.0 - p) / total);
        f.lo = std::max(0.0, p - half);
        f.hi = std::min(1.0, p + half);
    }
    return f;
}

struct MeanSe {
    double mean = 0.0;
    double se = 0.0;
};

inline MeanSe mean_se(const std::vector<double>& xs) {
    MeanSe m;
    if (xs.empty()) return m;
    double sum = 0.0;
    for (double x : xs) sum += x;
    m.mean = sum / static_cast<double>(xs.size());
    if (xs.size() < 2) return m;
    double ss = 0.0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    const double var = ss / static_cast<double>(xs.size() - 1);
    m.se = std::sqrt(var / static_cast<double>(xs.size()));
    return m;
}

// ---------------------------------------------------------------------------
// experiment runner and CSV

struct ExperimentSummary {
    MeanSe length;
    std::optional<FreqCI> F_n, I_n, J_n, H_n, A_i;
    FreqCI construct_ok;
    std::optional<FreqCI> hamiltonian; // length == n, construction-certified
    std::optional<MeanSe> X_O;
    std::vector<std::pair<std::string, std::string>> bounds; // key, value text
};

struct ExperimentResult {
    ExperimentConfig config;
    std::optional<ResolvedSetup> setup; // rgg modes
    std::vector<TrialRecord> records;
    ExperimentSummary summary;
};

namespace detail {

inline std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

inline std::string fmt_freq(const FreqCI& f) {
    return fmt("%.6f", f.freq) + " ci=[" + fmt("%.6f", f.lo) + "," + fmt("%.6f", f.hi) +
           "] count=" + std::to_string(f.count) + "/" + std::to_string(f.total) +
           (f.wilson ? " wilson" : "");
}

inline std::optional<FreqCI> flag_freq(const std::vector<TrialRecord>& recs,
                                       std::optional<bool> TrialRecord::*field) {
    int count = 0, present = 0;
    for (const auto& r : recs)
        if ((r.*field).has_value()) {
            ++present;
            if (*(r.*field)) ++count;
        }
    if (present == 0) return std::nullopt;
    return freq_ci(count, present);
}

} // namespace detail

inline ExperimentSummary summarize(const ExperimentConfig& cfg,
                                   const std::optional<ResolvedSetup>& rs,
                                   const std::vector<TrialRecord>& recs) {
    ExperimentSummary s;
    std::vector<double> lengths;
    lengths.reserve(recs.size());
    for (const auto& r : recs) lengths.push_back(r.length);
    s.length = mean_se(lengths);

    s.F_n = detail::flag_freq(recs, &TrialRecord::F_n);
    s.I_n = detail::flag_freq(recs, &TrialRecord::I_n);
    s.J_n = detail::flag_freq(recs, &TrialRecord::J_n);
    s.H_n = detail::flag_freq(recs, &TrialRecord::H_n);
    s.A_i = detail::flag_freq(recs, &TrialRecord::A_i);

    int ok = 0;
    for (const auto& r : recs)
        if (r.outcome == "ok") ++ok;
    s.construct_ok = freq_ci(ok, static_cast<int>(recs.size()));

    if (cfg.mode == Mode::rgg_hamiltonian) {
        int ham = 0;
        for (const auto& r : recs)
            if (r.outcome == "ok" && r.length == r.n) ++ham;
        s.hamiltonian = freq_ci(ham, static_cast<int>(recs.size()));
    }
    {
        std::vector<double> xo;
        for (const auto& r : recs)
            if (r.X_O) xo.push_back(static_cast<double>(*r.X_O));
        if (!xo.empty()) s.X_O = mean_se(xo);
    }

    if (cfg.mode == Mode::er_longest_path) {
        BoundParams bp;
        bp.n = cfg.n;
        bp.p_n = cfg.p_n;
        bp.beta1 = cfg.beta1;
        bp.beta2 = cfg.beta2;
        bp.delta = cfg.delta;
        const double logn = std::log(static_cast<double>(cfg.n));
        bp.M = cfg.M_log ? cfg.M_log
                         : std::optional<double>(cfg.n * cfg.p_n * cfg.p_n / logn);
        const TheoremOneReport rep = theorem1_bounds(bp);
        s.bounds.emplace_back("expected_Ln_lower", detail::fmt("%.12g", rep.expected_Ln_lower));
        s.bounds.emplace_back("Ln_threshold", detail::fmt("%.12g", rep.Ln_threshold));
        s.bounds.emplace_back("prob_lower", detail::fmt("%.12g", rep.prob_lower));
        if (rep.ham_prob_lower)
            s.bounds.emplace_back("ham_prob_lower", detail::fmt("%.12g", *rep.ham_prob_lower));
        if (rep.clamped_expectation) s.bounds.emplace_back("clamped_expectation", "1");
        if (rep.clamped_probability) s.bounds.emplace_back("clamped_probability", "1");
    } else if (rs) {
        const RggCycleBounds b = rgg_longcycle_bounds(cfg.n, rs->r, cfg.delta1, cfg.delta2);
        s.bounds.emplace_back("lc_threshold", detail::fmt("%.12g", b.lc_threshold));
        s.bounds.emplace_back("lc_prob_lower", detail::fmt("%.12g", b.prob_lower));
        if (cfg.mode == Mode::rgg_hamiltonian && cfg.radius_rule == RadiusRule::omega)
            s.bounds.emplace_back(
                "ham_prob_lower",
                detail::fmt("%.12g", rgg_hamiltonian_bound(cfg.omega, cfg.C_ham)));
    }
    return s;
}

inline std::vector<TrialRecord> run_trials(const ExperimentConfig& cfg) {
    cfg.validate();
    std::vector<TrialRecord> recs(static_cast<std::size_t>(cfg.trials));
    const int workers = std::min(cfg.threads, cfg.trials);
    if (workers <= 1) {
        for (int i = 0; i < cfg.trials; ++i) recs[static_cast<std::size_t>(i)] = run_trial(cfg, i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&cfg, &recs, &next] {
                for (;;) {
                    const int i = next.fetch_add(1);
                    if (i >= cfg.trials) return;
                    recs[static_cast<std::size_t>(i)] = run_trial(cfg, i);
                }
            });
        for (auto& th : pool) th.join();
    }
    return recs;
}

inline ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    ExperimentResult res;
    res.config = cfg;
    if (cfg.mode != Mode::er_longest_path) res.setup = resolve_setup(cfg);
    res.records = run_trials(cfg);
    res.summary = summarize(cfg, res.setup, res.records);
    return res;
}

inline void write_trial_row(std::ostream& os, const TrialRecord& r, bool timing) {
    auto cell = [](const std::optional<bool>& b) {
        return b ? (*b ? std::string("1") : std::string("0")) : std::string();
    };
    os << r.index << ',' << r.seed << ',' << r.n << ',' << r.length << ',' << cell(r.F_n) << ','
       << cell(r.I_n) << ',' << cell(r.J_n) << ',' << cell(r.H_n) << ',' << cell(r.A_i) << ',';
    if (r.X_O) os << *r.X_O;
    os << ',' << detail::sanitize_cell(r.outcome) << ',';
    if (timing) os << detail::fmt("%.3f", r.wall_ms);
    os << '\n';
}

inline void write_csv(std::ostream& os, const ExperimentResult& res) {
    const ExperimentConfig& cfg = res.config;
    os << "trial,seed,n,length,F_n,I_n,J_n,H_n,A_i,X_O,outcome,wall_ms\n";
    for (const auto& r : res.records) write_trial_row(os, r, cfg.timing);

    os << "# config mode=" << to_string(cfg.mode) << " n=" << cfg.n << " trials=" << cfg.trials
       << " seed=" << cfg.master_seed;
    if (cfg.mode == Mode::er_longest_path) {
        os << " p=" << detail::fmt("%.12g", cfg.p_n) << " beta1=" << detail::fmt("%.12g", cfg.beta1)
           << " beta2=" << detail::fmt("%.12g", cfg.beta2)
           << " delta=" << detail::fmt("%.12g", cfg.delta)
           << " model=" << (cfg.weights.empty() ? "homogeneous" : "weighted-product");
    } else {
        os << " radius-rule=" << to_string(cfg.radius_rule);
        if (cfg.radius_rule == RadiusRule::c_log) os << " c=" << detail::fmt("%.12g", cfg.c_log);
        if (cfg.radius_rule == RadiusRule::omega) os << " omega=" << detail::fmt("%.12g", cfg.omega);
        os << " band-M=" << cfg.band_M;
    }
    os << '\n';
    if (res.setup) {
        const ResolvedSetup& rs = *res.setup;
        os << "# setup r=" << detail::fmt("%.12g", rs.r) << " nr2=" << detail::fmt("%.12g", rs.nr2)
           << " s=" << detail::fmt("%.12g", rs.s) << " k=" << rs.k
           << " band_height=" << rs.band_height << " tiling=" << rs.tiling;
        if (rs.tn_delta) os << " tn_delta=" << detail::fmt("%.12g", *rs.tn_delta);
        os << '\n';
    }
    const ExperimentSummary& s = res.summary;
    os << "# mean_length=" << detail::fmt("%.6f", s.length.mean)
       << " se=" << detail::fmt("%.6f", s.length.se) << '\n';
    auto freq_line = [&os](const char* name, const std::optional<FreqCI>& f) {
        if (f) os << "# freq " << name << '=' << detail::fmt_freq(*f) << '\n';
    };
    os << "# freq construct_ok=" << detail::fmt_freq(s.construct_ok) << '\n';
    freq_line("hamiltonian", s.hamiltonian);
    freq_line("F_n", s.F_n);
    freq_line("I_n", s.I_n);
    freq_line("J_n", s.J_n);
    freq_line("H_n", s.H_n);
    freq_line("A_i", s.A_i);
    if (s.X_O)
        os << "# mean_X_O=" << detail::fmt("%.6f", s.X_O->mean)
           << " se=" << detail::fmt("%.6f", s.X_O->se) << '\n';
    for (const auto& kv : s.bounds) os << "# bound " << kv.first << '=' << kv.second << '\n';
}

inline std::string csv_string(const ExperimentResult& res) {
    std::ostringstream ss;
    write_csv(ss, res);
    return ss.str();
}

// ---------------------------------------------------------------------------
// omega sweep

struct SweepPoint {
    double omega = 0.0;
    ExperimentResult result;
};

struct SweepResult {
    std::uint64_t base_seed = 0;
    std::vector<SweepPoint> points;
};

// One hamiltonian-mode experiment per omega value, same n/trials/seed. The
// per-point master seed is offset by the point index so points are
// independent but individually reproducible.
inline SweepResult run_sweep(ExperimentConfig base, const std::vector<double>& omegas) {
    base.mode = Mode::rgg_hamiltonian;
    base.radius_rule = RadiusRule::omega;
    SweepResult out;
    out.base_seed = base.master_seed;
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        ExperimentConfig cfg = base;
        cfg.omega = omegas[i];
        cfg.master_seed = derive_trial_seed(base.master_seed, 1000000u + i);
        SweepPoint pt;
        pt.omega = omegas[i];
        pt.result = run_experiment(cfg);
        out.points.push_back(std::move(pt));
    }
    return out;
}

inline void write_sweep_csv(std::ostream& os, const SweepResult& sweep) {
    os << "omega,trials,ham_freq,ham_ci_lo,ham_ci_hi,F_freq,H_freq,construct_ok_freq,"
          "mean_length,mean_X_O,bound_ham\n";
    for (const auto& pt : sweep.points) {
        const ExperimentSummary& s = pt.result.summary;
        const FreqCI ham = s.hamiltonian ? *s.hamiltonian : FreqCI{};
        os << detail::fmt("%.12g", pt.omega) << ',' << pt.result.config.trials << ','
           << detail::fmt("%.6f", ham.freq) << ',' << detail::fmt("%.6f", ham.lo) << ','
           << detail::fmt("%.6f", ham.hi) << ','
           << detail::fmt("%.6f", s.F_n ? s.F_n->freq : 0.0) << ','
           << detail::fmt("%.6f", s.H_n ? s.H_n->freq : 0.0) << ','
           << detail::fmt("%.6f", s.construct_ok.freq) << ','
           << detail::fmt("%.6f", s.length.mean) << ','
           << detail::fmt("%.6f", s.X_O ? s.X_O->mean : 0.0) << ','
           << detail::fmt("%.6f",
                          rgg_hamiltonian_bound(pt.omega, pt.result.config.C_ham))
           << '\n';
    }
    if (!sweep.points.empty()) {
        const ExperimentConfig& cfg = sweep.points.front().result.config;
        os << "# sweep n=" << cfg.n << " trials-per-point=" << cfg.trials
           << " seed=" << sweep.base_seed << " band-M=" << cfg.band_M << '\n';
    }
}

} // namespace longcycle
