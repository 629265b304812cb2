// Configuration parsing, radius/side resolution, seeded trials, summary
// statistics, CSV emission, and the omega sweep.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "longcycle/harness.hpp"

using namespace longcycle;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

std::string bound_value(const ExperimentSummary& s, const std::string& key) {
    for (const auto& kv : s.bounds)
        if (kv.first == key) return kv.second;
    return "<absent>";
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("config keys and aliases", "[harness]") {
    ExperimentConfig cfg;

    REQUIRE(apply_config_kv(cfg, "mode", "er"));
    REQUIRE(cfg.mode == Mode::er_longest_path);
    REQUIRE(apply_config_kv(cfg, "mode", "rgg-cycle"));
    REQUIRE(cfg.mode == Mode::rgg_long_cycle);
    REQUIRE(apply_config_kv(cfg, "mode", "rgg-long-cycle"));
    REQUIRE(cfg.mode == Mode::rgg_long_cycle);
    REQUIRE(apply_config_kv(cfg, "mode", "rgg-ham"));
    REQUIRE(cfg.mode == Mode::rgg_hamiltonian);
    REQUIRE(apply_config_kv(cfg, "mode", "er-longest-path"));
    REQUIRE(cfg.mode == Mode::er_longest_path);
    REQUIRE_THROWS_AS(apply_config_kv(cfg, "mode", "bogus"), std::invalid_argument);

    REQUIRE(apply_config_kv(cfg, "n", "500"));
    REQUIRE(cfg.n == 500);
    REQUIRE(apply_config_kv(cfg, "trials", "7"));
    REQUIRE(cfg.trials == 7);
    REQUIRE(apply_config_kv(cfg, "seed", "18446744073709551615"));
    REQUIRE(cfg.master_seed == 18446744073709551615ull);
    REQUIRE(apply_config_kv(cfg, "threads", "3"));
    REQUIRE(cfg.threads == 3);
    REQUIRE(apply_config_kv(cfg, "p", "0.25"));
    REQUIRE(cfg.p_n == 0.25);
    REQUIRE(apply_config_kv(cfg, "beta1", "0.8"));
    REQUIRE(apply_config_kv(cfg, "beta2", "0.9"));
    REQUIRE(apply_config_kv(cfg, "delta", "0.3"));
    REQUIRE(apply_config_kv(cfg, "M-log", "2.5"));
    REQUIRE(cfg.M_log.has_value());
    REQUIRE(*cfg.M_log == 2.5);
    REQUIRE(apply_config_kv(cfg, "budget", "250"));
    REQUIRE(cfg.rotation_budget == 250);
    REQUIRE(apply_config_kv(cfg, "force-rotation", "yes"));
    REQUIRE(cfg.force_rotation);
    REQUIRE(apply_config_kv(cfg, "force-rotation", "0"));
    REQUIRE_FALSE(cfg.force_rotation);
    REQUIRE(apply_config_kv(cfg, "band-M", "6"));
    REQUIRE(cfg.band_M == 6);
    REQUIRE(apply_config_kv(cfg, "delta1", "1.5"));
    REQUIRE(apply_config_kv(cfg, "delta2", "1.25"));
    REQUIRE(apply_config_kv(cfg, "C", "2.0"));
    REQUIRE(cfg.C_ham == 2.0);
    REQUIRE(apply_config_kv(cfg, "timing", "true"));
    REQUIRE(cfg.timing);
    REQUIRE(apply_config_kv(cfg, "output", "/tmp/out.csv"));
    REQUIRE(cfg.output_path == "/tmp/out.csv");

    // the last radius-style key decides the rule
    REQUIRE(apply_config_kv(cfg, "r", "0.3"));
    REQUIRE(cfg.radius_rule == RadiusRule::explicit_r);
    REQUIRE(apply_config_kv(cfg, "c", "2.5"));
    REQUIRE(cfg.radius_rule == RadiusRule::c_log);
    REQUIRE(apply_config_kv(cfg, "omega", "4.0"));
    REQUIRE(cfg.radius_rule == RadiusRule::omega);
    REQUIRE(apply_config_kv(cfg, "r", "0.2"));
    REQUIRE(cfg.radius_rule == RadiusRule::explicit_r);

    // unknown keys are reported, not swallowed
    REQUIRE_FALSE(apply_config_kv(cfg, "frobnicate", "1"));

    // malformed values
    REQUIRE_THROWS_AS(apply_config_kv(cfg, "n", "0"), std::invalid_argument);
    REQUIRE_THROWS_AS(apply_config_kv(cfg, "n", "12x"), std::invalid_argument);
    REQUIRE_THROWS_AS(apply_config_kv(cfg, "n", "x"), std::invalid_argument);
    REQUIRE_THROWS_AS(apply_config_kv(cfg, "threads", "5000"), std::invalid_argument);
    REQUIRE_THROWS_AS(apply_config_kv(cfg, "p", "lots"), std::invalid_argument);
    REQUIRE_THROWS_AS(apply_config_kv(cfg, "timing", "maybe"), std::invalid_argument);
    REQUIRE_THROWS_AS(apply_config_kv(cfg, "seed", "not-a-seed"), std::invalid_argument);
}

TEST_CASE("weights file loading", "[harness]") {
    ExperimentConfig cfg;
    const TempFile wf("longcycle_test_weights.txt", "1.0 2.0\n3.0\n");
    REQUIRE(apply_config_kv(cfg, "weights-file", wf.path));
    REQUIRE(cfg.weights == std::vector<double>{1.0, 2.0, 3.0});
    REQUIRE_THROWS_AS(apply_config_kv(cfg, "weights-file", "/tmp/no-such-file-xyzzy"),
                      std::invalid_argument);
}

TEST_CASE("config file loading", "[harness]") {
    const TempFile good("longcycle_test_good.cfg",
                        "# experiment\n"
                        "mode=rgg-ham   # alias\n"
                        "n=500\n"
                        "\n"
                        "omega=3.5\n"
                        "timing=true\n");
    ExperimentConfig cfg;
    load_config_file(cfg, good.path);
    REQUIRE(cfg.mode == Mode::rgg_hamiltonian);
    REQUIRE(cfg.n == 500);
    REQUIRE(cfg.radius_rule == RadiusRule::omega);
    REQUIRE(cfg.omega == 3.5);
    REQUIRE(cfg.timing);

    const TempFile noeq("longcycle_test_noeq.cfg", "n=9\nbogus line\n");
    ExperimentConfig c2;
    REQUIRE_THROWS_WITH(load_config_file(c2, noeq.path),
                        Catch::Matchers::ContainsSubstring(noeq.path + ":2"));

    const TempFile unknown("longcycle_test_unknown.cfg", "nope=1\n");
    ExperimentConfig c3;
    REQUIRE_THROWS_WITH(load_config_file(c3, unknown.path),
                        Catch::Matchers::ContainsSubstring("unknown key 'nope'"));

    ExperimentConfig c4;
    REQUIRE_THROWS_WITH(load_config_file(c4, "/tmp/no-such-config-xyzzy"),
                        Catch::Matchers::ContainsSubstring("cannot open"));
}

TEST_CASE("config validation", "[harness]") {
    auto reject = [](auto&& mutate) {
        ExperimentConfig cfg;
        cfg.mode = Mode::er_longest_path;
        cfg.n = 10;
        mutate(cfg);
        REQUIRE_THROWS_AS(cfg.validate(), std::invalid_argument);
    };
    ExperimentConfig ok;
    REQUIRE_NOTHROW(ok.validate());

    reject([](ExperimentConfig& c) { c.n = 0; });
    reject([](ExperimentConfig& c) { c.trials = 0; });
    reject([](ExperimentConfig& c) { c.threads = 0; });
    reject([](ExperimentConfig& c) { c.p_n = 1.5; });
    reject([](ExperimentConfig& c) { c.weights = {1.0, 2.0}; }); // n = 10
    reject([](ExperimentConfig& c) { c.rotation_budget = 0; });
    reject([](ExperimentConfig& c) { c.beta1 = 0.0; });
    reject([](ExperimentConfig& c) { c.beta2 = 1.1; });
    reject([](ExperimentConfig& c) { c.delta = 0.0; });
    reject([](ExperimentConfig& c) { c.delta = 1.0; });
    reject([](ExperimentConfig& c) {
        c.mode = Mode::rgg_long_cycle;
        c.radius_rule = RadiusRule::explicit_r;
        c.r = 0.0;
    });
    reject([](ExperimentConfig& c) {
        c.mode = Mode::rgg_long_cycle;
        c.radius_rule = RadiusRule::c_log;
        c.c_log = 0.0;
    });
    reject([](ExperimentConfig& c) {
        c.mode = Mode::rgg_hamiltonian;
        c.band_M = 0;
    });
}

TEST_CASE("radius resolution", "[harness]") {
    ExperimentConfig cfg;
    cfg.mode = Mode::rgg_long_cycle;
    cfg.n = 100;
    cfg.radius_rule = RadiusRule::explicit_r;
    cfg.r = 0.37;
    REQUIRE(resolve_radius(cfg) == 0.37);

    cfg.radius_rule = RadiusRule::c_log;
    cfg.c_log = 2.0;
    REQUIRE(resolve_radius(cfg) ==
            Catch::Approx(std::sqrt(2.0 * std::log(100.0) / 100.0)).epsilon(1e-15));

    cfg.radius_rule = RadiusRule::omega;
    cfg.n = 2000;
    cfg.omega = 10.0;
    const double nr2 = std::log(2000.0) + 7.0 * std::log(std::log(2000.0)) + 10.0;
    REQUIRE(resolve_radius(cfg) == Catch::Approx(std::sqrt(nr2 / 2000.0)).epsilon(1e-15));

    cfg.n = 100;
    cfg.omega = -16.0; // drives n r^2 negative
    REQUIRE_THROWS_AS(resolve_radius(cfg), std::invalid_argument);
}

TEST_CASE("side-selection ladder", "[harness]") {
    // hamiltonian + omega radius, spanning rule feasible
    ExperimentConfig ham;
    ham.mode = Mode::rgg_hamiltonian;
    ham.n = 2000;
    ham.radius_rule = RadiusRule::omega;
    ham.omega = 0.0;
    const ResolvedSetup a = resolve_setup(ham);
    REQUIRE(a.tiling == "tn");
    REQUIRE(a.k == 28);
    REQUIRE(a.tn_delta.has_value());
    REQUIRE(*a.tn_delta == Catch::Approx(1.3906080886709518).epsilon(1e-12));
    REQUIRE(a.band_height == 4);
    REQUIRE(a.s == 1.0 / 28.0);
    REQUIRE(a.nr2 == Catch::Approx(2000.0 * a.r * a.r).epsilon(1e-12));

    // still feasible at omega = 10
    ham.omega = 10.0;
    REQUIRE(resolve_setup(ham).tiling == "tn");
    REQUIRE(resolve_setup(ham).k == 23);

    // spanning rule infeasible at omega = 4: falls to the one-quarter rule
    ham.omega = 4.0;
    const ResolvedSetup b = resolve_setup(ham);
    REQUIRE(b.tiling == "eps1");
    REQUIRE(b.k == 36);
    REQUIRE_FALSE(b.tn_delta.has_value());

    // radius above 1: coarse fallback, side still below r / (2 sqrt 2)
    ExperimentConfig coarse;
    coarse.mode = Mode::rgg_hamiltonian;
    coarse.n = 50;
    coarse.radius_rule = RadiusRule::explicit_r;
    coarse.r = 2.0;
    const ResolvedSetup c = resolve_setup(coarse);
    REQUIRE(c.tiling == "coarse");
    REQUIRE(c.k == 2);
    REQUIRE(2.0 * std::sqrt(2.0) * c.s < c.r);

    // long-cycle mode skips the spanning rung and scales bands by K_n
    ExperimentConfig lc;
    lc.mode = Mode::rgg_long_cycle;
    lc.n = 2000;
    lc.radius_rule = RadiusRule::omega;
    lc.omega = 0.0;
    const ResolvedSetup d = resolve_setup(lc);
    REQUIRE(d.tiling == "eps1");
    REQUIRE(d.k == 39);
    REQUIRE_FALSE(d.tn_delta.has_value());
    REQUIRE(d.band_height == 4); // band_M = 4, K_n = 1 at this radius
}

TEST_CASE("trial seeds and determinism", "[harness]") {
    ExperimentConfig cfg;
    cfg.mode = Mode::er_longest_path;
    cfg.n = 10;
    cfg.p_n = 1.0;
    cfg.master_seed = 77;

    const TrialRecord rec = run_trial(cfg, 3);
    REQUIRE(rec.index == 3);
    REQUIRE(rec.seed == derive_trial_seed(77, 3));
    REQUIRE(rec.n == 10);
    REQUIRE(rec.length == 10); // complete graph: exact solver finds all of it
    REQUIRE(rec.outcome == "ok");
    REQUIRE_FALSE(rec.F_n.has_value()); // geometric flags absent in ER mode
    REQUIRE_FALSE(rec.X_O.has_value());

    const TrialRecord again = run_trial(cfg, 3);
    REQUIRE(again.seed == rec.seed);
    REQUIRE(again.length == rec.length);
    REQUIRE(again.outcome == rec.outcome);
    REQUIRE(run_trial(cfg, 4).seed != rec.seed);

    // rotation path reaches the same length on a complete graph
    cfg.force_rotation = true;
    cfg.rotation_budget = 1;
    REQUIRE(run_trial(cfg, 3).length == 10);
}

TEST_CASE("minimum-degree flag follows the threshold", "[harness]") {
    ExperimentConfig cfg;
    cfg.mode = Mode::er_longest_path;
    cfg.n = 10;
    cfg.p_n = 1.0;
    cfg.master_seed = 1;

    cfg.beta2 = 1.0; // t0 = 10 > min degree 9
    REQUIRE(run_trial(cfg, 0).A_i == std::optional<bool>(false));
    cfg.beta2 = 0.5; // t0 = 5 <= 9
    REQUIRE(run_trial(cfg, 0).A_i == std::optional<bool>(true));
}

TEST_CASE("trial errors are recorded, not thrown", "[harness]") {
    ExperimentConfig cfg;
    cfg.mode = Mode::er_longest_path;
    cfg.n = 5;
    cfg.weights = {1.0, 2.0}; // wrong length; run_trial does not pre-validate
    const TrialRecord rec = run_trial(cfg, 0);
    REQUIRE(rec.length == 0);
    REQUIRE(rec.outcome.rfind("error:", 0) == 0);
}

TEST_CASE("hamiltonian pipeline trials on a dense geometric graph", "[harness][stats]") {
    ExperimentConfig cfg;
    cfg.mode = Mode::rgg_hamiltonian;
    cfg.n = 50;
    cfg.trials = 100;
    cfg.master_seed = 11;
    cfg.radius_rule = RadiusRule::explicit_r;
    cfg.r = 2.0; // complete geometric graph: construction must succeed

    const TrialRecord first = run_trial(cfg, 0);
    REQUIRE(first.length == 50);
    REQUIRE(first.outcome == "ok");
    REQUIRE(first.F_n.has_value());
    REQUIRE(first.H_n.has_value());
    REQUIRE(first.X_O.has_value());
    REQUIRE_FALSE(first.A_i.has_value());

    cfg.threads = 2;
    const std::vector<TrialRecord> recs = run_trials(cfg);
    REQUIRE(recs.size() == 100);
    for (const auto& r : recs) {
        REQUIRE(r.outcome == "ok");
        REQUIRE(r.length == 50);
        REQUIRE(r.length <= cfg.n);
        if (r.H_n.value()) REQUIRE(r.F_n.value());
        REQUIRE(r.X_O.value() >= 0);
    }

    const ExperimentSummary s = summarize(cfg, resolve_setup(cfg), recs);
    REQUIRE(s.hamiltonian.has_value());
    REQUIRE(s.hamiltonian->freq == 1.0);
    REQUIRE(s.construct_ok.freq == 1.0);
    REQUIRE(s.length.mean == 50.0);
}

TEST_CASE("sparse clouds report no-backbone", "[harness]") {
    ExperimentConfig cfg;
    cfg.mode = Mode::rgg_long_cycle;
    cfg.n = 20;
    cfg.master_seed = 5;
    cfg.radius_rule = RadiusRule::explicit_r;
    cfg.r = 0.1; // 20 points cannot make any side-1/41 square dense

    const TrialRecord rec = run_trial(cfg, 0);
    REQUIRE(rec.outcome == "no-backbone");
    REQUIRE(rec.length == 0);
    REQUIRE(rec.F_n == std::optional<bool>(false));
    REQUIRE(rec.I_n == std::optional<bool>(false));
    REQUIRE(rec.X_O == std::optional<long long>(20));
}

TEST_CASE("frequency intervals", "[harness]") {
    const FreqCI w = freq_ci(2, 20);
    REQUIRE(w.wilson);
    REQUIRE(w.freq == 0.1);
    REQUIRE(w.lo == Catch::Approx(0.027866481213768216).epsilon(1e-12));
    REQUIRE(w.hi == Catch::Approx(0.30103364522848727).epsilon(1e-12));

    const FreqCI nrm = freq_ci(50, 100);
    REQUIRE_FALSE(nrm.wilson);
    REQUIRE(nrm.freq == 0.5);
    REQUIRE(nrm.lo == Catch::Approx(0.4020018007729973).epsilon(1e-12));
    REQUIRE(nrm.hi == Catch::Approx(0.5979981992270027).epsilon(1e-12));

    REQUIRE(freq_ci(96, 100).wilson); // fewer than 5 failures
    REQUIRE_FALSE(freq_ci(5, 100).wilson);
    REQUIRE(freq_ci(0, 10).lo == 0.0);
    REQUIRE(freq_ci(10, 10).hi == Catch::Approx(1.0).epsilon(1e-12));
    REQUIRE(freq_ci(10, 10).hi <= 1.0);

    const FreqCI zero = freq_ci(0, 0);
    REQUIRE(zero.freq == 0.0);
    REQUIRE(zero.lo == 0.0);
    REQUIRE(zero.hi == 1.0);
}

TEST_CASE("mean and standard error", "[harness]") {
    const MeanSe m = mean_se({1.0, 2.0, 3.0, 4.0});
    REQUIRE(m.mean == 2.5);
    REQUIRE(m.se == Catch::Approx(0.6454972243679028).epsilon(1e-12));
    REQUIRE(mean_se({7.0}).mean == 7.0);
    REQUIRE(mean_se({7.0}).se == 0.0);
    REQUIRE(mean_se({}).mean == 0.0);
}

TEST_CASE("cell sanitizing", "[harness]") {
    REQUIRE(detail::sanitize_cell("a,b\nc\rd") == "a;b;c;d");
    REQUIRE(detail::sanitize_cell("plain") == "plain");
}

TEST_CASE("csv emission", "[harness]") {
    ExperimentConfig cfg;
    cfg.mode = Mode::er_longest_path;
    cfg.n = 6;
    cfg.p_n = 0.5;
    cfg.trials = 3;
    cfg.master_seed = 9;

    const ExperimentResult res = run_experiment(cfg);
    const std::string csv = csv_string(res);
    const auto lines = split_lines(csv);

    REQUIRE(lines.at(0) == "trial,seed,n,length,F_n,I_n,J_n,H_n,A_i,X_O,outcome,wall_ms");
    for (int i = 0; i < 3; ++i) {
        const auto fields = split_fields(lines.at(1 + static_cast<std::size_t>(i)));
        REQUIRE(fields.size() == 12);
        REQUIRE(fields[0] == std::to_string(i));
        REQUIRE(fields[1] == std::to_string(derive_trial_seed(9, static_cast<std::uint64_t>(i))));
        REQUIRE(fields[2] == "6");
        REQUIRE(fields[4].empty());  // geometric flags unused in ER mode
        REQUIRE(fields[9].empty());  // X_O likewise
        REQUIRE((fields[8] == "0" || fields[8] == "1"));
        REQUIRE(fields[10] == "ok");
        REQUIRE(fields[11].empty()); // timing off leaves the cell empty
    }
    REQUIRE(csv.find("# config mode=er-longest-path n=6 trials=3 seed=9") != std::string::npos);
    REQUIRE(csv.find("model=homogeneous") != std::string::npos);
    REQUIRE(csv.find("# bound expected_Ln_lower=") != std::string::npos);

    // byte identity across reruns
    REQUIRE(csv_string(run_experiment(cfg)) == csv);

    // timing opt-in fills the last cell
    cfg.timing = true;
    const auto timed = split_lines(csv_string(run_experiment(cfg)));
    REQUIRE_FALSE(split_fields(timed.at(1)).at(11).empty());
}

TEST_CASE("csv is identical across thread counts", "[harness][stats]") {
    ExperimentConfig cfg;
    cfg.mode = Mode::rgg_hamiltonian;
    cfg.n = 50;
    cfg.trials = 12;
    cfg.master_seed = 11;
    cfg.radius_rule = RadiusRule::explicit_r;
    cfg.r = 2.0;

    cfg.threads = 1;
    const std::string serial = csv_string(run_experiment(cfg));
    cfg.threads = 3;
    const std::string parallel = csv_string(run_experiment(cfg));
    REQUIRE(serial == parallel);
    REQUIRE(serial.find("# setup r=2") != std::string::npos);
    REQUIRE(serial.find("tiling=coarse") != std::string::npos);
}

TEST_CASE("summary bound lines reproduce the closed forms", "[harness]") {
    ExperimentConfig cfg;
    cfg.mode = Mode::er_longest_path;
    cfg.n = 100;
    cfg.p_n = 0.3;
    cfg.beta1 = 0.8;
    cfg.beta2 = 0.9;
    cfg.delta = 0.25;
    cfg.trials = 2;
    cfg.master_seed = 1;

    const ExperimentResult res = run_experiment(cfg);
    BoundParams bp;
    bp.n = 100;
    bp.p_n = 0.3;
    bp.beta1 = 0.8;
    bp.beta2 = 0.9;
    bp.delta = 0.25;
    bp.M = 100 * 0.3 * 0.3 / std::log(100.0);
    const TheoremOneReport rep = theorem1_bounds(bp);
    REQUIRE(bound_value(res.summary, "expected_Ln_lower") ==
            detail::fmt("%.12g", rep.expected_Ln_lower));
    REQUIRE(bound_value(res.summary, "Ln_threshold") == detail::fmt("%.12g", rep.Ln_threshold));
    REQUIRE(bound_value(res.summary, "prob_lower") == detail::fmt("%.12g", rep.prob_lower));

    // rgg bounds appear under the geometric modes
    ExperimentConfig rg;
    rg.mode = Mode::rgg_hamiltonian;
    rg.n = 2000;
    rg.trials = 2;
    rg.master_seed = 99;
    rg.radius_rule = RadiusRule::omega;
    rg.omega = 0.0;
    const ExperimentResult rres = run_experiment(rg);
    REQUIRE(rres.setup.has_value());
    REQUIRE(rres.setup->tiling == "tn");
    REQUIRE(rres.setup->k == 28);
    REQUIRE(bound_value(rres.summary, "ham_prob_lower") ==
            detail::fmt("%.12g", rgg_hamiltonian_bound(0.0, 1.0)));
    REQUIRE(bound_value(rres.summary, "lc_threshold") != "<absent>");
    const std::string rcsv = csv_string(rres);
    REQUIRE(rcsv.find("# setup r=") != std::string::npos);
    REQUIRE(rcsv.find("tn_delta=") != std::string::npos);
    REQUIRE(rcsv.find("# freq hamiltonian=") != std::string::npos);
}

TEST_CASE("omega sweep wiring", "[harness][stats]") {
    ExperimentConfig base;
    base.n = 50;
    base.trials = 5;
    base.master_seed = 321;

    const SweepResult sweep = run_sweep(base, {0.0, 5.0});
    REQUIRE(sweep.base_seed == 321);
    REQUIRE(sweep.points.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        const SweepPoint& pt = sweep.points[i];
        REQUIRE(pt.result.config.mode == Mode::rgg_hamiltonian);
        REQUIRE(pt.result.config.radius_rule == RadiusRule::omega);
        REQUIRE(pt.result.config.master_seed == derive_trial_seed(321, 1000000u + i));
        REQUIRE(pt.result.records.size() == 5);
        for (int j = 0; j < 5; ++j)
            REQUIRE(pt.result.records[static_cast<std::size_t>(j)].seed ==
                    derive_trial_seed(pt.result.config.master_seed,
                                      static_cast<std::uint64_t>(j)));
    }
    REQUIRE(sweep.points[0].omega == 0.0);
    REQUIRE(sweep.points[1].omega == 5.0);

    std::ostringstream ss;
    write_sweep_csv(ss, sweep);
    const auto lines = split_lines(ss.str());
    REQUIRE(lines.at(0) ==
            "omega,trials,ham_freq,ham_ci_lo,ham_ci_hi,F_freq,H_freq,construct_ok_freq,"
            "mean_length,mean_X_O,bound_ham");
    REQUIRE(lines.size() == 4); // header + 2 points + footer
    REQUIRE(lines.at(3).find("seed=321") != std::string::npos);
}
