// Command-line front end: experiment runners (er, rgg, sweep), the
// verification suite (verify), and single-trial artifact dumps (dump).
// Exit codes: 0 success, 1 configuration/usage error, 2 verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <longcycle/verify.hpp>

namespace {

using namespace longcycle;

// Every experiment flag funnels through the same key=value channel as the
// config file, so the CLI and the file format cannot drift apart. Flags are
// applied after the file and override it; the subcommand pins the mode.
struct KvOpts {
    std::string config_path;
    std::vector<std::pair<std::string, std::string>> kvs;
};

void add_kv_option(CLI::App* cmd, KvOpts& opts, const std::string& flag, const std::string& key,
                   const std::string& desc) {
    cmd->add_option_function<std::string>(
        flag, [&opts, key](const std::string& v) { opts.kvs.emplace_back(key, v); }, desc);
}

void add_config_option(CLI::App* cmd, KvOpts& opts) {
    cmd->add_option("--config", opts.config_path,
                    "key=value config file; flags override its entries")
        ->check(CLI::ExistingFile);
}

void add_common_options(CLI::App* cmd, KvOpts& opts) {
    add_config_option(cmd, opts);
    add_kv_option(cmd, opts, "--n", "n", "number of vertices");
    add_kv_option(cmd, opts, "--trials", "trials", "number of trials");
    add_kv_option(cmd, opts, "--seed", "seed", "master seed");
    add_kv_option(cmd, opts, "--threads", "threads", "worker threads");
    add_kv_option(cmd, opts, "--timing", "timing", "record wall time per trial (0/1)");
    add_kv_option(cmd, opts, "--output", "output", "output file (default: stdout)");
}

void add_er_options(CLI::App* cmd, KvOpts& opts) {
    add_kv_option(cmd, opts, "--p", "p", "edge probability scale p_n");
    add_kv_option(cmd, opts, "--weights-file", "weights-file",
                  "vertex weights for the product model, one per line");
    add_kv_option(cmd, opts, "--beta1", "beta1", "set-average lower-bound parameter");
    add_kv_option(cmd, opts, "--beta2", "beta2", "set-size fraction parameter");
    add_kv_option(cmd, opts, "--delta", "delta", "deviation parameter of the bounds");
    add_kv_option(cmd, opts, "--M-log", "M-log", "declare the n p^2 = M log n regime");
    add_kv_option(cmd, opts, "--budget", "budget", "rotation-extension step budget");
    add_kv_option(cmd, opts, "--force-rotation", "force-rotation",
                  "use the heuristic even when n is small enough for the exact solver (0/1)");
}

void add_rgg_options(CLI::App* cmd, KvOpts& opts) {
    add_kv_option(cmd, opts, "--r", "r", "explicit connection radius");
    add_kv_option(cmd, opts, "--c", "c", "radius rule nr^2 = c log n");
    add_kv_option(cmd, opts, "--omega", "omega",
                  "radius rule nr^2 = log n + 7 log log n + omega");
    add_kv_option(cmd, opts, "--band-M", "band-M", "band height multiplier");
    add_kv_option(cmd, opts, "--delta1", "delta1", "long-cycle threshold constant");
    add_kv_option(cmd, opts, "--delta2", "delta2", "long-cycle probability constant");
    add_kv_option(cmd, opts, "--C", "C", "hamiltonicity probability constant");
}

ExperimentConfig build_config(const KvOpts& opts, Mode default_mode,
                              std::initializer_list<Mode> allowed) {
    ExperimentConfig cfg;
    cfg.mode = default_mode;
    if (!opts.config_path.empty()) load_config_file(cfg, opts.config_path);
    for (const auto& [key, value] : opts.kvs)
        if (!apply_config_kv(cfg, key, value))
            throw std::invalid_argument("unknown config key: " + key);
    bool ok = false;
    for (Mode m : allowed) ok = ok || cfg.mode == m;
    if (!ok)
        throw std::invalid_argument("config mode " + to_string(cfg.mode) +
                                    " conflicts with this subcommand");
    cfg.validate();
    return cfg;
}

// Writes through a stringstream so a failed run never leaves a partial file.
int emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file " << path << '\n';
        return 1;
    }
    out << text;
    return 0;
}

int run_experiment_command(const KvOpts& opts, Mode default_mode,
                           std::initializer_list<Mode> allowed) {
    const ExperimentConfig cfg = build_config(opts, default_mode, allowed);
    const ExperimentResult res = run_experiment(cfg);
    return emit(cfg.output_path, csv_string(res));
}

std::vector<double> parse_omegas(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument("trailing");
        } catch (...) {
            throw std::invalid_argument("bad omega value: " + item);
        }
    }
    if (out.empty()) throw std::invalid_argument("empty omega list");
    return out;
}

int run_sweep_command(const KvOpts& opts, const std::string& omegas_text) {
    const ExperimentConfig base =
        build_config(opts, Mode::rgg_hamiltonian,
                     {Mode::rgg_hamiltonian, Mode::rgg_long_cycle, Mode::er_longest_path});
    const SweepResult sw = run_sweep(base, parse_omegas(omegas_text));
    std::ostringstream ss;
    write_sweep_csv(ss, sw);
    return emit(base.output_path, ss.str());
}

int run_dump_command(const KvOpts& opts, const std::string& what, int trial) {
    const ExperimentConfig cfg =
        build_config(opts, Mode::rgg_long_cycle,
                     {Mode::er_longest_path, Mode::rgg_long_cycle, Mode::rgg_hamiltonian});
    if (trial < 0) throw std::invalid_argument("trial index must be >= 0");
    const std::uint64_t seed = derive_trial_seed(cfg.master_seed, static_cast<std::uint64_t>(trial));
    std::ostringstream ss;

    if (cfg.mode == Mode::er_longest_path) {
        const EdgeProbModel model =
            cfg.weights.empty() ? EdgeProbModel::homogeneous(cfg.n, cfg.p_n)
                                : EdgeProbModel::weighted_product(cfg.n, cfg.p_n, cfg.weights);
        const Graph g = sample_er(model, seed);
        if (what == "graph") {
            write_graph(ss, g);
        } else if (what == "cycle") {
            const CycleWalk walk = (!cfg.force_rotation && cfg.n <= 24)
                                       ? longest_path_exact(g)
                                       : longest_path_rotation(g, cfg.rotation_budget, seed);
            write_cycle(ss, walk);
        } else {
            throw std::invalid_argument("dump --what " + what +
                                        " is not available in er mode (use graph|cycle)");
        }
        return emit(cfg.output_path, ss.str());
    }

    const ResolvedSetup rs = resolve_setup(cfg);
    const auto sampled = sample_rgg(cfg.n, rs.r, DensitySpec::uniform(), seed);
    const PointCloud& cloud = sampled.first;
    const Graph& g = sampled.second;
    if (what == "points") {
        write_point_cloud(ss, cloud);
        return emit(cfg.output_path, ss.str());
    }
    if (what == "graph") {
        write_graph(ss, g);
        return emit(cfg.output_path, ss.str());
    }
    const Tiling t = build_tiling(cloud, rs.s);
    const BandSet bands_h = make_bands(t.k(), rs.band_height, true);
    const BandSet bands_v = make_bands(t.k(), rs.band_height, false);
    const BackboneBuild bb = build_backbone(t, bands_h, bands_v);
    if (what == "tiling") {
        std::vector<int> marks;
        if (bb.backbone) marks = bb.backbone->squares;
        ss << "# k=" << t.k() << " s=" << t.s() << " dense=" << t.dense_count()
           << " F_n=" << (bb.F_n ? 1 : 0) << " backbone=" << marks.size() << '\n';
        write_tiling_grid(ss, t, marks);
        return emit(cfg.output_path, ss.str());
    }
    if (what == "cycle") {
        if (!bb.backbone || bb.backbone->squares.empty())
            throw std::runtime_error("no backbone in this trial; nothing to dump");
        BuildOutcome out = merge_backbone_cycles(t, *bb.backbone, g);
        if (out.ok && cfg.mode == Mode::rgg_hamiltonian)
            out = extend_with_sparse(out.cycle, t, *bb.backbone, g);
        if (!out.ok) throw std::runtime_error("construction failed: " + out.failure);
        write_cycle(ss, out.cycle);
        return emit(cfg.output_path, ss.str());
    }
    throw std::invalid_argument("dump --what must be points|graph|tiling|cycle");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Long cycles in random geometric graphs and longest paths in inhomogeneous "
                 "random graphs: samplers, tiling construction, bounds, and Monte Carlo "
                 "experiments"};
    app.require_subcommand(1);

    KvOpts er_opts;
    CLI::App* er = app.add_subcommand("er", "longest-path experiment on the edge-probability model");
    add_common_options(er, er_opts);
    add_er_options(er, er_opts);

    KvOpts rgg_opts;
    bool rgg_ham = false;
    CLI::App* rgg = app.add_subcommand("rgg", "cycle-construction experiment on geometric graphs");
    add_common_options(rgg, rgg_opts);
    add_rgg_options(rgg, rgg_opts);
    rgg->add_flag("--hamiltonian", rgg_ham,
                  "extend the backbone cycle through sparse squares (spanning-cycle mode)");

    KvOpts sweep_opts;
    std::string omegas_text = "-4,0,4,8,12";
    CLI::App* sweep = app.add_subcommand("sweep", "hamiltonian-mode experiment per omega value");
    add_common_options(sweep, sweep_opts);
    add_rgg_options(sweep, sweep_opts);
    sweep->add_option("--omegas", omegas_text, "comma-separated omega values");

    std::string level_text = "fast";
    int check_id = 0;
    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--level", level_text, "fast (reduced trials) or full (acceptance scale)")
        ->check(CLI::IsMember({"fast", "full"}));
    verify->add_option("--check", check_id, "run a single check by id (1-11)")
        ->check(CLI::Range(1, 11));

    KvOpts dump_opts;
    std::string what = "tiling";
    int trial = 0;
    CLI::App* dump = app.add_subcommand("dump", "write one trial's artifact");
    add_common_options(dump, dump_opts);
    add_er_options(dump, dump_opts);
    add_rgg_options(dump, dump_opts);
    dump->add_option("--what", what, "points|graph|tiling|cycle");
    dump->add_option("--trial", trial, "trial index within the experiment");
    dump->add_option_function<std::string>(
        "--mode",
        [&dump_opts](const std::string& v) { dump_opts.kvs.emplace_back("mode", v); },
        "er|rgg|rgg-hamiltonian (default rgg)");
    dump->add_flag("--hamiltonian", rgg_ham, "spanning-cycle mode for rgg dumps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (er->parsed())
            return run_experiment_command(er_opts, Mode::er_longest_path,
                                          {Mode::er_longest_path});
        if (rgg->parsed()) {
            if (rgg_ham) rgg_opts.kvs.emplace_back("mode", "rgg-hamiltonian");
            return run_experiment_command(rgg_opts, Mode::rgg_long_cycle,
                                          {Mode::rgg_long_cycle, Mode::rgg_hamiltonian});
        }
        if (sweep->parsed()) return run_sweep_command(sweep_opts, omegas_text);
        if (verify->parsed()) {
            const auto level = level_text == "full" ? longcycle::verify::VerifyLevel::full
                                                    : longcycle::verify::VerifyLevel::fast;
            int failures = 0;
            if (check_id != 0) {
                const auto cr = longcycle::verify::run_check(check_id, level);
                longcycle::verify::print_check(std::cout, cr);
                failures = cr.pass ? 0 : 1;
            } else {
                failures = longcycle::verify::verify_suite(std::cout, level);
            }
            return failures == 0 ? 0 : 2;
        }
        if (dump->parsed()) {
            if (rgg_ham) dump_opts.kvs.emplace_back("mode", "rgg-hamiltonian");
            return run_dump_command(dump_opts, what, trial);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
