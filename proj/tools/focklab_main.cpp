// focklab command-line front end: validate / run <experiment> / berezin.
// Loads JSON configs, runs the experiment suites, and persists CSV rows,
// JSON manifests and SVG profile plots.

#include "focklab/experiments.hpp"
#include "focklab/io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>

namespace {

using namespace focklab;

const std::set<std::string> kExperiments = {
    "thm37", "lem38",  "thm39", "lem43", "lem41",         "lem26", "lem33",
    "thm62", "cor63",  "thm11", "lem12", "sec7",          "carleson-audit"};

const std::set<std::string> kSeedRequired = {"lem41", "lem12"};

struct CliOverrides {
    std::string config_path;
    std::string out_dir;
    bool have_out = false;
    std::uint64_t seed = 0;
    bool have_seed = false;
    int degree = 0;
    double alpha = 0.0;
};

RunConfig load_config(const CliOverrides& o) {
    RunConfig cfg;
    if (!o.config_path.empty()) cfg = parse_config_file(o.config_path);
    if (o.alpha > 0.0) cfg.alpha = o.alpha;
    if (o.degree > 0) cfg.degree = o.degree;
    if (o.have_seed) {
        cfg.seed = o.seed;
        cfg.seed_set = true;
    }
    if (o.have_out) cfg.out_dir = o.out_dir;
    TruncationParams check(cfg.alpha, cfg.degree);
    (void)check;
    return cfg;
}

Fixtures load_fixtures(const RunConfig& cfg) {
    if (!cfg.fixtures_path.empty()) return Fixtures::from_file(cfg.fixtures_path);
    return Fixtures::builtin();
}

void print_report_table(const ExperimentReport& rep) {
    std::printf("experiment %-16s alpha=%-6g D=%d trust_radius=%.4f\n",
                rep.name.c_str(), rep.alpha, rep.degree, rep.trust_radius);
    for (const auto& a : rep.assertions) {
        std::printf("  [%s] %-46s measured=%-13.6g threshold=%-13.6g %s\n",
                    a.pass ? "PASS" : "FAIL", a.name.c_str(), a.measured, a.threshold,
                    a.detail.c_str());
    }
}

std::vector<double> sweep_or(const RunConfig& cfg, std::vector<double> dflt) {
    return cfg.sweep.empty() ? dflt : cfg.sweep;
}

ExperimentReport dispatch(const std::string& exp, const RunConfig& cfg,
                          const FockSpace& fs, const Fixtures& fx) {
    if (exp == "thm37") {
        const MeasureSpec m =
            cfg.measure ? *cfg.measure : MeasureSpec(PointMasses{{{Complex(0, 0), 1.0}}});
        return run_thm37(m, sweep_or(cfg, {4, 40, 400, 4000}), fs);
    }
    if (exp == "lem38") return run_lem38(sweep_or(cfg, {4, 40, 400, 4000}), fs);
    if (exp == "thm39") {
        const Complex v = cfg.v == Complex(0, 0) && cfg.w == Complex(0, 0)
                              ? Complex(0.5, 0.0)
                              : cfg.v;
        const Complex w = cfg.v == Complex(0, 0) && cfg.w == Complex(0, 0)
                              ? Complex(0.0, -0.5)
                              : cfg.w;
        return run_thm39(v, w, sweep_or(cfg, {4, 40, 400, 4000}), fs);
    }
    if (exp == "lem43") return run_lem43(sweep_or(cfg, {1.0, 0.5, 0.3}), fs, fx);
    if (exp == "lem41") {
        std::vector<Complex> pts = cfg.points;
        if (pts.empty())
            pts = {Complex(0, 0), Complex(1.5, 0), Complex(3.0, 0), Complex(0, 1.5),
                   Complex(1.5, 1.5)};
        return run_lem41_interpolation(pts, cfg.seed, fs, fx);
    }
    if (exp == "lem26") {
        const MeasureSpec m = cfg.measure
                                  ? *cfg.measure
                                  : MeasureSpec(LatticeMeasure{
                                        0.5, default_lattice_cutoff(fs)});
        return run_lem26_band(m, sweep_or(cfg, {1, 2, 4, 6}), fs, fx);
    }
    if (exp == "lem33") {
        const SymbolSpec s = cfg.symbol ? *cfg.symbol : make_q_beta(1.0);
        return run_lem33_partition(s, sweep_or(cfg, {0.5, 1, 2, 4}), fs, fx);
    }
    if (exp == "thm62") {
        const OperatorDesc op = cfg.op ? *cfg.op : OperatorDesc::shift(Complex(1, 0));
        return run_thm62_profiles(op, sweep_or(cfg, {0.5, 1, 1.5, 2, 2.5, 3}), cfg.d, fs);
    }
    if (exp == "cor63") {
        const OperatorDesc op = cfg.op ? *cfg.op : OperatorDesc::vacuum();
        CoeffVector f = cfg.vector_kernel_w
                            ? fs.kernel_coeffs(*cfg.vector_kernel_w, true).coeffs
                            : CoeffVector::basis(fs.params(), cfg.vector_basis_index);
        return run_cor63(op, f, sweep_or(cfg, {0, 0.5, 1, 1.5, 2, 2.5, 3}), fs);
    }
    if (exp == "thm11") return run_thm11_dichotomy(fs, fx);
    if (exp == "lem12")
        return run_lem12_interpolation_bound(dichotomy_gallery(fs), cfg.p, cfg.trials,
                                             cfg.seed, fs);
    if (exp == "sec7") {
        const SymbolSpec s =
            cfg.symbol ? *cfg.symbol
                       : SymbolSpec(BallIndicator{Complex(0, 0), 1.0, false});
        return run_sec7_spectral(s, cfg.k_max, fs);
    }
    if (exp == "carleson-audit")
        return run_carleson_audit(sweep_or(cfg, {0.25, 0.5, 1.0}), cfg.r, fs, fx);
    throw std::invalid_argument("unknown experiment '" + exp + "'");
}

int cmd_validate(const CliOverrides& o) {
    const RunConfig cfg = load_config(o);
    const FockSpace fs(TruncationParams(cfg.alpha, cfg.degree), cfg.grid);
    const ExperimentReport rep = run_core_validation(fs, cfg.tolerances);
    print_report_table(rep);
    if (!rep.passed()) {
        for (const auto& a : rep.assertions)
            if (!a.pass) {
                std::printf("validate: FAILED at %s\n", a.name.c_str());
                return 1;
            }
    }
    std::printf("validate: all core identities hold\n");
    return 0;
}

int cmd_run(const std::string& exp, const CliOverrides& o) {
    const RunConfig cfg = load_config(o);
    if (!kExperiments.count(exp)) {
        std::fprintf(stderr, "unknown experiment '%s'\n", exp.c_str());
        return 2;
    }
    if (kSeedRequired.count(exp) && !cfg.seed_set) {
        std::fprintf(stderr,
                     "experiment '%s' is randomized: a seed is required "
                     "(--seed or config)\n",
                     exp.c_str());
        return 2;
    }
    const FockSpace fs(TruncationParams(cfg.alpha, cfg.degree), cfg.grid);
    const Fixtures fx = load_fixtures(cfg);
    ExperimentReport rep = dispatch(exp, cfg, fs, fx);
    rep.seed = cfg.seed;
    for (const auto& [k, v] : cfg.tolerances) rep.context["tolerance_override/" + k] = v;
    const std::string dir = cfg.out_dir + "/" + exp;
    write_experiment_artifacts(rep, dir);
    print_report_table(rep);
    std::printf("artifacts: %s/{manifest.json, rows.csv, profile.svg}\n", dir.c_str());
    return rep.passed() ? 0 : 1;
}

int cmd_berezin(const CliOverrides& o) {
    const RunConfig cfg = load_config(o);
    const FockSpace fs(TruncationParams(cfg.alpha, cfg.degree), cfg.grid);
    OperatorMatrix a = OperatorMatrix::identity(fs.params());
    if (cfg.measure)
        a = toeplitz_from_measure(*cfg.measure, fs);
    else if (cfg.symbol)
        a = toeplitz_from_symbol(*cfg.symbol, fs);
    else {
        std::fprintf(stderr, "berezin: config must provide a symbol or a measure\n");
        return 2;
    }
    BerezinSampleSpec spec;
    const BerezinField f = berezin(a, spec, fs);
    const std::string dir = cfg.out_dir + "/berezin";
    std::filesystem::create_directories(dir);
    write_text_file(dir + "/field.csv", berezin_field_to_csv(f));
    write_text_file(dir + "/profile.svg", berezin_profile_svg(f));
    std::printf("artifacts: %s/{field.csv, profile.svg}\n", dir.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"focklab: truncated Fock-space operator experiments"};
    app.require_subcommand(1);

    CliOverrides o;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", o.config_path, "JSON config file");
        sub->add_option("--out", o.out_dir, "output directory")
            ->each([&](const std::string&) { o.have_out = true; });
        sub->add_option("--seed", o.seed, "seed for randomized searches")
            ->each([&](const std::string&) { o.have_seed = true; });
        sub->add_option("--degree", o.degree, "basis degree cutoff D");
        sub->add_option("--alpha", o.alpha, "Gaussian weight alpha");
    };

    CLI::App* validate = app.add_subcommand("validate", "run the core identity checks");
    add_common(validate);

    std::string experiment;
    CLI::App* run = app.add_subcommand("run", "run an experiment and write artifacts");
    run->add_option("experiment", experiment, "experiment name")->required();
    add_common(run);

    CLI::App* ber = app.add_subcommand("berezin", "Berezin transform field and profile");
    add_common(ber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(o);
        if (run->parsed()) return cmd_run(experiment, o);
        if (ber->parsed()) return cmd_berezin(o);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
