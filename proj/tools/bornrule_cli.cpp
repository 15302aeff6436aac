// bornrule: command-line front end for the Born-rule statistics library.
//
// Every subcommand writes a fixed-column table (CSV by default, JSON with
// --format json) followed by a provenance record. Exit codes:
//   0 success, 1 verification failure, 2 usage error or unknown subcommand,
//   3 invalid parameter, 4 output not writable.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bornrule/equivalence_volume.hpp"
#include "bornrule/error.hpp"
#include "bornrule/grid_counting.hpp"
#include "bornrule/max_likelihood.hpp"
#include "bornrule/measurement.hpp"
#include "bornrule/partition.hpp"
#include "bornrule/report.hpp"
#include "bornrule/selectivity.hpp"
#include "bornrule/state_sampling.hpp"
#include "bornrule/verify.hpp"

#ifndef BORNRULE_VERSION
#define BORNRULE_VERSION "unknown"
#endif

namespace {

using namespace bornrule;

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kUsage = 2,
    kInvalidParameter = 3,
    kUnwritable = 4,
};

struct CommonOptions {
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t trials = 0;
    std::string format = "csv";
    std::string out;
    unsigned workers = 0;
};

void add_common(CLI::App* sub, CommonOptions& c, std::uint64_t default_trials) {
    c.trials = default_trials;
    sub->add_option("--seed", c.seed, "master seed")->capture_default_str();
    sub->add_option("--trials", c.trials, "Monte Carlo trials or sample count")->capture_default_str();
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", c.out, "output file (default: standard output)");
    sub->add_option("--workers", c.workers, "worker threads, 0 = hardware concurrency")->capture_default_str();
}

void stamp(Table& t, const std::string& subcommand, const CommonOptions& c) {
    t.set_meta("tool", std::string("bornrule ") + BORNRULE_VERSION);
    t.set_meta("subcommand", subcommand);
    t.set_meta("seed", c.seed);
    t.set_meta("trials", c.trials);
}

// Parses "0.8,0.1,0.1" into squared radii.
std::vector<double> parse_weights(const std::string& text) {
    std::vector<double> w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            w.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidArgument("cannot parse weight '" + item + "'");
        }
    }
    if (w.empty()) throw InvalidArgument("empty weight list");
    return w;
}

std::string join_weights(const std::vector<double>& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ";" : "") + format_double(w[i]);
    return s;
}

double amp_from_born(double asq) {
    if (!(asq >= 0.0 && asq <= 1.0)) throw InvalidArgument("--asq must lie in [0, 1]");
    return std::sqrt(asq);
}

Table cmd_sample(std::size_t n, const CommonOptions& c) {
    Table t({"sample", "k", "re", "im", "modulus", "phase"});
    for (std::uint64_t i = 0; i < c.trials; ++i) {
        Stream rng = substream(c.seed, i);
        const auto psi = sample_state(n, rng);
        for (std::size_t k = 0; k < n; ++k) {
            t.add_row({i, std::uint64_t{k + 1}, psi[k].real(), psi[k].imag(), std::abs(psi[k]), std::arg(psi[k])});
        }
    }
    stamp(t, "sample", c);
    t.set_meta("n", std::uint64_t{n});
    return t;
}

Table cmd_volume(const std::vector<std::string>& weights, double eps, const CommonOptions& c) {
    std::vector<EquivalenceClassSpec> specs;
    std::vector<std::vector<double>> raw;
    for (const auto& w : weights) {
        raw.push_back(parse_weights(w));
        specs.emplace_back(RadialProfile::from_squares(raw.back()), eps);
    }
    const auto est = volume_monte_carlo(specs, c.trials, c.seed, c.workers);
    Table t({"profile", "n", "epsilon", "relative_weight", "closed_form", "mc_fraction", "mc_stderr", "hits",
             "weight_ratio", "mc_ratio", "mc_ratio_stderr"});
    const double w0 = relative_weight(specs.front().profile);
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const auto rr = ratio(est[i], est.front());
        t.add_row({join_weights(raw[i]), std::uint64_t{specs[i].profile.dim()}, eps,
                   relative_weight(specs[i].profile), volume_closed_form(specs[i]), est[i].value, est[i].std_error,
                   est[i].hits, relative_weight(specs[i].profile) / w0, rr.value, rr.std_error});
    }
    stamp(t, "volume", c);
    t.set_meta("epsilon", eps);
    return t;
}

Table cmd_partition(std::size_t n, double asq, bool scan, const CommonOptions& c) {
    const double al = amp_from_born(asq);
    const double ar = std::sqrt(1.0 - asq);
    const auto m_star = optimal_partition(n, al, ar);
    Table t = scan ? Table({"m", "log_weight", "optimal"})
                   : Table({"n", "asq", "m_star", "m_star_over_n", "stationary", "log_weight", "spread"});
    if (scan) {
        for (std::size_t m = 0; m <= n; ++m) {
            PartitionSpec spec{m, n, al, ar};
            double w = -INFINITY;
            try {
                w = log_partition_weight(spec);
            } catch (const InfeasiblePartition&) {
                continue;
            }
            t.add_row({std::uint64_t{m}, w, m == m_star});
        }
    } else {
        PartitionSpec spec{m_star, n, al, ar};
        t.add_row({std::uint64_t{n}, asq, std::uint64_t{m_star},
                   static_cast<double>(m_star) / static_cast<double>(n), stationary_partition(n, al, ar),
                   log_partition_weight(spec), ml_branch_profile(spec).spread()});
    }
    stamp(t, "partition", c);
    t.set_meta("n", std::uint64_t{n});
    t.set_meta("asq", asq);
    return t;
}

Table cmd_fluctuation(std::size_t n, double spread, const CommonOptions& c) {
    if (!(spread >= 0.0 && spread < 1.0)) throw InvalidArgument("--spread must lie in [0, 1)");
    if (n == 0) throw InvalidDimension("--n must be at least 1");
    Table t({"sample", "n", "rms", "max_abs_delta", "log_likelihood_ratio", "second_order", "three_halves_law",
             "gaussian_width", "normalization_residual"});
    std::vector<double> radii(n);
    for (std::uint64_t i = 0; i < c.trials; ++i) {
        Stream rng = substream(c.seed, i);
        for (auto& x : radii) x = 1.0 + spread * (2.0 * uniform_open(rng) - 1.0);
        const auto profile = RadialProfile::normalized(radii);
        const auto dev = deviations(profile);
        const double nn = static_cast<double>(n);
        t.add_row({i, std::uint64_t{n}, dev.rms, dev.max_abs(), log_likelihood_ratio(profile),
                   log_likelihood_second_order(dev), -1.5 * nn * dev.rms * dev.rms, gaussian_width(n),
                   dev.normalization_residual()});
    }
    stamp(t, "fluctuation", c);
    t.set_meta("n", std::uint64_t{n});
    t.set_meta("spread", spread);
    return t;
}

Table cmd_selectivity(std::size_t n, double margin, const GumbelParams& params, const CommonOptions& c) {
    const SelectivityQuery q{n, margin, params};
    Table t({"n", "margin", "mu", "sigma", "closed_form", "first_order", "limit", "n2_tanh_form", "mc_value",
             "mc_stderr", "trials"});
    double mc = NAN;
    double se = NAN;
    if (c.trials > 0) {
        const auto est = selectivity_monte_carlo(q, c.trials, c.seed, c.workers);
        mc = est.value;
        se = est.std_error;
    }
    t.add_row({std::uint64_t{n}, margin, params.mu, params.sigma, selectivity_closed_form(q),
               selectivity_first_order(q), selectivity_limit(q.scaled_margin()),
               1.0 - std::tanh(0.5 * q.scaled_margin()), mc, se, c.trials});
    stamp(t, "selectivity", c);
    return t;
}

Table cmd_grid(double r, double r_hi, std::size_t samples, double d, const CommonOptions& c) {
    const GridSpec grid{d};
    Table t({"r", "d", "count", "two_pi_r_over_d", "intersected"});
    std::vector<double> radii;
    if (r_hi > r) {
        if (samples == 0) throw InvalidArgument("--samples must be positive");
        const double step = (r_hi - r) / static_cast<double>(samples);
        for (std::size_t i = 0; i < samples; ++i) radii.push_back(r + (static_cast<double>(i) + 0.5) * step);
    } else {
        radii.push_back(r);
    }
    double total = 0.0;
    for (double rad : radii) {
        const auto count = count_circle_cells(rad, grid);
        total += static_cast<double>(count);
        t.add_row({rad, d, count, 2.0 * std::numbers::pi * rad / d, count_intersected_cells(rad, grid)});
    }
    stamp(t, "grid", c);
    t.set_meta("d", d);
    t.set_meta("mean_count", total / static_cast<double>(radii.size()));
    return t;
}

Table cmd_born(std::size_t n, const std::vector<double>& asqs, double margin, const GumbelParams& params,
               const CommonOptions& c) {
    Table t({"asq", "n", "m_star", "m_star_over_n", "p_l", "p_r", "stderr", "selective_fraction",
             "selective_closed_form", "mean_gap", "discretization_error"});
    for (double asq : asqs) {
        auto config = MeasurementConfig::from_born_weight(asq, n);
        config.params = params;
        config.margin = margin;
        config.trials = c.trials;
        config.seed = c.seed;
        const auto rep = run_measurement(config, c.workers);
        const double ratio_m = static_cast<double>(rep.m_star) / static_cast<double>(n);
        t.add_row({asq, std::uint64_t{n}, std::uint64_t{rep.m_star}, ratio_m, rep.p_l_empirical, rep.p_r_empirical,
                   rep.std_error, rep.selective_fraction, selectivity_closed_form({n, margin, params}), rep.mean_gap,
                   std::abs(ratio_m - asq)});
    }
    stamp(t, "born", c);
    t.set_meta("margin", margin);
    return t;
}

int emit(const Table& t, const CommonOptions& c) {
    const Format format = c.format == "json" ? Format::Json : Format::Csv;
    if (c.out.empty()) {
        t.write(std::cout, format);
        std::cout.flush();
        return std::cout ? kOk : kUnwritable;
    }
    std::ofstream file(c.out, std::ios::binary | std::ios::trunc);
    if (!file) {
        std::cerr << "bornrule: cannot open '" << c.out << "' for writing\n";
        return kUnwritable;
    }
    t.write(file, format);
    file.close();
    if (!file) {
        std::cerr << "bornrule: failed writing '" << c.out << "'\n";
        return kUnwritable;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Born-rule statistics: class volumes, likelihood partitions, Gumbel selectivity"};
    app.set_version_flag("--version", std::string(BORNRULE_VERSION));
    app.require_subcommand(1);

    std::map<std::string, CommonOptions> common;

    auto* sample = app.add_subcommand("sample", "Haar-random pure states");
    std::size_t sample_n = 2;
    sample->add_option("--n", sample_n, "dimension")->capture_default_str();
    add_common(sample, common["sample"], 4);

    auto* volume = app.add_subcommand("volume", "phase-equivalence class volumes");
    std::vector<std::string> volume_weights{"0.3333333333333333,0.3333333333333333,0.3333333333333334", "0.8,0.1,0.1"};
    double eps = kDefaultEpsilon;
    volume->add_option("--weights", volume_weights, "squared radii, comma separated; repeat for more profiles")
        ->capture_default_str();
    volume->add_option("--eps", eps, "equivalence margin")->capture_default_str();
    add_common(volume, common["volume"], 1'000'000);

    auto* partition = app.add_subcommand("partition", "most likely L/R split of auxiliary states");
    std::size_t part_n = 100;
    double part_asq = 0.36;
    bool part_scan = false;
    partition->add_option("--n", part_n, "auxiliary states")->capture_default_str();
    partition->add_option("--asq", part_asq, "Born weight |a|^2")->capture_default_str();
    partition->add_flag("--scan", part_scan, "emit the log weight of every feasible m");
    add_common(partition, common["partition"], 0);

    auto* fluct = app.add_subcommand("fluctuation", "likelihood of deviations from equal amplitudes");
    std::size_t fl_n = 10;
    double fl_spread = 0.05;
    fluct->add_option("--n", fl_n, "dimension")->capture_default_str();
    fluct->add_option("--spread", fl_spread, "relative perturbation half-width")->capture_default_str();
    add_common(fluct, common["fluctuation"], 10);

    auto* sel = app.add_subcommand("selectivity", "winner-margin probability for n Gumbel draws");
    std::size_t sel_n = 2;
    double sel_margin = 1.0;
    GumbelParams sel_params;
    sel->add_option("--n", sel_n, "competing states")->capture_default_str();
    sel->add_option("--margin", sel_margin, "required gap a")->capture_default_str();
    sel->add_option("--sigma", sel_params.sigma, "Gumbel scale")->capture_default_str();
    sel->add_option("--mu", sel_params.mu, "Gumbel location")->capture_default_str();
    add_common(sel, common["selectivity"], 100'000);

    auto* grid = app.add_subcommand("grid", "cells traced by circles on a square grid");
    double grid_r = 0.5;
    double grid_r_hi = 0.0;
    std::size_t grid_samples = 100;
    double grid_d = 0.01;
    grid->add_option("--r", grid_r, "radius (lower end when --r-hi is given)")->capture_default_str();
    grid->add_option("--r-hi", grid_r_hi, "upper radius for a stratified sweep");
    grid->add_option("--samples", grid_samples, "radii in the sweep")->capture_default_str();
    grid->add_option("--d", grid_d, "cell side")->capture_default_str();
    add_common(grid, common["grid"], 0);

    auto* born = app.add_subcommand("born", "end-to-end simulated measurement");
    std::size_t born_n = 1000;
    std::vector<double> born_asq{0.3};
    double born_margin = 0.0;
    GumbelParams born_params;
    born->add_option("--n", born_n, "auxiliary states")->capture_default_str();
    born->add_option("--asq", born_asq, "Born weights |a|^2 (repeatable)")->capture_default_str();
    born->add_option("--margin", born_margin, "selectivity margin a")->capture_default_str();
    born->add_option("--sigma", born_params.sigma, "Gumbel scale")->capture_default_str();
    born->add_option("--mu", born_params.mu, "Gumbel location")->capture_default_str();
    add_common(born, common["born"], 100'000);

    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    bool verify_quick = false;
    verify->add_flag("--quick", verify_quick, "reduced trial counts");
    add_common(verify, common["verify"], 0);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        if (code == 0) return kOk;
        const bool bad_value = dynamic_cast<const CLI::ValidationError*>(&e) != nullptr ||
                               dynamic_cast<const CLI::ConversionError*>(&e) != nullptr;
        return bad_value ? kInvalidParameter : kUsage;
    }

    try {
        if (*sample) {
            const auto& c = common["sample"];
            return emit(cmd_sample(sample_n, c), c);
        }
        if (*volume) {
            const auto& c = common["volume"];
            return emit(cmd_volume(volume_weights, eps, c), c);
        }
        if (*partition) {
            const auto& c = common["partition"];
            return emit(cmd_partition(part_n, part_asq, part_scan, c), c);
        }
        if (*fluct) {
            const auto& c = common["fluctuation"];
            return emit(cmd_fluctuation(fl_n, fl_spread, c), c);
        }
        if (*sel) {
            const auto& c = common["selectivity"];
            return emit(cmd_selectivity(sel_n, sel_margin, sel_params, c), c);
        }
        if (*grid) {
            const auto& c = common["grid"];
            return emit(cmd_grid(grid_r, grid_r_hi, grid_samples, grid_d, c), c);
        }
        if (*born) {
            const auto& c = common["born"];
            return emit(cmd_born(born_n, born_asq, born_margin, born_params, c), c);
        }
        if (*verify) {
            const auto& c = common["verify"];
            VerifyOptions opts{verify_quick, c.seed, c.workers};
            const auto results = run_acceptance(opts);
            for (const auto& r : results) {
                std::cerr << (r.pass ? "PASS " : "FAIL ") << r.id << (r.supplementary ? " (supplementary)" : "")
                          << "  " << r.name << "  [" << r.seconds << " s]\n";
            }
            const int code = emit(acceptance_table(results, opts), c);
            if (code != kOk) return code;
            return all_passed(results) ? kOk : kVerifyFailed;
        }
    } catch (const InvalidArgument& e) {
        std::cerr << "bornrule: invalid parameter: " << e.what() << '\n';
        return kInvalidParameter;
    }
    return kUsage;
}
