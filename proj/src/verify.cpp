#include "bornrule/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <numbers>
#include <sstream>
#include <vector>

#include "bornrule/equivalence_volume.hpp"
#include "bornrule/grid_counting.hpp"
#include "bornrule/max_likelihood.hpp"
#include "bornrule/measurement.hpp"
#include "bornrule/oracles.hpp"
#include "bornrule/partition.hpp"
#include "bornrule/selectivity.hpp"
#include "bornrule/state_sampling.hpp"

#ifndef BORNRULE_VERSION
#define BORNRULE_VERSION "unknown"
#endif

namespace bornrule {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t criterion_seed(const VerifyOptions& o, std::uint64_t id) { return mix64(o.seed ^ (id * 0x1000193ULL)); }

std::string fmt(double x) { return format_double(x); }

CriterionResult criterion(std::string id, std::string name) {
    CriterionResult r;
    r.id = std::move(id);
    r.name = std::move(name);
    return r;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

// 1. Class-volume ratio law.
CriterionResult volume_ratio(const VerifyOptions& o) {
    auto r = criterion("1", "volume ratio P1/P2 (n=3, eps=0.05) matches product-of-radii ratio within 3 sigma");
    const std::uint64_t trials = o.quick ? 200'000 : 1'000'000;
    const double third = 1.0 / 3.0;
    const std::vector<EquivalenceClassSpec> specs{
        {RadialProfile::from_squares(std::vector<double>{third, third, third}), 0.05},
        {RadialProfile::from_squares(std::vector<double>{0.8, 0.1, 0.1}), 0.05},
    };
    const auto est = volume_monte_carlo(specs, trials, criterion_seed(o, 1), o.workers);
    const auto mc = ratio(est[0], est[1]);
    r.reference = relative_weight(specs[0].profile) / relative_weight(specs[1].profile);
    r.measured = mc.value;
    r.tolerance = 3.0 * mc.std_error;
    r.pass = !est[0].never_hit() && !est[1].never_hit() && std::abs(mc.value - r.reference) <= r.tolerance;
    r.detail = "hits=" + std::to_string(est[0].hits) + "/" + std::to_string(est[1].hits) +
               " trials=" + std::to_string(trials);
    return r;
}

// 2. Equal amplitudes beat random unit profiles.
CriterionResult ml_maximizer(const VerifyOptions& o) {
    auto r = criterion("2", "equal-amplitude profile beats random unit profiles in prod r_k (n=2,5,20)");
    const std::uint64_t samples = o.quick ? 10'000 : 100'000;
    std::uint64_t violations = 0;
    std::vector<double> radii;
    for (std::size_t n : {2U, 5U, 20U}) {
        const double best = static_cast<double>(n) * std::log(ml_profile(n)[0]);
        Stream rng(criterion_seed(o, 2) + n);
        for (std::uint64_t i = 0; i < samples; ++i) {
            sample_radii(n, rng, radii);
            double lw = 0.0;
            for (double x : radii) lw += std::log(x);
            if (lw >= best) ++violations;
        }
    }
    r.measured = static_cast<double>(violations);
    r.pass = violations == 0;
    r.detail = "profiles_per_n=" + std::to_string(samples);
    return r;
}

// Near-equal random profiles with max |delta_k| <= 0.05.
template <class Check>
std::uint64_t count_second_order_violations(const VerifyOptions& o, std::uint64_t samples, Check check) {
    std::uint64_t violations = 0;
    for (std::size_t n : {10U, 100U}) {
        Stream rng(criterion_seed(o, 3) + n);
        std::uint64_t accepted = 0;
        std::vector<double> radii(n);
        while (accepted < samples) {
            // Spreads below 0.005 would push the cubic bound under the rounding floor.
            const double spread = 0.005 + 0.045 * uniform_open(rng);
            for (auto& x : radii) x = 1.0 + spread * (2.0 * uniform_open(rng) - 1.0);
            const auto profile = RadialProfile::normalized(radii);
            const auto dev = deviations(profile);
            if (dev.max_abs() > 0.05) continue;
            ++accepted;
            if (!check(profile, dev)) ++violations;
        }
    }
    return violations;
}

// 3. The -(3/2) n delta^2 second-order law as stated.
CriterionResult second_order_three_halves(const VerifyOptions& o) {
    auto r = criterion("3", "|log prod(sqrt(n) r_k) + (3/2) n delta^2| <= 0.5 n max|delta|^3 (n=10,100)");
    const std::uint64_t samples = o.quick ? 1'000 : 10'000;
    double worst = 0.0;
    const auto violations = count_second_order_violations(o, samples, [&](const RadialProfile& p, const DeviationProfile& d) {
        const double n = static_cast<double>(p.dim());
        const double lhs = std::abs(log_likelihood_ratio(p) + 1.5 * n * d.rms * d.rms);
        const double bound = 0.5 * n * std::pow(d.max_abs(), 3);
        if (bound > 0.0) worst = std::max(worst, lhs / bound);
        return lhs <= bound;
    });
    r.measured = static_cast<double>(violations);
    r.pass = violations == 0;
    r.detail = "profiles_per_n=" + std::to_string(samples) + " worst_ratio_to_bound=" + fmt(worst);
    return r;
}

// 3c. The same bound for the exact second-order coefficient -n delta^2.
CriterionResult second_order_exact(const VerifyOptions& o) {
    auto r = criterion("3c", "supplementary: |log prod(sqrt(n) r_k) + n delta^2| <= 0.5 n max|delta|^3 (n=10,100)");
    r.supplementary = true;
    const std::uint64_t samples = o.quick ? 1'000 : 10'000;
    double worst = 0.0;
    const auto violations = count_second_order_violations(o, samples, [&](const RadialProfile& p, const DeviationProfile& d) {
        const double lhs = std::abs(log_likelihood_ratio(p) - log_likelihood_second_order(d));
        const double bound = 0.5 * static_cast<double>(p.dim()) * std::pow(d.max_abs(), 3);
        if (bound > 0.0) worst = std::max(worst, lhs / bound);
        return lhs <= bound;
    });
    r.measured = static_cast<double>(violations);
    r.pass = violations == 0;
    r.detail = "profiles_per_n=" + std::to_string(samples) + " worst_ratio_to_bound=" + fmt(worst);
    return r;
}

// 4. Born partition at n = 1000.
CriterionResult born_partition(const VerifyOptions&) {
    auto r = criterion("4", "optimal_partition(1000, |a|^2) = round(1000 |a|^2) = exhaustive scan, |a|^2 = 0.1..0.9");
    std::uint64_t mismatches = 0;
    std::ostringstream detail;
    for (int k = 1; k <= 9; ++k) {
        const double asq = 0.1 * k;
        const double al = std::sqrt(asq);
        const double ar = std::sqrt(1.0 - asq);
        const auto m = optimal_partition(1000, al, ar);
        const auto scan = oracle::scan_optimal_partition(1000, al, ar);
        const auto expect = static_cast<std::size_t>(std::llround(1000.0 * asq));
        if (m != scan || m != expect) ++mismatches;
        detail << (k > 1 ? " " : "") << m;
    }
    r.measured = static_cast<double>(mismatches);
    r.pass = mismatches == 0;
    r.detail = "m*=" + detail.str();
    return r;
}

// 5. Selectivity Monte Carlo against the closed form.
CriterionResult selectivity_grid(const VerifyOptions& o, std::vector<Estimate>* keep = nullptr) {
    auto r = criterion("5", "selectivity MC vs closed form within 3 sigma, n in {2,5,100} x a/sigma in {0.1,1,3}");
    const std::uint64_t trials = o.quick ? 100'000 : 1'000'000;
    double worst = 0.0;
    std::uint64_t failures = 0;
    std::uint64_t point = 0;
    for (std::size_t n : {2U, 5U, 100U}) {
        for (double x : {0.1, 1.0, 3.0}) {
            SelectivityQuery q{n, x, GumbelParams{0.0, 1.0}};
            const auto est = selectivity_monte_carlo(q, trials, criterion_seed(o, 5) + point++, o.workers);
            const double z = std::abs(est.value - selectivity_closed_form(q)) / est.std_error;
            worst = std::max(worst, z);
            if (!(z <= 3.0)) ++failures;
            if (keep) keep->push_back(est);
        }
    }
    r.measured = worst;
    r.reference = 0.0;
    r.tolerance = 3.0;
    r.pass = failures == 0;
    r.detail = "max_z=" + fmt(worst) + " trials_per_point=" + std::to_string(trials);
    return r;
}

// 6. n = 2 tanh identity.
CriterionResult tanh_identity(const VerifyOptions&) {
    auto r = criterion("6", "p(2,a) - (1 - tanh(a/2 sigma)) = 0 to 1e-12 on 100 points a/sigma in [0,10]");
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double x = 10.0 * i / 99.0;
        const double p = selectivity_closed_form({2, x, GumbelParams{0.0, 1.0}});
        worst = std::max(worst, std::abs(p - (1.0 - std::tanh(0.5 * x))));
    }
    r.measured = worst;
    r.tolerance = 1e-12;
    r.pass = worst <= 1e-12;
    return r;
}

// 7. Factor-two bound on the fault probability.
CriterionResult factor_two(const VerifyOptions&) {
    auto r = criterion("7", "1 - p(n,a) <= 2 (1 - p(2,a)) for n = 2..1e6 (log-spaced) and n -> inf, a/sigma in (0,10]");
    std::uint64_t violations = 0;
    std::uint64_t checked = 0;
    double worst = 0.0;
    std::vector<std::size_t> ns;
    for (int i = 0; i <= 120; ++i) {
        const auto n = static_cast<std::size_t>(std::llround(2.0 * std::pow(5e5, i / 120.0)));
        if (ns.empty() || ns.back() != n) ns.push_back(n);
    }
    for (int j = 1; j <= 200; ++j) {
        const double x = 10.0 * j / 200.0;
        const double fault2 = 1.0 - selectivity_closed_form({2, x, GumbelParams{0.0, 1.0}});
        for (std::size_t n : ns) {
            const double fault = 1.0 - selectivity_closed_form({n, x, GumbelParams{0.0, 1.0}});
            worst = std::max(worst, fault / fault2);
            if (!(fault <= 2.0 * fault2)) ++violations;
            ++checked;
        }
        const double limit_fault = 1.0 - selectivity_limit(x);
        worst = std::max(worst, limit_fault / fault2);
        if (!(limit_fault <= 2.0 * fault2)) ++violations;
        ++checked;
    }
    r.measured = static_cast<double>(violations);
    r.pass = violations == 0;
    r.detail = "points=" + std::to_string(checked) + " max_fault_ratio=" + fmt(worst);
    return r;
}

// 8. Circle-cell counting.
CriterionResult circle_cells(const VerifyOptions& o) {
    auto r = criterion("8", "mean traced cells over r in [0.3,0.7], d=0.01 within 2% of 2 pi r/d; exact match to brute-force scan on 50 (r,d)");
    const GridSpec grid{0.01};
    const double mean = mean_circle_cells(0.3, 0.7, 1000, grid);
    const double normalized = mean / (2.0 * std::numbers::pi * 0.5 / grid.d);
    Stream rng(criterion_seed(o, 8));
    std::uint64_t mismatches = 0;
    for (int i = 0; i < 50; ++i) {
        const double d = 0.005 + 0.095 * uniform_open(rng);
        const double rad = d * (1.0 + 1e-9) + (1.0 - d) * uniform_open(rng);
        if (count_circle_cells(rad, GridSpec{d}) != oracle::scan_circle_cells(rad, d)) ++mismatches;
    }
    r.measured = normalized;
    r.reference = 1.0;
    r.tolerance = 0.02;
    r.pass = std::abs(normalized - 1.0) <= 0.02 && mismatches == 0;
    r.detail = "scan_mismatches=" + std::to_string(mismatches);
    return r;
}

// 9. End-to-end Born frequencies.
CriterionResult born_frequencies(const VerifyOptions& o, BornReport* keep = nullptr) {
    auto r = criterion("9", "run_measurement(|a|^2=0.3, n=1000) p_L within 3 sigma of 0.3; n=2 control m*/n in {0,1/2,1}");
    auto config = MeasurementConfig::from_born_weight(0.3, 1000);
    config.trials = o.quick ? 20'000 : 100'000;
    config.seed = criterion_seed(o, 9);
    const auto rep = run_measurement(config, o.workers);
    if (keep) *keep = rep;

    std::vector<double> grid;
    for (int k = 1; k <= 9; ++k) grid.push_back(0.1 * k);
    const auto control = born_deviation_curve(grid, 2, 1000, config.seed, {}, 0.0, o.workers);
    bool control_ok = true;
    for (const auto& row : control) {
        const double q = row.partition_ratio;
        control_ok = control_ok && (q == 0.0 || q == 0.5 || q == 1.0);
    }
    r.measured = rep.p_l_empirical;
    r.reference = 0.3;
    r.tolerance = 3.0 * rep.std_error;
    r.pass = std::abs(rep.p_l_empirical - 0.3) <= r.tolerance && control_ok;
    r.detail = "m*=" + std::to_string(rep.m_star) + " stderr=" + fmt(rep.std_error) +
               " trials=" + std::to_string(rep.trials) + " control_ok=" + (control_ok ? "true" : "false");
    return r;
}

// 10. Reproducibility across repeated runs and worker counts.
CriterionResult reproducibility(const VerifyOptions& o) {
    auto r = criterion("10", "identical seed gives bit-identical results across runs and worker counts");
    std::uint64_t mismatches = 0;
    VerifyOptions quick = o;
    quick.quick = true;

    const auto compare_runs = [&](unsigned w1, unsigned w2) {
        VerifyOptions a = quick, b = quick;
        a.workers = w1;
        b.workers = w2;
        std::vector<Estimate> ea, eb;
        selectivity_grid(a, &ea);
        selectivity_grid(b, &eb);
        for (std::size_t i = 0; i < ea.size(); ++i) {
            if (!same_bits(ea[i].value, eb[i].value) || ea[i].hits != eb[i].hits) ++mismatches;
        }
        BornReport ra, rb;
        born_frequencies(a, &ra);
        born_frequencies(b, &rb);
        if (!same_bits(ra.p_l_empirical, rb.p_l_empirical) || !same_bits(ra.mean_gap, rb.mean_gap) ||
            ra.l_count != rb.l_count || ra.selective_fraction != rb.selective_fraction) {
            ++mismatches;
        }
        const auto va = volume_ratio(a);
        const auto vb = volume_ratio(b);
        if (!same_bits(va.measured, vb.measured) || va.detail != vb.detail) ++mismatches;
    };
    compare_runs(1, 1);
    compare_runs(1, 4);
    r.measured = static_cast<double>(mismatches);
    r.pass = mismatches == 0;
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options) {
    const std::vector<std::function<CriterionResult(const VerifyOptions&)>> checks{
        volume_ratio,
        ml_maximizer,
        second_order_three_halves,
        second_order_exact,
        born_partition,
        [](const VerifyOptions& o) { return selectivity_grid(o); },
        tanh_identity,
        factor_two,
        circle_cells,
        [](const VerifyOptions& o) { return born_frequencies(o); },
        reproducibility,
    };
    std::vector<CriterionResult> out;
    for (const auto& check : checks) {
        const auto start = Clock::now();
        auto res = check(options);
        res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        // Runtime budgets.
        if (res.id == "1" && res.seconds >= 30.0) res.pass = false;
        if (res.id == "5" && res.seconds >= 120.0) res.pass = false;
        out.push_back(std::move(res));
    }
    return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results) {
        if (!r.supplementary && !r.pass) return false;
    }
    return true;
}

Table acceptance_table(const std::vector<CriterionResult>& results, const VerifyOptions& options) {
    Table t({"criterion", "pass", "measured", "reference", "tolerance", "supplementary", "name", "detail"});
    for (const auto& r : results) {
        t.add_row({r.id, r.pass, r.measured, r.reference, r.tolerance, r.supplementary, r.name, r.detail});
    }
    t.set_meta("tool", std::string("bornrule ") + BORNRULE_VERSION);
    t.set_meta("subcommand", std::string("verify"));
    t.set_meta("seed", options.seed);
    t.set_meta("quick", options.quick);
    return t;
}

}  // namespace bornrule
