// Acceptance suite: reproduces the reference benchmark values and checks the
// structural guarantees end to end. Prints one pass/fail line per criterion
// and exits with the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "lp_oracle.hpp"
#include "robdea/perturbation.hpp"
#include "robdea/properties.hpp"
#include "robdea/ranking.hpp"

using namespace robdea;

namespace {

struct Criterion {
    std::string label;
    std::function<bool(std::string&)> body;
};

bool close(double got, double want, double tol, std::string& note, const std::string& what) {
    if (std::fabs(got - want) <= tol) return true;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: got %.6f, expected %.6f (tol %g)", what.c_str(), got,
                  want, tol);
    note = buf;
    return false;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Hospital benchmark: classical, robust LP and exact robust columns for
//    all 12 units within 5e-4; total runtime below one second.
bool criterion_hospital_columns(std::string& note) {
    const auto start = std::chrono::steady_clock::now();
    const Dataset ds = fixtures::hospitals();
    const RankingBatch lp = rank_all(ds, ModelKind::CcrRobustLp);
    const RankingBatch exact = rank_all(ds, ModelKind::CcrRobustExact);
    if (!lp.ok() || !exact.ok()) { note = "batch failure"; return false; }
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (!close(lp.results[i].classical_score, fixtures::kHospitalClassical[i], 5e-4, note,
                   ds[i].id + " classical") ||
            !close(lp.results[i].r, fixtures::kHospitalRobustLp[i], 5e-4, note,
                   ds[i].id + " robust LP") ||
            !close(exact.results[i].r, fixtures::kHospitalRobustExact[i], 5e-4, note,
                   ds[i].id + " robust exact"))
            return false;
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 1.0) {
        note = "took " + std::to_string(elapsed) + " s (limit 1 s)";
        return false;
    }
    return true;
}

// 2. Three-unit outputs example: all-vary ranking (1.1429, 1, 1.1429) and
//    fixed-input ranking (1.2857, 1, 1.2857), the linear and exact models
//    agreeing on the fixed-input variant; all within 5e-4.
bool criterion_outputs_example(std::string& note) {
    const Dataset ds = fixtures::abc_outputs();
    const std::vector<double> all_vary = {1.1429, 1.0, 1.1429};
    const std::vector<double> fixed = {1.2857, 1.0, 1.2857};
    const PerturbationMask mask = PerturbationMask::fixed_inputs();
    for (std::size_t i = 0; i < 3; ++i) {
        const double r_lp = rank_one(ds, i, ModelKind::CcrRobustLp).r;
        const double r_fixed_lp = rank_one(ds, i, ModelKind::CcrRobustLp, mask).r;
        const double r_fixed_exact = rank_one(ds, i, ModelKind::CcrRobustExact, mask).r;
        if (!close(r_lp, all_vary[i], 5e-4, note, ds[i].id + " all-vary LP") ||
            !close(r_fixed_lp, fixed[i], 5e-4, note, ds[i].id + " fixed-input LP") ||
            !close(r_fixed_exact, fixed[i], 5e-4, note, ds[i].id + " fixed-input exact") ||
            !close(r_fixed_exact, r_fixed_lp, 5e-4, note, ds[i].id + " model agreement"))
            return false;
    }
    return true;
}

// 3. Interval benchmark: ten ranges within 5e-4 per endpoint and the
//    always/never-efficient classification (A, J always; B, C, D, F, H never).
bool criterion_interval_ranges(std::string& note) {
    const IntervalDataset data = fixtures::interval_outputs();
    for (std::size_t i = 0; i < data.size(); ++i) {
        const EfficiencyRange er = rank_interval(data, i);
        if (!close(er.r_lower, fixtures::kIntervalLower[i], 5e-4, note, er.dmu_id + " lower") ||
            !close(er.r_upper, fixtures::kIntervalUpper[i], 5e-4, note, er.dmu_id + " upper"))
            return false;
        if (er.always_efficient != fixtures::kIntervalAlways[i] ||
            er.never_efficient != fixtures::kIntervalNever[i]) {
            note = er.dmu_id + ": classification flags differ";
            return false;
        }
    }
    return true;
}

// 4. Single-factor benchmark: robust BCC column within 5e-3 (two reference
//    decimals), classical BCC column within 5e-4.
bool criterion_bcc_columns(std::string& note) {
    const Dataset ds = fixtures::single_factor();
    const RankingBatch robust = rank_all(ds, ModelKind::BccRobustLp);
    if (!robust.ok()) { note = "batch failure"; return false; }
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (!close(robust.results[i].classical_score, fixtures::kBccClassical[i], 5e-4, note,
                   ds[i].id + " classical BCC") ||
            !close(robust.results[i].r, fixtures::kBccRobustLp[i], 5e-3, note,
                   ds[i].id + " robust BCC"))
            return false;
    }
    return true;
}

// 5. Approximation gap between the robust LP and the exact robust values on
//    the hospital set: max relative gap <= 0.2%, mean <= 0.05%.
bool criterion_approximation_gap(std::string& note) {
    const Dataset ds = fixtures::hospitals();
    const RankingBatch lp = rank_all(ds, ModelKind::CcrRobustLp);
    const RankingBatch exact = rank_all(ds, ModelKind::CcrRobustExact);
    double max_rel = 0.0, sum_rel = 0.0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const double rel = std::fabs(lp.results[i].r - exact.results[i].r) / exact.results[i].r;
        max_rel = std::max(max_rel, rel);
        sum_rel += rel;
    }
    const double mean_rel = sum_rel / static_cast<double>(ds.size());
    char buf[120];
    std::snprintf(buf, sizeof buf, "max %.4f%%, mean %.4f%%", 100 * max_rel, 100 * mean_rel);
    note = buf;
    return max_rel <= 0.002 && mean_rel <= 0.0005;
}

// 6. Randomized property suites on 200 datasets (units in [1,100], up to 12
//    DMUs, dims up to 4): zero violations, under 60 seconds.
bool criterion_property_suites(std::string& note) {
    const auto start = std::chrono::steady_clock::now();
    PropertySuiteOptions options;
    options.num_datasets = 200;
    const std::vector<SuiteResult> results = run_property_suites(options);
    const double elapsed = seconds_since(start);
    std::size_t checks = 0;
    for (const SuiteResult& suite : results) {
        checks += suite.checks;
        if (suite.violations > 0) {
            note = suite.name + ": " + suite.first_violation;
            return false;
        }
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "%zu checks in %.1f s", checks, elapsed);
    note = buf;
    return elapsed < 60.0;
}

// 7. Monte-Carlo soundness: for every hospital unit, 1000 scenarios sampled
//    just below the exact robustness radius never flip the classification;
//    the empirical radius of hospital A lands in [0.080, 0.090] on a
//    0.005-step grid.
bool criterion_monte_carlo(std::string& note) {
    const Dataset ds = fixtures::hospitals();
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const double delta_star = solve_exact_delta(ds, i, {}, ModelKind::CcrRobustExact);
        const double level = std::fabs(delta_star) / 2.0 - 1e-3;
        if (level <= 0.0) continue;
        const RetentionReport report = retention_test(ds, i, level, 1000, 20240817 + i);
        if (!report.violations.empty()) {
            note = ds[i].id + ": " + std::to_string(report.violations.size()) +
                   " flips below the exact radius";
            return false;
        }
    }
    std::vector<double> levels;
    for (double lvl = 0.005; lvl < 0.0901; lvl += 0.005) levels.push_back(lvl);
    const double radius = empirical_radius(ds, ds.index_of("A"), 1000, levels, 7);
    char buf[120];
    std::snprintf(buf, sizeof buf, "empirical radius of A = %.3f", radius);
    note = buf;
    return radius >= 0.080 - 1e-12 && radius <= 0.090 + 1e-12;
}

// 8. Simplex against brute-force vertex enumeration on 500 random bounded
//    instances with at most 6 variables and 6 constraints, within 1e-7.
bool criterion_simplex_oracle(std::string& note) {
    detail::SplitMix64 rng(404);
    for (int round = 0; round < 500; ++round) {
        const LinearProgram lp = lp_oracle::random_lp(rng);
        const lp_oracle::BruteForceResult expected = lp_oracle::brute_force(lp);
        const LpSolution got = solve(lp);
        if (expected.feasible != (got.status == LpStatus::Optimal)) {
            note = "round " + std::to_string(round) + ": status disagrees";
            return false;
        }
        if (expected.feasible &&
            std::fabs(expected.objective - got.objective_value) >
                1e-7 * (1.0 + std::fabs(expected.objective))) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "round %d: got %.10f, oracle %.10f", round,
                          got.objective_value, expected.objective);
            note = buf;
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1. hospital benchmark columns (classical, robust LP, exact; +-5e-4; <1s)",
         criterion_hospital_columns},
        {"2. three-unit outputs example (all-vary and fixed-input rankings; +-5e-4)",
         criterion_outputs_example},
        {"3. interval benchmark ranges and classification (+-5e-4)", criterion_interval_ranges},
        {"4. single-factor benchmark (robust BCC +-5e-3, classical +-5e-4)",
         criterion_bcc_columns},
        {"5. LP/exact approximation gap (max <= 0.2%, mean <= 0.05%)",
         criterion_approximation_gap},
        {"6. property suites on 200 random datasets (zero violations, <60s)",
         criterion_property_suites},
        {"7. Monte-Carlo soundness below the exact radius; empirical radius of A",
         criterion_monte_carlo},
        {"8. simplex vs vertex-enumeration oracle (500 instances, 1e-7)",
         criterion_simplex_oracle},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        std::string note;
        bool ok = false;
        try {
            ok = criterion.body(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", criterion.label.c_str(),
                    note.empty() ? "" : " -- ", note.c_str());
        std::fflush(stdout);
    }
    return failures;
}
