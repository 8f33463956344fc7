#pragma once

// Per-DMU ranking across model kinds. The robust ranking is r = 1 + delta*,
// where delta* measures how far the unit's data can move (all varying groups
// simultaneously and independently, relative to nominal) before an efficient
// unit turns inefficient, or how far an inefficient unit is from efficiency.
// The actual robustness radius is delta*/2 of relative variation.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "robdea/data.hpp"
#include "robdea/fractional.hpp"
#include "robdea/lp.hpp"
#include "robdea/models.hpp"

namespace robdea {

// Units within this tolerance of the efficiency boundary count as efficient.
inline constexpr double kClassificationTol = 1e-7;

struct RankConfig {
    BisectionConfig bisection;
    SimplexOptions solver;
    bool include_self_classical = true;
};

struct RankingResult {
    std::string dmu_id;
    ModelKind model = ModelKind::CcrRobustLp;
    double delta_star = 0.0;
    double r = 1.0;  // always 1 + delta_star
    double classical_score = 0.0;
    bool efficient = false;
    PerturbationMask mask;
};

struct RankingError {
    std::string dmu_id;
    std::string message;
};

struct RankingBatch {
    std::vector<RankingResult> results;
    std::vector<RankingError> failures;

    bool ok() const { return failures.empty(); }
};

struct EfficiencyRange {
    std::string dmu_id;
    double r_lower = 0.0;
    double r_upper = 0.0;
    bool always_efficient = false;
    bool never_efficient = false;
};

// Rescaling applied to the robust LP optimum before it is reported. The
// all-varying LP is the canonical ranking and reports its optimum as is;
// partially fixed masks derive from the doubled form of the exact model and
// report twice the LP optimum.
inline double scale_factor(const PerturbationMask& mask) {
    return mask.all_vary() ? 1.0 : 2.0;
}

namespace detail {

inline double classical_score(const Dataset& dataset, std::size_t test_index, ModelKind model,
                              const RankConfig& config) {
    const LinearProgram lp = is_bcc(model)
        ? build_bcc_classical(dataset, test_index, config.include_self_classical)
        : build_ccr_classical(dataset, test_index, config.include_self_classical);
    const LpSolution sol = solve(lp, config.solver);
    if (sol.status == LpStatus::Unbounded) return kInfinity;  // only without the self row
    if (sol.status != LpStatus::Optimal)
        throw NumericFailure("classical model did not solve to optimality for DMU '" +
                             dataset[test_index].id + "'");
    return sol.objective_value;
}

inline void check_r_range(const RankingResult& res, const PerturbationMask& mask) {
    // The all-varying LP ranking is confined to [0, 2]; the exact models and
    // the doubled partial-mask values live in [-1, 3].
    const bool narrow = is_robust_lp(res.model) && mask.all_vary();
    const double lo = narrow ? 0.0 : -1.0;
    const double hi = narrow ? 2.0 : 3.0;
    if (res.r < lo - 1e-6 || res.r > hi + 1e-6)
        throw InternalInconsistency("ranking for DMU '" + res.dmu_id + "' outside its range");
}

}  // namespace detail

inline RankingResult rank_one(const Dataset& dataset, std::size_t test_index, ModelKind model,
                              const PerturbationMask& mask = PerturbationMask::all(),
                              const RankConfig& config = {}) {
    if (test_index >= dataset.size()) throw InvalidInput("test DMU index out of range");
    if (is_bcc(model) && !is_classical(model) && !mask.all_vary())
        throw InvalidInput("robust BCC models support only the all-varying mask");

    RankingResult res;
    res.dmu_id = dataset[test_index].id;
    res.model = model;
    res.mask = mask;
    res.classical_score = detail::classical_score(dataset, test_index, model, config);

    switch (model) {
        case ModelKind::CcrClassical:
        case ModelKind::BccClassical:
            res.r = res.classical_score;
            res.delta_star = res.r - 1.0;
            res.efficient = res.delta_star >= -kClassificationTol;
            return res;
        case ModelKind::CcrRobustLp:
        case ModelKind::BccRobustLp: {
            const LinearProgram lp = model == ModelKind::CcrRobustLp
                ? build_robust_lp(dataset, test_index, mask)
                : build_bcc_robust_lp(dataset, test_index);
            const LpSolution sol = solve(lp, config.solver);
            if (sol.status != LpStatus::Optimal)
                throw NumericFailure("robust LP did not solve to optimality for DMU '" +
                                     res.dmu_id + "'");
            res.delta_star = scale_factor(mask) * sol.objective_value;
            break;
        }
        case ModelKind::CcrRobustExact:
        case ModelKind::BccRobustExact:
            res.delta_star =
                solve_exact_delta(dataset, test_index, mask, model, config.bisection, config.solver);
            break;
    }
    res.r = 1.0 + res.delta_star;
    res.efficient = res.delta_star >= -kClassificationTol;
    detail::check_r_range(res, mask);
    return res;
}

// Ranks every DMU in dataset order. Per-DMU failures are collected instead
// of aborting the batch; if every unit fails the first error is rethrown.
inline RankingBatch rank_all(const Dataset& dataset, ModelKind model,
                             const PerturbationMask& mask = PerturbationMask::all(),
                             const RankConfig& config = {}) {
    RankingBatch batch;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        try {
            batch.results.push_back(rank_one(dataset, i, model, mask, config));
        } catch (const InvalidInput& e) {
            batch.failures.push_back({dataset[i].id, e.what()});
        } catch (const NumericFailure& e) {
            batch.failures.push_back({dataset[i].id, e.what()});
        } catch (const InternalInconsistency& e) {
            batch.failures.push_back({dataset[i].id, e.what()});
        }
    }
    if (batch.results.empty() && !batch.failures.empty())
        throw NumericFailure("ranking failed for every DMU; first error: " +
                             batch.failures.front().message);
    return batch;
}

namespace detail {

// Best case: the test unit at its most favorable data, peers at their least
// favorable. Worst case is the mirror image.
inline Dataset instantiate_interval(const IntervalDataset& data, std::size_t test_index,
                                    bool best_case) {
    std::vector<DmuRecord> rows;
    rows.reserve(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        const bool favored = (i == test_index) == best_case;
        // favored: low inputs, high outputs.
        const DmuRecord& in_src = favored ? data.lower[i] : data.upper[i];
        const DmuRecord& out_src = favored ? data.upper[i] : data.lower[i];
        rows.push_back(DmuRecord{data.lower[i].id, in_src.inputs, out_src.outputs});
    }
    return Dataset(std::move(rows));
}

}  // namespace detail

inline EfficiencyRange rank_interval(const IntervalDataset& data, std::size_t test_index,
                                     ModelKind model = ModelKind::CcrRobustLp,
                                     const PerturbationMask& mask = PerturbationMask::all(),
                                     const RankConfig& config = {}) {
    if (test_index >= data.size()) throw InvalidInput("test DMU index out of range");
    if (is_classical(model))
        throw InvalidInput("interval ranking requires a robust model");

    const Dataset best = detail::instantiate_interval(data, test_index, true);
    const Dataset worst = detail::instantiate_interval(data, test_index, false);

    EfficiencyRange range;
    range.dmu_id = data.lower[test_index].id;
    range.r_upper = rank_one(best, test_index, model, mask, config).r;
    range.r_lower = rank_one(worst, test_index, model, mask, config).r;
    if (range.r_lower > range.r_upper + 1e-9)
        throw InternalInconsistency("interval ranking: lower end exceeds upper end");
    range.always_efficient = range.r_lower >= 1.0 - kClassificationTol;
    range.never_efficient = range.r_upper < 1.0 - kClassificationTol;
    return range;
}

// Ids sorted by ranking, best first. Ties keep the input (dataset) order.
inline std::vector<std::string> sorted_order(const std::vector<RankingResult>& results) {
    if (results.empty()) return {};
    for (const RankingResult& res : results)
        if (res.model != results.front().model)
            throw InvalidInput("sorted_order: results mix model kinds");
    std::vector<std::size_t> order(results.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return results[a].r > results[b].r; });
    std::vector<std::string> ids;
    ids.reserve(order.size());
    for (std::size_t i : order) ids.push_back(results[i].dmu_id);
    return ids;
}

}  // namespace robdea
