#pragma once

// Monte-Carlo validation of the robustness semantics: sample datasets inside
// the relative delta-neighborhood of the nominal data and check that the
// efficiency classification behaves as the exact robust model predicts. A
// unit with exact ranking r = 1 + delta* keeps its classification for any
// simultaneous independent variation of the varying data groups strictly
// below |delta*|/2 relative.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "robdea/data.hpp"
#include "robdea/lp.hpp"
#include "robdea/models.hpp"

namespace robdea {

namespace detail {

// splitmix64: tiny, seedable, identical on every platform.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform multiplicative factor in [1 - delta, 1 + delta].
    double factor(double delta) { return 1.0 - delta + 2.0 * delta * uniform(); }
};

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t counter) {
    SplitMix64 rng(base ^ (0xA0761D6478BD642Full + counter * 0xE7037ED1A0B428DBull));
    return rng.next();
}

}  // namespace detail

struct PerturbationSample {
    Dataset scenario;
    double delta = 0.0;
    std::uint64_t seed = 0;
};

struct RetentionReport {
    std::string dmu_id;
    double delta = 0.0;
    std::size_t trials = 0;
    std::size_t retained = 0;
    std::vector<std::uint64_t> violations;  // per-trial seeds that flipped
};

inline constexpr std::size_t kNoTestIndex = static_cast<std::size_t>(-1);

// One scenario drawn uniformly from the relative delta-neighborhood: every
// entry of a varying group is multiplied by an independent factor in
// [1-delta, 1+delta]; fixed groups are copied verbatim. Deterministic per
// seed. test_index is only needed when the mask separates the test unit
// from its peers; without it the mask must treat both alike.
inline PerturbationSample sample_neighborhood(const Dataset& dataset, double delta,
                                              const PerturbationMask& mask, std::uint64_t seed,
                                              std::size_t test_index = kNoTestIndex) {
    if (!(delta >= 0.0 && delta < 1.0))
        throw InvalidInput("perturbation: delta must lie in [0, 1)");
    if (test_index == kNoTestIndex) {
        if (mask.vary_test_inputs != mask.vary_peer_inputs ||
            mask.vary_test_outputs != mask.vary_peer_outputs)
            throw InvalidInput("perturbation: mask distinguishes the test unit but no "
                               "test index was given");
    } else if (test_index >= dataset.size()) {
        throw InvalidInput("test DMU index out of range");
    }

    detail::SplitMix64 rng(seed);
    std::vector<DmuRecord> rows;
    rows.reserve(dataset.size());
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const bool is_test = i == test_index;
        const bool vary_in = is_test ? mask.vary_test_inputs : mask.vary_peer_inputs;
        const bool vary_out = is_test ? mask.vary_test_outputs : mask.vary_peer_outputs;
        DmuRecord rec = dataset[i];
        if (vary_in)
            for (double& x : rec.inputs) x *= rng.factor(delta);
        if (vary_out)
            for (double& y : rec.outputs) y *= rng.factor(delta);
        rows.push_back(std::move(rec));
    }
    return PerturbationSample{Dataset(std::move(rows)), delta, seed};
}

// Draws `trials` scenarios at level delta and counts how many keep the test
// unit's nominal classification. Violating trial seeds are reported so the
// offending scenario can be reproduced exactly.
inline RetentionReport retention_test(const Dataset& dataset, std::size_t test_index,
                                      double delta, std::size_t trials, std::uint64_t seed,
                                      const PerturbationMask& mask = PerturbationMask::all(),
                                      const SimplexOptions& opts = {}) {
    if (test_index >= dataset.size()) throw InvalidInput("test DMU index out of range");
    if (trials == 0) throw InvalidInput("retention test: at least one trial required");

    RetentionReport report;
    report.dmu_id = dataset[test_index].id;
    report.delta = delta;
    report.trials = trials;

    const bool nominal = is_efficient(dataset, test_index, opts);
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = detail::derive_seed(seed, t);
        const PerturbationSample sample =
            sample_neighborhood(dataset, delta, mask, trial_seed, test_index);
        bool flipped;
        try {
            flipped = is_efficient(sample.scenario, test_index, opts) != nominal;
        } catch (const NumericFailure& e) {
            throw NumericFailure(std::string(e.what()) + " (trial seed " +
                                 std::to_string(trial_seed) + ")");
        }
        if (flipped)
            report.violations.push_back(trial_seed);
        else
            ++report.retained;
    }
    return report;
}

// Largest grid level at which every trial keeps the nominal classification,
// scanning the ascending grid and stopping at the first violating level.
// Returns 0 when already the first level shows a violation.
inline double empirical_radius(const Dataset& dataset, std::size_t test_index,
                               std::size_t trials_per_level, const std::vector<double>& levels,
                               std::uint64_t seed,
                               const PerturbationMask& mask = PerturbationMask::all(),
                               const SimplexOptions& opts = {}) {
    if (levels.empty()) throw InvalidInput("empirical radius: empty level grid");
    for (std::size_t g = 0; g < levels.size(); ++g) {
        if (!(levels[g] >= 0.0 && levels[g] < 1.0))
            throw InvalidInput("empirical radius: levels must lie in [0, 1)");
        if (g > 0 && levels[g] <= levels[g - 1])
            throw InvalidInput("empirical radius: levels must be strictly ascending");
    }

    double best = 0.0;
    for (std::size_t g = 0; g < levels.size(); ++g) {
        const RetentionReport report =
            retention_test(dataset, test_index, levels[g], trials_per_level,
                           detail::derive_seed(seed, 0x5eed0000ull + g), mask, opts);
        if (!report.violations.empty()) break;
        best = levels[g];
    }
    return best;
}

}  // namespace robdea
