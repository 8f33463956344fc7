#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fixtures.hpp"
#include "robdea/fractional.hpp"
#include "robdea/perturbation.hpp"

using namespace robdea;

TEST_CASE("zero delta reproduces the dataset") {
    const Dataset ds = fixtures::hospitals();
    const PerturbationSample sample = sample_neighborhood(ds, 0.0, {}, 42);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        CHECK(sample.scenario[i].inputs == ds[i].inputs);
        CHECK(sample.scenario[i].outputs == ds[i].outputs);
    }
}

TEST_CASE("samples stay inside the relative neighborhood") {
    const Dataset ds = fixtures::hospitals();
    const double delta = 0.05;
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        const PerturbationSample sample = sample_neighborhood(ds, delta, {}, seed);
        for (std::size_t i = 0; i < ds.size(); ++i) {
            for (std::size_t j = 0; j < ds.input_dim(); ++j) {
                const double ratio = sample.scenario[i].inputs[j] / ds[i].inputs[j];
                CHECK(ratio >= 1.0 - delta - 1e-12);
                CHECK(ratio <= 1.0 + delta + 1e-12);
            }
            for (std::size_t k = 0; k < ds.output_dim(); ++k) {
                const double ratio = sample.scenario[i].outputs[k] / ds[i].outputs[k];
                CHECK(ratio >= 1.0 - delta - 1e-12);
                CHECK(ratio <= 1.0 + delta + 1e-12);
            }
        }
    }
}

TEST_CASE("sampling is deterministic per seed") {
    const Dataset ds = fixtures::hospitals();
    const PerturbationSample a = sample_neighborhood(ds, 0.07, {}, 1234);
    const PerturbationSample b = sample_neighborhood(ds, 0.07, {}, 1234);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        CHECK(a.scenario[i].inputs == b.scenario[i].inputs);
        CHECK(a.scenario[i].outputs == b.scenario[i].outputs);
    }
    const PerturbationSample c = sample_neighborhood(ds, 0.07, {}, 1235);
    CHECK(a.scenario[0].inputs != c.scenario[0].inputs);
}

TEST_CASE("fixed groups stay untouched") {
    const Dataset ds = fixtures::abc_outputs();
    const PerturbationMask mask = PerturbationMask::fixed_inputs();
    const PerturbationSample sample = sample_neighborhood(ds, 0.2, mask, 7, 0);
    for (std::size_t i = 0; i < ds.size(); ++i)
        CHECK(sample.scenario[i].inputs == ds[i].inputs);
    CHECK(sample.scenario[1].outputs != ds[1].outputs);
}

TEST_CASE("mask that splits test from peers requires a test index") {
    const Dataset ds = fixtures::abc_outputs();
    const PerturbationMask lopsided{true, true, false, false};
    CHECK_THROWS_AS(sample_neighborhood(ds, 0.1, lopsided, 3), InvalidInput);
    CHECK_NOTHROW(sample_neighborhood(ds, 0.1, lopsided, 3, 1));
}

TEST_CASE("delta outside [0, 1) is rejected") {
    const Dataset ds = fixtures::abc_outputs();
    CHECK_THROWS_AS(sample_neighborhood(ds, 1.0, {}, 5), InvalidInput);
    CHECK_THROWS_AS(sample_neighborhood(ds, -0.1, {}, 5), InvalidInput);
}

TEST_CASE("retention below the exact radius is total") {
    const Dataset ds = fixtures::hospitals();
    const std::size_t a = ds.index_of("A");
    // The exact ranking of A is about 1.1708: radius about 0.0854.
    const RetentionReport report = retention_test(ds, a, 0.08, 400, 7);
    CHECK(report.trials == 400);
    CHECK(report.retained == 400);
    CHECK(report.violations.empty());
}

TEST_CASE("inefficient units stay inefficient below their radius") {
    const Dataset ds = fixtures::hospitals();
    const std::size_t e = ds.index_of("E");
    const RetentionReport report = retention_test(ds, e, 0.055, 400, 7);
    CHECK(report.retained == 400);
}

TEST_CASE("borderline unit flips under small perturbations") {
    const Dataset ds = fixtures::abc_outputs();
    const RetentionReport report = retention_test(ds, 1, 0.01, 400, 21);
    CHECK(report.retained < report.trials);
    CHECK_FALSE(report.violations.empty());
    CHECK(report.retained + report.violations.size() == report.trials);

    // Violating seeds reproduce scenarios that flip the classification.
    const std::uint64_t bad_seed = report.violations.front();
    const PerturbationSample sample = sample_neighborhood(ds, 0.01, {}, bad_seed, 1);
    CHECK(is_efficient(ds, 1));
    CHECK_FALSE(is_efficient(sample.scenario, 1));
}

TEST_CASE("retention reports are reproducible") {
    const Dataset ds = fixtures::abc_outputs();
    const RetentionReport a = retention_test(ds, 1, 0.02, 200, 99);
    const RetentionReport b = retention_test(ds, 1, 0.02, 200, 99);
    CHECK(a.retained == b.retained);
    CHECK(a.violations == b.violations);
}

TEST_CASE("empirical radius of the borderline unit is zero") {
    const Dataset ds = fixtures::abc_outputs();
    const double radius = empirical_radius(ds, 1, 300, {0.005, 0.01, 0.02}, 5);
    CHECK(radius == 0.0);
}

TEST_CASE("empirical radius never exceeds the exact radius by more than a step") {
    const Dataset ds = fixtures::hospitals();
    const std::size_t a = ds.index_of("A");
    std::vector<double> levels;
    for (double lvl = 0.005; lvl < 0.0901; lvl += 0.005) levels.push_back(lvl);
    const double radius = empirical_radius(ds, a, 300, levels, 13);
    const double exact_radius = solve_exact_delta(ds, a, {}, ModelKind::CcrRobustExact) / 2.0;
    CHECK(radius <= exact_radius + 0.005 + 1e-12);
    CHECK(radius >= exact_radius - 0.005 - 1e-12);
}

TEST_CASE("unit close to the boundary has a tiny empirical radius") {
    const Dataset ds = fixtures::hospitals();
    const std::size_t d = ds.index_of("D");
    // D's exact ranking is 1.0079: only about 0.4% variation is admissible.
    const double radius = empirical_radius(ds, d, 500, {0.005, 0.01}, 3);
    CHECK(radius <= 0.01);
}

TEST_CASE("empirical radius validates its grid") {
    const Dataset ds = fixtures::abc_outputs();
    CHECK_THROWS_AS(empirical_radius(ds, 0, 10, {}, 1), InvalidInput);
    CHECK_THROWS_AS(empirical_radius(ds, 0, 10, {0.02, 0.01}, 1), InvalidInput);
    CHECK_THROWS_AS(empirical_radius(ds, 0, 10, {0.5, 1.0}, 1), InvalidInput);
}
