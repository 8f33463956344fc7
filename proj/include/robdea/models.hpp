#pragma once

// Builders translating a dataset plus a model choice into linear programs or
// fixed-delta feasibility systems. All model-formulation knowledge lives here.
//
// Variable layouts (all weights nonnegative unless noted):
//   classical CCR:     [u(output_dim), v(input_dim)]
//   robust CCR LP:     [u, v, delta]                  delta free
//   classical BCC:     [u, v, v0]                     v0 free
//   robust BCC LP:     [u, v, v0, delta]              v0, delta free
//
// Robust models always exclude the test DMU from the peer block: a unit does
// not compete against itself when its stability is measured, and keeping the
// self row would pin every efficient unit's margin at zero. Classical scores
// default to include_self = true, which yields the conventional score of
// exactly 1 for efficient units.

#include <cstddef>
#include <vector>

#include "robdea/data.hpp"
#include "robdea/lp.hpp"

namespace robdea {

namespace detail {

inline void check_index(const Dataset& dataset, std::size_t test_index) {
    if (test_index >= dataset.size())
        throw InvalidInput("test DMU index out of range");
}

inline std::vector<std::size_t> peer_indices(const Dataset& dataset, std::size_t test_index,
                                             bool include_self) {
    std::vector<std::size_t> peers;
    peers.reserve(dataset.size());
    for (std::size_t i = 0; i < dataset.size(); ++i)
        if (include_self || i != test_index) peers.push_back(i);
    return peers;
}

}  // namespace detail

// max y0.u  s.t.  x0.v <= 1,  Yu - Xv <= 0,  u, v >= 0
inline LinearProgram build_ccr_classical(const Dataset& dataset, std::size_t test_index,
                                         bool include_self = true) {
    detail::check_index(dataset, test_index);
    const std::size_t n_out = dataset.output_dim();
    const std::size_t n_in = dataset.input_dim();
    const DmuRecord& test = dataset[test_index];

    LinearProgram lp(n_out + n_in);
    for (std::size_t k = 0; k < n_out; ++k) lp.objective[k] = test.outputs[k];

    std::vector<double> row(n_out + n_in, 0.0);
    for (std::size_t j = 0; j < n_in; ++j) row[n_out + j] = test.inputs[j];
    lp.add_constraint(row, Relation::LessEqual, 1.0);

    for (std::size_t i : detail::peer_indices(dataset, test_index, include_self)) {
        const DmuRecord& peer = dataset[i];
        std::vector<double> peer_row(n_out + n_in, 0.0);
        for (std::size_t k = 0; k < n_out; ++k) peer_row[k] = peer.outputs[k];
        for (std::size_t j = 0; j < n_in; ++j) peer_row[n_out + j] = -peer.inputs[j];
        lp.add_constraint(std::move(peer_row), Relation::LessEqual, 0.0);
    }
    return lp;
}

namespace detail {

// Linearized delta weight on the output-side and input-side rows of the
// robust ranking LP. Each varying data group contributes one linearization
// step: the test-output and peer-input factors land on the output row, the
// test-input and peer-output factors on the input row. With everything
// varying the canonical ranking LP uses weight 1 on both rows and reports
// its optimum unscaled; any partially fixed mask keeps the derived weights
// and reports double the optimum (see scale_factor in ranking.hpp).
struct RowWeights {
    double output_row;
    double input_row;
};

inline RowWeights robust_lp_weights(const PerturbationMask& mask) {
    if (!mask.any())
        throw InvalidInput("robust model: perturbation mask fixes every data group");
    if (mask.all_vary()) return {1.0, 1.0};
    return {static_cast<double>(mask.vary_test_outputs) + mask.vary_peer_inputs,
            static_cast<double>(mask.vary_test_inputs) + mask.vary_peer_outputs};
}

}  // namespace detail

// max delta  s.t.  y0.u >= 1 + p*delta,  x0.v <= 1 - q*delta,  Yu - Xv <= 0
// with (p, q) = (1, 1) when all data vary, else the mask-derived weights.
inline LinearProgram build_robust_lp(const Dataset& dataset, std::size_t test_index,
                                     const PerturbationMask& mask = PerturbationMask::all()) {
    detail::check_index(dataset, test_index);
    const auto weights = detail::robust_lp_weights(mask);
    const std::size_t n_out = dataset.output_dim();
    const std::size_t n_in = dataset.input_dim();
    const std::size_t delta = n_out + n_in;  // column index
    const DmuRecord& test = dataset[test_index];

    LinearProgram lp(delta + 1);
    lp.objective[delta] = 1.0;
    lp.set_free(delta);

    std::vector<double> out_row(delta + 1, 0.0);
    for (std::size_t k = 0; k < n_out; ++k) out_row[k] = test.outputs[k];
    out_row[delta] = -weights.output_row;
    lp.add_constraint(std::move(out_row), Relation::GreaterEqual, 1.0);

    std::vector<double> in_row(delta + 1, 0.0);
    for (std::size_t j = 0; j < n_in; ++j) in_row[n_out + j] = test.inputs[j];
    in_row[delta] = weights.input_row;
    lp.add_constraint(std::move(in_row), Relation::LessEqual, 1.0);

    for (std::size_t i : detail::peer_indices(dataset, test_index, false)) {
        const DmuRecord& peer = dataset[i];
        std::vector<double> peer_row(delta + 1, 0.0);
        for (std::size_t k = 0; k < n_out; ++k) peer_row[k] = peer.outputs[k];
        for (std::size_t j = 0; j < n_in; ++j) peer_row[n_out + j] = -peer.inputs[j];
        lp.add_constraint(std::move(peer_row), Relation::LessEqual, 0.0);
    }
    return lp;
}

// Fixed-delta feasibility system of the exact robust CCR model:
//   (1-a*delta) y0.u >= 1,  (1+b*delta) x0.v <= 1,
//   (1+c*delta) Yi.u - (1-d*delta) Xi.v <= 0   for every peer i,
// where a..d are the mask flags (test outputs, test inputs, peer outputs,
// peer inputs). Variables [u, v] are nonnegative.
inline ConstraintSystem build_robust_feasibility(const Dataset& dataset, std::size_t test_index,
                                                 const PerturbationMask& mask, double delta) {
    detail::check_index(dataset, test_index);
    if (!mask.any())
        throw InvalidInput("robust model: perturbation mask fixes every data group");
    if (!(delta >= -1.0 && delta <= 1.0))
        throw InvalidInput("robust feasibility: delta outside [-1, 1]");
    const std::size_t n_out = dataset.output_dim();
    const std::size_t n_in = dataset.input_dim();
    const DmuRecord& test = dataset[test_index];

    const double f_test_out = mask.vary_test_outputs ? 1.0 - delta : 1.0;
    const double f_test_in = mask.vary_test_inputs ? 1.0 + delta : 1.0;
    const double f_peer_out = mask.vary_peer_outputs ? 1.0 + delta : 1.0;
    const double f_peer_in = mask.vary_peer_inputs ? 1.0 - delta : 1.0;

    ConstraintSystem system(n_out + n_in);

    std::vector<double> out_row(n_out + n_in, 0.0);
    for (std::size_t k = 0; k < n_out; ++k) out_row[k] = f_test_out * test.outputs[k];
    system.add_constraint(std::move(out_row), Relation::GreaterEqual, 1.0);

    std::vector<double> in_row(n_out + n_in, 0.0);
    for (std::size_t j = 0; j < n_in; ++j) in_row[n_out + j] = f_test_in * test.inputs[j];
    system.add_constraint(std::move(in_row), Relation::LessEqual, 1.0);

    for (std::size_t i : detail::peer_indices(dataset, test_index, false)) {
        const DmuRecord& peer = dataset[i];
        std::vector<double> peer_row(n_out + n_in, 0.0);
        for (std::size_t k = 0; k < n_out; ++k) peer_row[k] = f_peer_out * peer.outputs[k];
        for (std::size_t j = 0; j < n_in; ++j) peer_row[n_out + j] = -f_peer_in * peer.inputs[j];
        system.add_constraint(std::move(peer_row), Relation::LessEqual, 0.0);
    }
    return system;
}

// max y0.u - v0  s.t.  x0.v <= 1,  Yu - Xv - 1v0 <= 0,  u, v >= 0, v0 free
inline LinearProgram build_bcc_classical(const Dataset& dataset, std::size_t test_index,
                                         bool include_self = true) {
    detail::check_index(dataset, test_index);
    const std::size_t n_out = dataset.output_dim();
    const std::size_t n_in = dataset.input_dim();
    const std::size_t v0 = n_out + n_in;
    const DmuRecord& test = dataset[test_index];

    LinearProgram lp(v0 + 1);
    for (std::size_t k = 0; k < n_out; ++k) lp.objective[k] = test.outputs[k];
    lp.objective[v0] = -1.0;
    lp.set_free(v0);

    std::vector<double> in_row(v0 + 1, 0.0);
    for (std::size_t j = 0; j < n_in; ++j) in_row[n_out + j] = test.inputs[j];
    lp.add_constraint(std::move(in_row), Relation::LessEqual, 1.0);

    for (std::size_t i : detail::peer_indices(dataset, test_index, include_self)) {
        const DmuRecord& peer = dataset[i];
        std::vector<double> peer_row(v0 + 1, 0.0);
        for (std::size_t k = 0; k < n_out; ++k) peer_row[k] = peer.outputs[k];
        for (std::size_t j = 0; j < n_in; ++j) peer_row[n_out + j] = -peer.inputs[j];
        peer_row[v0] = -1.0;
        lp.add_constraint(std::move(peer_row), Relation::LessEqual, 0.0);
    }
    return lp;
}

// max delta  s.t.  y0.u - v0 >= 1 + delta,  x0.v <= 1 - delta,
//                  Yu - Xv - 1v0 <= 0,  u, v >= 0, v0 and delta free
inline LinearProgram build_bcc_robust_lp(const Dataset& dataset, std::size_t test_index) {
    detail::check_index(dataset, test_index);
    const std::size_t n_out = dataset.output_dim();
    const std::size_t n_in = dataset.input_dim();
    const std::size_t v0 = n_out + n_in;
    const std::size_t delta = v0 + 1;
    const DmuRecord& test = dataset[test_index];

    LinearProgram lp(delta + 1);
    lp.objective[delta] = 1.0;
    lp.set_free(v0);
    lp.set_free(delta);

    std::vector<double> out_row(delta + 1, 0.0);
    for (std::size_t k = 0; k < n_out; ++k) out_row[k] = test.outputs[k];
    out_row[v0] = -1.0;
    out_row[delta] = -1.0;
    lp.add_constraint(std::move(out_row), Relation::GreaterEqual, 1.0);

    std::vector<double> in_row(delta + 1, 0.0);
    for (std::size_t j = 0; j < n_in; ++j) in_row[n_out + j] = test.inputs[j];
    in_row[delta] = 1.0;
    lp.add_constraint(std::move(in_row), Relation::LessEqual, 1.0);

    for (std::size_t i : detail::peer_indices(dataset, test_index, false)) {
        const DmuRecord& peer = dataset[i];
        std::vector<double> peer_row(delta + 1, 0.0);
        for (std::size_t k = 0; k < n_out; ++k) peer_row[k] = peer.outputs[k];
        for (std::size_t j = 0; j < n_in; ++j) peer_row[n_out + j] = -peer.inputs[j];
        peer_row[v0] = -1.0;
        lp.add_constraint(std::move(peer_row), Relation::LessEqual, 0.0);
    }
    return lp;
}

// Fixed-delta feasibility system of the exact robust BCC model:
//   (1-delta) y0.u - v0 >= 1,  (1+delta) x0.v <= 1,
//   (1+delta) Yi.u - (1-delta) Xi.v - v0 <= 0,  u, v >= 0, v0 free.
inline ConstraintSystem build_bcc_robust_feasibility(const Dataset& dataset,
                                                     std::size_t test_index, double delta) {
    detail::check_index(dataset, test_index);
    if (!(delta >= -1.0 && delta <= 1.0))
        throw InvalidInput("robust feasibility: delta outside [-1, 1]");
    const std::size_t n_out = dataset.output_dim();
    const std::size_t n_in = dataset.input_dim();
    const std::size_t v0 = n_out + n_in;
    const DmuRecord& test = dataset[test_index];

    ConstraintSystem system(v0 + 1);
    system.set_free(v0);

    std::vector<double> out_row(v0 + 1, 0.0);
    for (std::size_t k = 0; k < n_out; ++k) out_row[k] = (1.0 - delta) * test.outputs[k];
    out_row[v0] = -1.0;
    system.add_constraint(std::move(out_row), Relation::GreaterEqual, 1.0);

    std::vector<double> in_row(v0 + 1, 0.0);
    for (std::size_t j = 0; j < n_in; ++j) in_row[n_out + j] = (1.0 + delta) * test.inputs[j];
    system.add_constraint(std::move(in_row), Relation::LessEqual, 1.0);

    for (std::size_t i : detail::peer_indices(dataset, test_index, false)) {
        const DmuRecord& peer = dataset[i];
        std::vector<double> peer_row(v0 + 1, 0.0);
        for (std::size_t k = 0; k < n_out; ++k) peer_row[k] = (1.0 + delta) * peer.outputs[k];
        for (std::size_t j = 0; j < n_in; ++j)
            peer_row[n_out + j] = -(1.0 - delta) * peer.inputs[j];
        peer_row[v0] = -1.0;
        system.add_constraint(std::move(peer_row), Relation::LessEqual, 0.0);
    }
    return system;
}

// The plain efficiency test: the robust CCR system at delta = 0, i.e.
//   y0.u >= 1,  x0.v <= 1,  Yu - Xv <= 0  with the test unit excluded from
// the peer block. A DMU is efficient exactly when this system is feasible.
inline ConstraintSystem build_efficiency_system(const Dataset& dataset, std::size_t test_index) {
    return build_robust_feasibility(dataset, test_index, PerturbationMask::all(), 0.0);
}

inline bool is_efficient(const Dataset& dataset, std::size_t test_index,
                         const SimplexOptions& opts = {}) {
    return is_feasible(build_efficiency_system(dataset, test_index), opts);
}

}  // namespace robdea
