#pragma once

// Core DEA data model: decision making units, datasets, perturbation masks
// and interval-valued datasets.

#include <cmath>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "robdea/errors.hpp"

namespace robdea {

struct DmuRecord {
    std::string id;
    std::vector<double> inputs;   // resource quantities, all >= 0
    std::vector<double> outputs;  // product quantities, all >= 0
};

namespace detail {

inline void check_entries(const std::vector<double>& values, const std::string& id,
                          const char* side) {
    bool any_positive = false;
    for (double v : values) {
        if (std::isnan(v) || std::isinf(v))
            throw InvalidInput("DMU '" + id + "': non-finite " + side + " value");
        if (v < 0.0)
            throw InvalidInput("DMU '" + id + "': negative " + side + " value");
        if (v > 0.0) any_positive = true;
    }
    if (!any_positive)
        throw InvalidInput("DMU '" + id + "': all " + std::string(side) +
                           "s are zero; the unit cannot be ranked");
}

}  // namespace detail

class Dataset {
public:
    Dataset() = default;

    explicit Dataset(std::vector<DmuRecord> dmus) : dmus_(std::move(dmus)) {
        if (dmus_.empty()) throw InvalidInput("dataset: no DMUs");
        input_dim_ = dmus_.front().inputs.size();
        output_dim_ = dmus_.front().outputs.size();
        if (input_dim_ == 0 || output_dim_ == 0)
            throw InvalidInput("dataset: DMUs need at least one input and one output");
        std::unordered_set<std::string> seen;
        for (const DmuRecord& d : dmus_) {
            if (d.id.empty()) throw InvalidInput("dataset: empty DMU id");
            if (!seen.insert(d.id).second)
                throw InvalidInput("dataset: duplicate DMU id '" + d.id + "'");
            if (d.inputs.size() != input_dim_ || d.outputs.size() != output_dim_)
                throw InvalidInput("DMU '" + d.id + "': dimension mismatch");
            detail::check_entries(d.inputs, d.id, "input");
            detail::check_entries(d.outputs, d.id, "output");
        }
    }

    std::size_t size() const { return dmus_.size(); }
    std::size_t input_dim() const { return input_dim_; }
    std::size_t output_dim() const { return output_dim_; }
    const DmuRecord& operator[](std::size_t i) const { return dmus_[i]; }
    const std::vector<DmuRecord>& dmus() const { return dmus_; }

    const DmuRecord& at(std::size_t i) const {
        if (i >= dmus_.size()) throw InvalidInput("dataset: DMU index out of range");
        return dmus_[i];
    }

    // Index of an id, or size() when absent.
    std::size_t index_of(const std::string& id) const {
        for (std::size_t i = 0; i < dmus_.size(); ++i)
            if (dmus_[i].id == id) return i;
        return dmus_.size();
    }

private:
    std::vector<DmuRecord> dmus_;
    std::size_t input_dim_ = 0;
    std::size_t output_dim_ = 0;
};

// Which of the four data groups may vary in a robust model. "Test" refers to
// the unit under evaluation, "peer" to all other units.
struct PerturbationMask {
    bool vary_test_inputs = true;
    bool vary_test_outputs = true;
    bool vary_peer_inputs = true;
    bool vary_peer_outputs = true;

    static PerturbationMask all() { return {}; }

    static PerturbationMask fixed_inputs() {
        return {false, true, false, true};
    }

    bool any() const {
        return vary_test_inputs || vary_test_outputs || vary_peer_inputs || vary_peer_outputs;
    }
    bool all_vary() const {
        return vary_test_inputs && vary_test_outputs && vary_peer_inputs && vary_peer_outputs;
    }

    bool operator==(const PerturbationMask&) const = default;
};

enum class ModelKind {
    CcrClassical,
    CcrRobustLp,
    CcrRobustExact,
    BccClassical,
    BccRobustLp,
    BccRobustExact,
};

inline bool is_bcc(ModelKind m) {
    return m == ModelKind::BccClassical || m == ModelKind::BccRobustLp ||
           m == ModelKind::BccRobustExact;
}
inline bool is_classical(ModelKind m) {
    return m == ModelKind::CcrClassical || m == ModelKind::BccClassical;
}
inline bool is_robust_lp(ModelKind m) {
    return m == ModelKind::CcrRobustLp || m == ModelKind::BccRobustLp;
}
inline bool is_robust_exact(ModelKind m) {
    return m == ModelKind::CcrRobustExact || m == ModelKind::BccRobustExact;
}

inline const char* model_kind_name(ModelKind m) {
    switch (m) {
        case ModelKind::CcrClassical: return "ccr";
        case ModelKind::CcrRobustLp: return "robust-lp";
        case ModelKind::CcrRobustExact: return "robust-exact";
        case ModelKind::BccClassical: return "bcc";
        case ModelKind::BccRobustLp: return "bcc-robust-lp";
        case ModelKind::BccRobustExact: return "bcc-robust-exact";
    }
    return "?";
}

inline ModelKind parse_model_kind(const std::string& name) {
    if (name == "ccr") return ModelKind::CcrClassical;
    if (name == "robust-lp") return ModelKind::CcrRobustLp;
    if (name == "robust-exact") return ModelKind::CcrRobustExact;
    if (name == "bcc") return ModelKind::BccClassical;
    if (name == "bcc-robust-lp") return ModelKind::BccRobustLp;
    if (name == "bcc-robust-exact") return ModelKind::BccRobustExact;
    throw InvalidInput("unknown model '" + name + "'");
}

// Elementwise bounds on an uncertain dataset. Both bounds share ids and
// shape; the lower dataset must itself be a valid Dataset.
struct IntervalDataset {
    Dataset lower;
    Dataset upper;

    IntervalDataset(Dataset lo, Dataset hi) : lower(std::move(lo)), upper(std::move(hi)) {
        if (lower.size() != upper.size() || lower.input_dim() != upper.input_dim() ||
            lower.output_dim() != upper.output_dim())
            throw InvalidInput("interval dataset: bound shapes differ");
        for (std::size_t i = 0; i < lower.size(); ++i) {
            const DmuRecord& lo_rec = lower[i];
            const DmuRecord& hi_rec = upper[i];
            if (lo_rec.id != hi_rec.id)
                throw InvalidInput("interval dataset: DMU ids differ between bounds");
            for (std::size_t j = 0; j < lo_rec.inputs.size(); ++j)
                if (lo_rec.inputs[j] > hi_rec.inputs[j])
                    throw InvalidInput("DMU '" + lo_rec.id + "': input interval is empty");
            for (std::size_t k = 0; k < lo_rec.outputs.size(); ++k)
                if (lo_rec.outputs[k] > hi_rec.outputs[k])
                    throw InvalidInput("DMU '" + lo_rec.id + "': output interval is empty");
        }
    }

    std::size_t size() const { return lower.size(); }
};

}  // namespace robdea
