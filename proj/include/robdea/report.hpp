#pragma once

// Human-readable tables and machine-readable JSON for ranking results,
// efficiency ranges and retention reports. JSON output is byte-stable for
// identical inputs; tables right-align numbers at the configured precision.

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "robdea/perturbation.hpp"
#include "robdea/ranking.hpp"

namespace robdea {

namespace report_detail {

inline std::string fixed(double v, int precision) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(precision) << v;
    return s.str();
}

inline void print_table(std::ostream& out, const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << "  ";
            if (c == 0) out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
            else out << std::right << std::setw(static_cast<int>(width[c])) << row[c];
        }
        out << "\n";
    };
    emit(header);
    std::vector<std::string> rule;
    for (std::size_t w : width) rule.push_back(std::string(w, '-'));
    emit(rule);
    for (const auto& row : rows) emit(row);
}

}  // namespace report_detail

inline void write_table(std::ostream& out, const std::vector<RankingResult>& results,
                        int precision) {
    std::vector<std::vector<std::string>> rows;
    for (const RankingResult& res : results)
        rows.push_back({res.dmu_id, model_kind_name(res.model),
                        report_detail::fixed(res.delta_star, precision),
                        report_detail::fixed(res.r, precision),
                        report_detail::fixed(res.classical_score, precision),
                        res.efficient ? "yes" : "no"});
    report_detail::print_table(out, {"id", "model", "delta*", "r", "classical", "efficient"},
                               rows);
}

inline void write_table(std::ostream& out, const std::vector<EfficiencyRange>& ranges,
                        int precision) {
    std::vector<std::vector<std::string>> rows;
    for (const EfficiencyRange& er : ranges)
        rows.push_back({er.dmu_id, report_detail::fixed(er.r_lower, precision),
                        report_detail::fixed(er.r_upper, precision),
                        er.always_efficient ? "yes" : "no", er.never_efficient ? "yes" : "no"});
    report_detail::print_table(
        out, {"id", "r_lower", "r_upper", "always_efficient", "never_efficient"}, rows);
}

inline void write_table(std::ostream& out, const RetentionReport& report) {
    out << "dmu:        " << report.dmu_id << "\n"
        << "delta:      " << report.delta << "\n"
        << "trials:     " << report.trials << "\n"
        << "retained:   " << report.retained << "\n"
        << "violations: " << report.violations.size() << "\n";
    if (!report.violations.empty()) {
        out << "violating trial seeds:";
        std::size_t shown = 0;
        for (std::uint64_t s : report.violations) {
            if (shown++ == 8) { out << " ..."; break; }
            out << " " << s;
        }
        out << "\n";
    }
}

inline nlohmann::ordered_json to_json(const RankingResult& res) {
    return nlohmann::ordered_json{{"id", res.dmu_id},
                                  {"model", model_kind_name(res.model)},
                                  {"delta_star", res.delta_star},
                                  {"r", res.r},
                                  {"classical", res.classical_score},
                                  {"efficient", res.efficient}};
}

inline nlohmann::ordered_json to_json(const EfficiencyRange& er) {
    return nlohmann::ordered_json{{"id", er.dmu_id},
                                  {"r_lower", er.r_lower},
                                  {"r_upper", er.r_upper},
                                  {"always_efficient", er.always_efficient},
                                  {"never_efficient", er.never_efficient}};
}

inline nlohmann::ordered_json to_json(const RetentionReport& report) {
    return nlohmann::ordered_json{{"id", report.dmu_id},
                                  {"delta", report.delta},
                                  {"trials", report.trials},
                                  {"retained", report.retained},
                                  {"violations", report.violations}};
}

template <typename T>
nlohmann::ordered_json to_json(const std::vector<T>& items) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const T& item : items) arr.push_back(to_json(item));
    return arr;
}

}  // namespace robdea
