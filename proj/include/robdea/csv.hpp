#pragma once

// CSV ingestion for point and interval datasets.
//
// Header grammar: the first column is `id`; input columns are `i:<name>`,
// output columns `o:<name>`. Interval data uses paired headers
// `i:<name>:lo` / `i:<name>:hi` (same for `o:`). When point and interval
// columns are mixed, point columns are promoted to degenerate intervals and
// the whole file parses as an interval dataset.

#include <charconv>
#include <cstddef>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "robdea/data.hpp"
#include "robdea/errors.hpp"

namespace robdea {

using ParsedDataset = std::variant<Dataset, IntervalDataset>;

inline bool is_interval(const ParsedDataset& parsed) {
    return std::holds_alternative<IntervalDataset>(parsed);
}

namespace csv_detail {

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
    return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split_line(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            cells.push_back(trim(line.substr(start, i - start)));
            start = i + 1;
        }
    }
    return cells;
}

struct Column {
    bool is_input = false;
    std::string name;
    int bound = 0;  // 0 point, -1 lo, +1 hi
};

inline Column parse_header_cell(const std::string& cell, std::size_t col) {
    Column c;
    std::string_view s(cell);
    if (s.rfind("i:", 0) == 0) c.is_input = true;
    else if (s.rfind("o:", 0) == 0) c.is_input = false;
    else
        throw InvalidInput("header column " + std::to_string(col + 1) + " ('" + cell +
                           "'): expected an 'i:' or 'o:' prefix");
    s.remove_prefix(2);
    if (s.size() > 3 && s.substr(s.size() - 3) == ":lo") {
        c.bound = -1;
        s.remove_suffix(3);
    } else if (s.size() > 3 && s.substr(s.size() - 3) == ":hi") {
        c.bound = 1;
        s.remove_suffix(3);
    }
    c.name = std::string(s);
    if (c.name.empty())
        throw InvalidInput("header column " + std::to_string(col + 1) + ": empty factor name");
    return c;
}

inline double parse_number(const std::string& cell, std::size_t line_no,
                           const std::string& column_name) {
    const std::string t = cell;
    double value = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw InvalidInput("line " + std::to_string(line_no) + ", column '" + column_name +
                           "': cannot parse '" + cell + "' as a number");
    if (value < 0.0)
        throw InvalidInput("line " + std::to_string(line_no) + ", column '" + column_name +
                           "': negative value " + cell);
    return value;
}

}  // namespace csv_detail

inline ParsedDataset parse_dataset(std::string_view text) {
    using namespace csv_detail;

    // Split into non-empty lines.
    std::vector<std::pair<std::size_t, std::string>> lines;  // (1-based line no, content)
    std::size_t line_no = 0, start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '\n') {
            ++line_no;
            std::string line = trim(text.substr(start, i - start));
            if (!line.empty()) lines.emplace_back(line_no, std::move(line));
            start = i + 1;
        }
    }
    if (lines.empty()) throw InvalidInput("csv: empty document");

    const std::vector<std::string> header = split_line(lines.front().second);
    if (header.empty() || trim(header.front()) != "id")
        throw InvalidInput("csv: first header column must be 'id'");

    std::vector<Column> columns;
    for (std::size_t c = 1; c < header.size(); ++c)
        columns.push_back(parse_header_cell(header[c], c));

    // Factors in order of first appearance, separately for inputs/outputs.
    struct Factor {
        std::string name;
        std::size_t lo_col = SIZE_MAX, hi_col = SIZE_MAX, point_col = SIZE_MAX;
    };
    std::vector<Factor> in_factors, out_factors;
    auto factor_slot = [](std::vector<Factor>& fs, const std::string& name) -> Factor& {
        for (Factor& f : fs)
            if (f.name == name) return f;
        fs.push_back(Factor{name, SIZE_MAX, SIZE_MAX, SIZE_MAX});
        return fs.back();
    };
    bool any_interval = false;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const Column& col = columns[c];
        Factor& f = factor_slot(col.is_input ? in_factors : out_factors, col.name);
        auto assign = [&](std::size_t& slot, const char* what) {
            if (slot != SIZE_MAX)
                throw InvalidInput("csv header: duplicate " + std::string(what) + " column for '" +
                                   (col.is_input ? std::string("i:") : std::string("o:")) +
                                   col.name + "'");
            slot = c;
        };
        if (col.bound == 0) assign(f.point_col, "point");
        else if (col.bound < 0) { assign(f.lo_col, "lo"); any_interval = true; }
        else { assign(f.hi_col, "hi"); any_interval = true; }
    }
    auto check_factors = [&](const std::vector<Factor>& fs, const char* side) {
        for (const Factor& f : fs) {
            const bool has_lo = f.lo_col != SIZE_MAX, has_hi = f.hi_col != SIZE_MAX;
            if (has_lo != has_hi)
                throw InvalidInput("csv header: column '" + std::string(side) + f.name +
                                   "' has only one of ':lo'/':hi'");
            if (has_lo && f.point_col != SIZE_MAX)
                throw InvalidInput("csv header: column '" + std::string(side) + f.name +
                                   "' mixes point and interval forms");
        }
    };
    check_factors(in_factors, "i:");
    check_factors(out_factors, "o:");
    if (in_factors.empty() || out_factors.empty())
        throw InvalidInput("csv: need at least one input and one output column");

    std::vector<DmuRecord> lo_rows, hi_rows;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto& [no, content] = lines[r];
        const std::vector<std::string> cells = split_line(content);
        if (cells.size() != header.size())
            throw InvalidInput("line " + std::to_string(no) + ": expected " +
                               std::to_string(header.size()) + " cells, found " +
                               std::to_string(cells.size()));
        DmuRecord lo, hi;
        lo.id = hi.id = cells[0];
        if (lo.id.empty()) throw InvalidInput("line " + std::to_string(no) + ": empty id");
        auto read = [&](const Factor& f, bool lower) {
            const std::size_t c = f.point_col != SIZE_MAX ? f.point_col
                                                          : (lower ? f.lo_col : f.hi_col);
            return parse_number(cells[c + 1], no, header[c + 1]);
        };
        for (const Factor& f : in_factors) {
            lo.inputs.push_back(read(f, true));
            hi.inputs.push_back(read(f, false));
        }
        for (const Factor& f : out_factors) {
            lo.outputs.push_back(read(f, true));
            hi.outputs.push_back(read(f, false));
        }
        lo_rows.push_back(std::move(lo));
        hi_rows.push_back(std::move(hi));
    }
    if (lo_rows.empty()) throw InvalidInput("csv: no data rows");

    try {
        if (!any_interval) return Dataset(std::move(lo_rows));
        return IntervalDataset(Dataset(std::move(lo_rows)), Dataset(std::move(hi_rows)));
    } catch (const InvalidInput& e) {
        throw InvalidInput(std::string("csv: ") + e.what());
    }
}

namespace csv_detail {

// Shortest decimal form that parses back to exactly the same double.
inline std::string format_number(double v) {
    char buf[64];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, v);
        double back = 0.0;
        std::from_chars(buf, buf + std::string_view(buf).size(), back);
        if (back == v) break;
    }
    return buf;
}

}  // namespace csv_detail

inline std::string serialize_dataset(const Dataset& dataset) {
    std::ostringstream out;
    out << "id";
    for (std::size_t j = 0; j < dataset.input_dim(); ++j) out << ",i:x" << j + 1;
    for (std::size_t k = 0; k < dataset.output_dim(); ++k) out << ",o:y" << k + 1;
    out << "\n";
    for (const DmuRecord& d : dataset.dmus()) {
        out << d.id;
        for (double v : d.inputs) out << "," << csv_detail::format_number(v);
        for (double v : d.outputs) out << "," << csv_detail::format_number(v);
        out << "\n";
    }
    return out.str();
}

inline std::string serialize_dataset(const IntervalDataset& data) {
    std::ostringstream out;
    out << "id";
    for (std::size_t j = 0; j < data.lower.input_dim(); ++j)
        out << ",i:x" << j + 1 << ":lo,i:x" << j + 1 << ":hi";
    for (std::size_t k = 0; k < data.lower.output_dim(); ++k)
        out << ",o:y" << k + 1 << ":lo,o:y" << k + 1 << ":hi";
    out << "\n";
    for (std::size_t i = 0; i < data.size(); ++i) {
        const DmuRecord& lo = data.lower[i];
        const DmuRecord& hi = data.upper[i];
        out << lo.id;
        for (std::size_t j = 0; j < lo.inputs.size(); ++j)
            out << "," << csv_detail::format_number(lo.inputs[j]) << ","
                << csv_detail::format_number(hi.inputs[j]);
        for (std::size_t k = 0; k < lo.outputs.size(); ++k)
            out << "," << csv_detail::format_number(lo.outputs[k]) << ","
                << csv_detail::format_number(hi.outputs[k]);
        out << "\n";
    }
    return out.str();
}

}  // namespace robdea
