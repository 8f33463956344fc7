#pragma once

// Command-line frontend.
//
//   rank    --input data.csv [--model KIND] [--fix GROUP ...] [--interval]
//           [--format table|json] [--precision N]
//   verify  [--datasets N] [--seed S] [--format table|json]
//   perturb --input data.csv --dmu ID [--delta X] [--trials N] [--seed S]
//           [--fix GROUP ...] [--format table|json]
//
// Exit codes: 0 success, 1 input error, 2 numeric failure.

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "robdea/csv.hpp"
#include "robdea/data.hpp"
#include "robdea/perturbation.hpp"
#include "robdea/properties.hpp"
#include "robdea/ranking.hpp"
#include "robdea/report.hpp"

namespace robdea {

struct RunConfig {
    ModelKind model = ModelKind::CcrRobustLp;
    PerturbationMask mask;
    bool include_self_classical = true;
    bool interval_mode = false;
    BisectionConfig bisection;
    enum class OutputFormat { Table, Json } format = OutputFormat::Table;
    int precision = 4;
    std::optional<std::uint64_t> seed;
};

namespace cli_detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void apply_fix(PerturbationMask& mask, const std::string& group) {
    if (group == "inputs") mask.vary_test_inputs = false;
    else if (group == "outputs") mask.vary_test_outputs = false;
    else if (group == "peers-inputs") mask.vary_peer_inputs = false;
    else if (group == "peers-outputs") mask.vary_peer_outputs = false;
    else
        throw InvalidInput("unknown --fix group '" + group +
                           "' (expected inputs|outputs|peers-inputs|peers-outputs)");
}

inline int run_rank(const RunConfig& run, const std::string& input_path, std::ostream& out,
                    std::ostream& err) {
    const ParsedDataset parsed = parse_dataset(read_file(input_path));
    RankConfig config;
    config.bisection = run.bisection;
    config.include_self_classical = run.include_self_classical;

    if (run.interval_mode) {
        if (!std::holds_alternative<IntervalDataset>(parsed))
            throw InvalidInput("--interval requires interval columns (':lo'/':hi') in the input");
        const IntervalDataset& data = std::get<IntervalDataset>(parsed);
        std::vector<EfficiencyRange> ranges;
        for (std::size_t i = 0; i < data.size(); ++i)
            ranges.push_back(rank_interval(data, i, run.model, run.mask, config));
        if (run.format == RunConfig::OutputFormat::Json)
            out << to_json(ranges).dump(2) << "\n";
        else
            write_table(out, ranges, run.precision);
        return 0;
    }

    if (std::holds_alternative<IntervalDataset>(parsed))
        throw InvalidInput("input has interval columns; pass --interval to rank ranges");
    const Dataset& dataset = std::get<Dataset>(parsed);
    const RankingBatch batch = rank_all(dataset, run.model, run.mask, config);
    for (const RankingError& failure : batch.failures)
        err << "warning: DMU '" << failure.dmu_id << "': " << failure.message << "\n";
    if (run.format == RunConfig::OutputFormat::Json)
        out << to_json(batch.results).dump(2) << "\n";
    else
        write_table(out, batch.results, run.precision);
    return 0;
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Robustness-based DEA ranking"};
    app.require_subcommand(1);

    std::string input_path;
    std::string model_name = "robust-lp";
    std::vector<std::string> fixed_groups;
    std::string format_name = "table";
    bool interval_mode = false;
    int precision = 4;

    CLI::App* rank = app.add_subcommand("rank", "Rank the DMUs of a CSV dataset");
    rank->add_option("--input", input_path, "CSV dataset")->required();
    rank->add_option("--model", model_name,
                     "ccr|robust-lp|robust-exact|bcc|bcc-robust-lp|bcc-robust-exact");
    rank->add_option("--fix", fixed_groups,
                     "hold a data group fixed (inputs|outputs|peers-inputs|peers-outputs); "
                     "repeatable");
    rank->add_flag("--interval", interval_mode, "rank interval data (best/worst case)");
    rank->add_option("--format", format_name, "table|json");
    rank->add_option("--precision", precision, "decimals in table output (1..12)");

    std::size_t verify_datasets = 200;
    std::uint64_t verify_seed = PropertySuiteOptions{}.seed;
    CLI::App* verify = app.add_subcommand("verify", "Run the randomized property suites");
    verify->add_option("--datasets", verify_datasets, "number of random datasets");
    verify->add_option("--seed", verify_seed, "random seed");

    std::string perturb_input, perturb_dmu;
    double perturb_delta = 0.05;
    std::size_t perturb_trials = 1000;
    std::uint64_t perturb_seed = 0;
    CLI::App* perturb = app.add_subcommand("perturb", "Monte-Carlo retention test for one DMU");
    perturb->add_option("--input", perturb_input, "CSV dataset")->required();
    perturb->add_option("--dmu", perturb_dmu, "id of the DMU under test")->required();
    perturb->add_option("--delta", perturb_delta, "relative perturbation level in [0,1)");
    perturb->add_option("--trials", perturb_trials, "number of sampled scenarios");
    perturb->add_option("--seed", perturb_seed, "random seed");
    perturb->add_option("--fix", fixed_groups,
                        "hold a data group fixed while sampling; repeatable");
    perturb->add_option("--format", format_name, "table|json");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        RunConfig run;
        if (format_name == "json") run.format = RunConfig::OutputFormat::Json;
        else if (format_name != "table") throw InvalidInput("unknown --format '" + format_name + "'");
        if (precision < 1 || precision > 12)
            throw InvalidInput("--precision must lie in [1, 12]");
        run.precision = precision;
        for (const std::string& group : fixed_groups) cli_detail::apply_fix(run.mask, group);

        if (rank->parsed()) {
            run.model = parse_model_kind(model_name);
            run.interval_mode = interval_mode;
            if (!run.mask.any())
                throw InvalidInput("--fix held every data group fixed; nothing can vary");
            if (is_bcc(run.model) && !is_classical(run.model) && !run.mask.all_vary())
                throw InvalidInput("--fix is not supported with the robust BCC models");
            return cli_detail::run_rank(run, input_path, out, err);
        }

        if (verify->parsed()) {
            PropertySuiteOptions options;
            options.num_datasets = verify_datasets;
            options.seed = verify_seed;
            const std::vector<SuiteResult> results = run_property_suites(options);
            print_suite_results(out, results);
            if (!all_passed(results)) {
                err << "error: property violations detected\n";
                return 2;
            }
            return 0;
        }

        // perturb
        const ParsedDataset parsed = parse_dataset(cli_detail::read_file(perturb_input));
        if (!std::holds_alternative<Dataset>(parsed))
            throw InvalidInput("perturb requires point data, not intervals");
        const Dataset& dataset = std::get<Dataset>(parsed);
        const std::size_t index = dataset.index_of(perturb_dmu);
        if (index == dataset.size())
            throw InvalidInput("no DMU with id '" + perturb_dmu + "' in the input");
        const RetentionReport report = retention_test(dataset, index, perturb_delta,
                                                      perturb_trials, perturb_seed, run.mask);
        if (run.format == RunConfig::OutputFormat::Json)
            out << to_json(report).dump(2) << "\n";
        else
            write_table(out, report);
        return 0;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const NumericFailure& e) {
        err << "numeric failure: " << e.what() << "\n";
        return 2;
    } catch (const InternalInconsistency& e) {
        err << "numeric failure: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace robdea
