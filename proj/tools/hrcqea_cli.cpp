// Command-line front end: run experiments, generate knapsack instances and
// summarize trace directories.
//
// Exit codes: 0 success, 1 configuration error, 2 runtime or IO error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "hrcqea/csv.hpp"
#include "hrcqea/errors.hpp"
#include "hrcqea/harness.hpp"
#include "hrcqea/knapsack.hpp"

namespace {

constexpr int exit_config = 1;
constexpr int exit_runtime = 2;

void print_summary(const std::vector<hrcqea::SummaryRow>& rows)
{
    hrcqea::write_summary_csv(std::cout, rows);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hybrid real-coded quantum evolutionary algorithm"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Run an experiment and write trace/summary CSV files");
    std::string config_path;
    run->add_option("--config", config_path, "key = value configuration file");

    // Every configuration key is also a flag; flags override the file.
    const std::vector<std::pair<std::string, std::string>> keyed_flags = {
        {"--problem", "problem"}, {"--dim", "dim"},           {"--algo", "algo"},
        {"--pop", "pop"},         {"--gens", "gens"},         {"--runs", "runs"},
        {"--seed", "seed"},       {"--out", "out"},           {"--instance", "instance"},
        {"--items", "items"},     {"--threads", "threads"},   {"--c1", "c1"},
        {"--c2", "c2"},           {"--delta", "delta"},       {"--lambda", "lambda"},
        {"--m1", "m1"},           {"--m2", "m2"},             {"--kappa", "kappa"},
        {"--tau", "tau"},         {"--m-cross", "m_cross"},   {"--write-back", "write_back"},
        {"--qea-delta-theta", "qea_delta_theta"}, {"--multi-gene-mode", "multi_gene_mode"},
    };
    std::vector<std::optional<std::string>> flag_values(keyed_flags.size());
    for (std::size_t k = 0; k < keyed_flags.size(); ++k)
        run->add_option(keyed_flags[k].first, flag_values[k], "overrides '" + keyed_flags[k].second + "'");

    // gen-knapsack
    auto* gen = app.add_subcommand("gen-knapsack", "Generate a random 0-1 knapsack instance");
    std::size_t items = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--items", items, "number of items")->required();
    gen->add_option("--seed", gen_seed, "generator seed")->required();
    gen->add_option("--out", gen_out, "output file")->required();

    // summarize
    auto* summarize = app.add_subcommand("summarize", "Recompute summary.csv from the traces in a directory");
    std::string summarize_dir;
    summarize->add_option("--in", summarize_dir, "experiment output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config;
    }

    try {
        if (*run) {
            hrcqea::ExperimentConfig config;
            if (!config_path.empty())
                hrcqea::load_config_file(config_path, config);
            for (std::size_t k = 0; k < keyed_flags.size(); ++k)
                if (flag_values[k])
                    config.set(keyed_flags[k].second, *flag_values[k]);

            const auto result = hrcqea::run_experiment(config);
            print_summary({result.summary});
            std::cerr << "evaluations: " << result.evaluations << "\n";
            if (!result.trace_path.empty())
                std::cerr << "trace: " << result.trace_path.string() << "\n";
        } else if (*gen) {
            if (items == 0)
                throw hrcqea::ConfigError("--items must be at least 1");
            hrcqea::Rng rng(gen_seed);
            hrcqea::save_instance(hrcqea::generate_instance(items, rng), gen_out);
        } else if (*summarize) {
            print_summary(hrcqea::summarize_directory(summarize_dir));
        }
    } catch (const hrcqea::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_runtime;
    }
    return 0;
}
