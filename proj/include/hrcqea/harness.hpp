#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hrcqea/core.hpp"
#include "hrcqea/problem.hpp"
#include "hrcqea/trace.hpp"
#include "hrcqea/variation.hpp"

namespace hrcqea {

enum class Algorithm { Hrcqea, Qea };

std::string to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view name);

/// Everything needed to reproduce an experiment. Unset optional fields take
/// problem-dependent defaults in `resolved()`.
struct ExperimentConfig {
    std::string problem = "sphere";
    std::size_t dimension = 30;
    std::string instance_path;     // knapsack: load this instance if set
    std::size_t items = 100;       // knapsack: generate this many items otherwise
    Algorithm algorithm = Algorithm::Hrcqea;
    std::size_t population = 10;
    std::size_t t_max = 4000;
    std::size_t runs = 50;
    std::uint64_t seed = 1;
    std::filesystem::path out_dir;
    unsigned threads = 1;

    VariationParams variation;
    std::optional<unsigned> m1;
    std::optional<unsigned> m2;
    std::optional<unsigned> kappa;

    bool knapsack_write_back = true;
    double qea_delta_theta = 0.01 * 3.14159265358979323846;

    bool is_knapsack() const;

    /// Applies a `key = value` setting. Throws ConfigError on unknown keys or
    /// malformed values.
    void set(std::string_view key, std::string_view value);

    /// Copy with m1, m2 and kappa resolved: 45/15/1 for the knapsack,
    /// round(1.5 D)/round(0.5 D)/5 otherwise, unless overridden.
    ExperimentConfig resolved() const;

    /// Throws ConfigError if the configuration cannot run.
    void validate() const;
};

/// Reads a flat `key = value` file (`#` starts a comment line) into `config`.
void load_config_file(const std::filesystem::path& path, ExperimentConfig& config);

/// Round half up, used for the m1/m2 defaults.
unsigned round_half_up(double v);

/// Builds the objective. For the knapsack this loads `instance_path`, or
/// generates an instance from `items` and `seed`.
std::unique_ptr<Problem> make_problem(const ExperimentConfig& config);

struct RunOutcome {
    double final_best = 0.0;
    std::vector<double> best_position;
    RunRecord record;
    std::size_t evaluations = 0;
};

struct HrcqeaResult {
    TriploidChromosome global_best;
    RunRecord record;
    std::size_t evaluations = 0;
};

/// One full HRCQEA run. Per generation: m1 Fine and m2 Coarse single-gene
/// mutations per particle, each particle followed by an archive refresh;
/// multi-gene mutation every kappa generations on triggered particles; a
/// crossover round every tau generations; a final archive refresh.
HrcqeaResult run_hrcqea(const Problem& problem, const ExperimentConfig& config, std::uint64_t seed);

/// Dispatches on `config.algorithm`.
RunOutcome run_once(const Problem& problem, const ExperimentConfig& config, std::uint64_t seed);

struct SummaryStats {
    double best = 0.0;
    double worst = 0.0;
    double mean = 0.0;
    double sigma = 0.0; // population standard deviation
};

SummaryStats summarize_finals(const std::vector<double>& finals, Sense sense);

struct SummaryRow {
    std::string problem;
    std::string algorithm;
    std::size_t dimension = 0;
    std::size_t runs = 0;
    SummaryStats stats;
};

struct ExperimentResult {
    SummaryRow summary;
    std::vector<RunRecord> records;
    std::vector<double> finals;
    std::size_t evaluations = 0;
    std::filesystem::path trace_path;
    std::filesystem::path summary_path;
};

using RunFunction = std::function<RunOutcome(const Problem&, const ExperimentConfig&, std::uint64_t)>;

/// Runs `config.runs` independent runs with seeds seed + run index,
/// aggregates the final bests and, when `out_dir` is set, writes the trace
/// CSV and merges one row into summary.csv. `run` defaults to run_once.
ExperimentResult run_experiment(const ExperimentConfig& config, const RunFunction& run = {});

/// `trace_<problem>_d<dimension>_<algorithm>.csv`
std::string trace_file_name(const std::string& problem, std::size_t dimension, Algorithm algorithm);

/// Recomputes summary rows from every trace file in `dir` and rewrites
/// `dir/summary.csv`.
std::vector<SummaryRow> summarize_directory(const std::filesystem::path& dir);

} // namespace hrcqea
