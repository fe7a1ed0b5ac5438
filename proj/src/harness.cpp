#include "hrcqea/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <numbers>
#include <thread>

#include "hrcqea/baseline_qea.hpp"
#include "hrcqea/benchmarks.hpp"
#include "hrcqea/csv.hpp"
#include "hrcqea/errors.hpp"
#include "hrcqea/knapsack.hpp"
#include "hrcqea/selection.hpp"
#include "text_util.hpp"

namespace hrcqea {

std::string to_string(Algorithm a)
{
    return a == Algorithm::Hrcqea ? "hrcqea" : "qea";
}

Algorithm parse_algorithm(std::string_view name)
{
    if (name == "hrcqea")
        return Algorithm::Hrcqea;
    if (name == "qea")
        return Algorithm::Qea;
    throw ConfigError("unknown algorithm '" + std::string(name) + "' (expected hrcqea or qea)");
}

bool ExperimentConfig::is_knapsack() const
{
    return problem == "knapsack";
}

namespace {

template <typename Int>
Int config_int(std::string_view key, std::string_view value)
{
    auto v = detail::parse_int<Int>(value);
    if (!v)
        throw ConfigError("'" + std::string(key) + "' expects a non-negative integer, got '" + std::string(value) + "'");
    return *v;
}

/// Reals may carry a trailing "pi" factor: "pi", "0.01pi".
double config_real(std::string_view key, std::string_view value)
{
    double factor = 1.0;
    if (value.size() >= 2 && value.substr(value.size() - 2) == "pi") {
        factor = std::numbers::pi;
        value.remove_suffix(2);
        if (value.empty())
            return factor;
    }
    auto v = detail::parse_real(value);
    if (!v)
        throw ConfigError("'" + std::string(key) + "' expects a real number, got '" + std::string(value) + "'");
    return *v * factor;
}

bool config_bool(std::string_view key, std::string_view value)
{
    if (value == "true" || value == "1" || value == "yes")
        return true;
    if (value == "false" || value == "0" || value == "no")
        return false;
    throw ConfigError("'" + std::string(key) + "' expects true or false, got '" + std::string(value) + "'");
}

} // namespace

void ExperimentConfig::set(std::string_view key, std::string_view value)
{
    key = detail::trim(key);
    value = detail::trim(value);
    if (key == "problem") {
        problem = std::string(value);
        std::transform(problem.begin(), problem.end(), problem.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    } else if (key == "dim" || key == "dimension") {
        dimension = config_int<std::size_t>(key, value);
    } else if (key == "instance") {
        instance_path = std::string(value);
    } else if (key == "items") {
        items = config_int<std::size_t>(key, value);
    } else if (key == "algo" || key == "algorithm") {
        algorithm = parse_algorithm(value);
    } else if (key == "pop" || key == "population") {
        population = config_int<std::size_t>(key, value);
    } else if (key == "gens" || key == "t_max") {
        t_max = config_int<std::size_t>(key, value);
    } else if (key == "runs") {
        runs = config_int<std::size_t>(key, value);
    } else if (key == "seed") {
        seed = config_int<std::uint64_t>(key, value);
    } else if (key == "out") {
        out_dir = std::string(value);
    } else if (key == "threads") {
        threads = config_int<unsigned>(key, value);
    } else if (key == "c1") {
        variation.c1 = config_real(key, value);
    } else if (key == "c2") {
        variation.c2 = config_real(key, value);
    } else if (key == "delta") {
        variation.delta = config_int<unsigned>(key, value);
    } else if (key == "lambda") {
        variation.lambda = config_int<unsigned>(key, value);
    } else if (key == "m1") {
        m1 = config_int<unsigned>(key, value);
    } else if (key == "m2") {
        m2 = config_int<unsigned>(key, value);
    } else if (key == "kappa") {
        kappa = config_int<unsigned>(key, value);
    } else if (key == "tau") {
        variation.tau = config_int<unsigned>(key, value);
    } else if (key == "m_cross" || key == "m") {
        variation.m_cross = config_int<unsigned>(key, value);
    } else if (key == "multi_gene_mode") {
        variation.multi_gene_mode = parse_search_mode(value);
    } else if (key == "write_back") {
        knapsack_write_back = config_bool(key, value);
    } else if (key == "qea_delta_theta") {
        qea_delta_theta = config_real(key, value);
    } else {
        throw ConfigError("unknown configuration key '" + std::string(key) + "'");
    }
}

unsigned round_half_up(double v)
{
    return static_cast<unsigned>(std::floor(v + 0.5));
}

ExperimentConfig ExperimentConfig::resolved() const
{
    ExperimentConfig out = *this;
    if (is_knapsack()) {
        out.variation.m1 = m1.value_or(45);
        out.variation.m2 = m2.value_or(15);
        out.variation.kappa = kappa.value_or(1);
    } else {
        const double d = static_cast<double>(dimension);
        out.variation.m1 = m1.value_or(round_half_up(1.5 * d));
        out.variation.m2 = m2.value_or(round_half_up(0.5 * d));
        out.variation.kappa = kappa.value_or(5);
    }
    out.m1 = out.variation.m1;
    out.m2 = out.variation.m2;
    out.kappa = out.variation.kappa;
    return out;
}

void ExperimentConfig::validate() const
{
    if (runs < 1)
        throw ConfigError("runs must be >= 1");
    if (t_max < 1)
        throw ConfigError("t_max must be >= 1");
    if (threads < 1)
        throw ConfigError("threads must be >= 1");
    if (is_knapsack()) {
        if (instance_path.empty() && items < 1)
            throw ConfigError("knapsack needs an instance file or items >= 1");
    } else {
        try {
            parse_benchmark(problem);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        if (dimension < 1)
            throw ConfigError("dimension must be >= 1");
        if (algorithm == Algorithm::Qea)
            throw ConfigError("the qea baseline only runs the knapsack problem");
    }
    if (algorithm == Algorithm::Hrcqea) {
        if (population < 2)
            throw ConfigError("hrcqea needs a population of at least 2");
        variation.validate();
    } else if (population < 1) {
        throw ConfigError("population must be >= 1");
    }
}

void load_config_file(const std::filesystem::path& path, ExperimentConfig& config)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path.string() + "'");
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto text = detail::trim(line);
        if (text.empty() || text.front() == '#')
            continue;
        const auto eq = text.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": expected 'key = value'");
        try {
            config.set(text.substr(0, eq), text.substr(eq + 1));
        } catch (const ConfigError& e) {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
}

std::unique_ptr<Problem> make_problem(const ExperimentConfig& config)
{
    if (!config.is_knapsack()) {
        try {
            return std::make_unique<BenchmarkProblem>(parse_benchmark(config.problem), config.dimension);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    KnapsackInstance inst;
    if (!config.instance_path.empty()) {
        inst = load_instance(config.instance_path);
    } else {
        Rng rng(config.seed);
        inst = generate_instance(config.items, rng);
        if (!config.out_dir.empty())
            save_instance(inst, config.out_dir / ("instance_n" + std::to_string(config.items) + "_s" +
                                                  std::to_string(config.seed) + ".txt"));
    }
    return std::make_unique<KnapsackProblem>(std::move(inst), config.knapsack_write_back);
}

namespace {

double mean_fitness(const Swarm& swarm)
{
    double sum = 0.0;
    for (const auto& p : swarm.particles)
        sum += p.fitness;
    return sum / static_cast<double>(swarm.size());
}

TraceRow trace_row(const Swarm& swarm)
{
    return {swarm.generation, swarm.global_best.fitness, mean_fitness(swarm),
            average_rotation_angle(swarm.global_best)};
}

} // namespace

HrcqeaResult run_hrcqea(const Problem& problem, const ExperimentConfig& config, std::uint64_t seed)
{
    const ExperimentConfig cfg = config.resolved();
    if (cfg.population < 2)
        throw ConfigError("hrcqea needs a population of at least 2");
    if (cfg.t_max < 1)
        throw ConfigError("t_max must be >= 1");
    cfg.variation.validate();

    const VariationParams& params = cfg.variation;
    const Sense sense = problem.sense();
    Rng rng(seed);
    EvalCounter counter;

    Swarm swarm = new_swarm(problem, cfg.population, rng, &counter.evaluations);
    HrcqeaResult result;
    result.record.rows.reserve(cfg.t_max + 1);
    result.record.rows.push_back(trace_row(swarm));

    for (std::size_t t = 1; t <= cfg.t_max; ++t) {
        swarm.generation = t;
        for (std::size_t j = 0; j < swarm.size(); ++j) {
            auto& p = swarm.particles[j];
            const auto& pbest = swarm.personal_bests[j];
            for (unsigned k = 0; k < params.m1; ++k)
                smm_single_gene(p, pbest, swarm.global_best, problem, SearchMode::Fine, params, rng, &counter);
            for (unsigned k = 0; k < params.m2; ++k)
                smm_single_gene(p, pbest, swarm.global_best, problem, SearchMode::Coarse, params, rng, &counter);
            // Later particles in the same generation read the updated bests.
            refresh_bests(swarm, sense);
        }
        if (t % params.kappa == 0) {
            for (std::size_t j = 0; j < swarm.size(); ++j) {
                auto& p = swarm.particles[j];
                if (multi_gene_triggered(p, sense))
                    smm_multi_gene(p, swarm.personal_bests[j], swarm.global_best, problem, params, rng, t, cfg.t_max,
                                   &counter);
            }
        }
        if (t % params.tau == 0) {
            crossover_round(swarm, problem, params, rng, &counter);
            refresh_bests(swarm, sense);
        }
        refresh_bests(swarm, sense);
        result.record.rows.push_back(trace_row(swarm));
    }
    result.global_best = swarm.global_best;
    result.evaluations = counter.evaluations;
    return result;
}

RunOutcome run_once(const Problem& problem, const ExperimentConfig& config, std::uint64_t seed)
{
    RunOutcome out;
    if (config.algorithm == Algorithm::Hrcqea) {
        auto r = run_hrcqea(problem, config, seed);
        out.final_best = r.global_best.fitness;
        out.best_position = r.global_best.position();
        out.record = std::move(r.record);
        out.evaluations = r.evaluations;
        return out;
    }
    const auto* knapsack = dynamic_cast<const KnapsackProblem*>(&problem);
    if (!knapsack)
        throw ConfigError("the qea baseline only runs the knapsack problem");
    Rng rng(seed);
    auto r = run_qea_knapsack(knapsack->instance(), config.population, config.t_max, rng,
                              QgateTable::han_kim(config.qea_delta_theta));
    out.final_best = r.best_profit;
    out.best_position.assign(r.best_bits.begin(), r.best_bits.end());
    out.record = std::move(r.record);
    out.evaluations = r.evaluations;
    return out;
}

SummaryStats summarize_finals(const std::vector<double>& finals, Sense sense)
{
    if (finals.empty())
        throw std::invalid_argument("summarize_finals: no values");
    SummaryStats s;
    s.best = finals.front();
    s.worst = finals.front();
    double sum = 0.0;
    for (double v : finals) {
        if (is_better(v, s.best, sense))
            s.best = v;
        if (is_better(s.worst, v, sense))
            s.worst = v;
        sum += v;
    }
    const double n = static_cast<double>(finals.size());
    s.mean = sum / n;
    double ss = 0.0;
    for (double v : finals)
        ss += (v - s.mean) * (v - s.mean);
    s.sigma = std::sqrt(ss / n);
    return s;
}

std::string trace_file_name(const std::string& problem, std::size_t dimension, Algorithm algorithm)
{
    return "trace_" + problem + "_d" + std::to_string(dimension) + "_" + to_string(algorithm) + ".csv";
}

namespace {

void prepare_output_dir(const std::filesystem::path& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir))
        throw IoError("cannot create output directory '" + dir.string() + "'");
    const auto probe = dir / ".write_probe";
    {
        std::ofstream out(probe);
        if (!out)
            throw IoError("output directory '" + dir.string() + "' is not writable");
    }
    std::filesystem::remove(probe, ec);
}

std::vector<RunOutcome> execute_runs(const Problem& problem, const ExperimentConfig& cfg, const RunFunction& run)
{
    std::vector<RunOutcome> outcomes(cfg.runs);
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(cfg.threads, cfg.runs));
    if (workers <= 1) {
        for (std::size_t r = 0; r < cfg.runs; ++r)
            outcomes[r] = run(problem, cfg, cfg.seed + r);
        return outcomes;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t r = next++; r < cfg.runs; r = next++) {
                    try {
                        outcomes[r] = run(problem, cfg, cfg.seed + r);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure)
                            failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return outcomes;
}

} // namespace

ExperimentResult run_experiment(const ExperimentConfig& config, const RunFunction& run)
{
    const ExperimentConfig cfg = config.resolved();
    cfg.validate();
    if (!cfg.out_dir.empty())
        prepare_output_dir(cfg.out_dir);

    const auto problem = make_problem(cfg);
    const RunFunction runner = run ? run : RunFunction(run_once);
    auto outcomes = execute_runs(*problem, cfg, runner);

    ExperimentResult result;
    for (auto& o : outcomes) {
        result.finals.push_back(o.final_best);
        result.evaluations += o.evaluations;
        result.records.push_back(std::move(o.record));
    }
    result.summary.problem = problem->name();
    result.summary.algorithm = to_string(cfg.algorithm);
    result.summary.dimension = problem->dimension();
    result.summary.runs = cfg.runs;
    result.summary.stats = summarize_finals(result.finals, problem->sense());

    if (!cfg.out_dir.empty()) {
        result.trace_path = cfg.out_dir / trace_file_name(problem->name(), problem->dimension(), cfg.algorithm);
        write_trace_csv(result.trace_path, result.records, problem->sense());
        result.summary_path = cfg.out_dir / "summary.csv";
        std::vector<SummaryRow> rows;
        if (std::filesystem::exists(result.summary_path))
            rows = read_summary_csv(result.summary_path);
        merge_summary_row(rows, result.summary);
        write_summary_csv(result.summary_path, rows);
    }
    return result;
}

std::vector<SummaryRow> summarize_directory(const std::filesystem::path& dir)
{
    if (!std::filesystem::is_directory(dir))
        throw IoError("'" + dir.string() + "' is not a directory");

    std::vector<std::filesystem::path> traces;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        const auto name = entry.path().filename().string();
        if (entry.is_regular_file() && name.starts_with("trace_") && name.ends_with(".csv"))
            traces.push_back(entry.path());
    }
    std::sort(traces.begin(), traces.end());

    std::vector<SummaryRow> rows;
    for (const auto& path : traces) {
        auto stem = path.stem().string().substr(std::string("trace_").size());
        auto parts = detail::split(stem, '_');
        if (parts.size() != 3 || parts[1].size() < 2 || parts[1].front() != 'd')
            throw ParseError(path.string(), 0, "trace file name is not trace_<problem>_d<dim>_<algo>.csv");
        auto dim = detail::parse_int<std::size_t>(parts[1].substr(1));
        if (!dim)
            throw ParseError(path.string(), 0, "bad dimension in file name");
        const std::string problem(parts[0]);
        const Algorithm algorithm = parse_algorithm(parts[2]);
        Sense sense = Sense::Maximize;
        if (problem != "knapsack") {
            parse_benchmark(problem);
            sense = Sense::Minimize;
        }

        auto records = read_trace_csv(path);
        if (records.empty())
            throw ParseError(path.string(), 0, "no trace rows");
        std::vector<double> finals;
        for (const auto& rec : records) {
            if (rec.rows.empty())
                throw ParseError(path.string(), 0, "empty run");
            finals.push_back(rec.rows.back().best_fitness);
        }
        SummaryRow row{problem, to_string(algorithm), *dim, records.size(), summarize_finals(finals, sense)};
        merge_summary_row(rows, row);
    }
    write_summary_csv(dir / "summary.csv", rows);
    return rows;
}

} // namespace hrcqea
