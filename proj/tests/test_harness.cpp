#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "hrcqea/benchmarks.hpp"
#include "hrcqea/csv.hpp"
#include "hrcqea/errors.hpp"
#include "hrcqea/harness.hpp"
#include "hrcqea/knapsack.hpp"

using namespace hrcqea;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "hrcqea_test_harness" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ExperimentConfig small_sphere()
{
    ExperimentConfig c;
    c.problem = "sphere";
    c.dimension = 2;
    c.population = 4;
    c.t_max = 50;
    c.runs = 2;
    c.seed = 11;
    return c;
}

RunFunction stub(std::vector<double> finals)
{
    return [finals](const Problem&, const ExperimentConfig& cfg, std::uint64_t seed) {
        RunOutcome o;
        o.final_best = finals.at(seed - cfg.seed);
        o.record.rows = {{0, o.final_best + 1.0, o.final_best + 2.0, 0.0}, {1, o.final_best, o.final_best, 0.5}};
        return o;
    };
}

} // namespace

TEST_CASE("summary statistics")
{
    const auto s = summarize_finals({1.0, 2.0, 3.0}, Sense::Minimize);
    CHECK(s.best == 1.0);
    CHECK(s.worst == 3.0);
    CHECK(s.mean == 2.0);
    CHECK(s.sigma == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));

    const auto m = summarize_finals({1.0, 2.0, 3.0}, Sense::Maximize);
    CHECK(m.best == 3.0);
    CHECK(m.worst == 1.0);

    const auto one = summarize_finals({4.5}, Sense::Minimize);
    CHECK(one.best == 4.5);
    CHECK(one.worst == 4.5);
    CHECK(one.mean == 4.5);
    CHECK(one.sigma == 0.0);
}

TEST_CASE("run_experiment with a stub algorithm")
{
    ExperimentConfig c = small_sphere();
    c.runs = 3;
    c.out_dir = fresh_dir("stub");
    const auto result = run_experiment(c, stub({1.0, 2.0, 3.0}));
    CHECK(result.finals == std::vector<double>{1.0, 2.0, 3.0});
    CHECK(result.summary.stats.mean == 2.0);
    CHECK(result.summary.stats.sigma == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
    CHECK(result.summary.runs == 3);
    CHECK(result.trace_path.filename() == "trace_sphere_d2_hrcqea.csv");
    CHECK(read_trace_csv(result.trace_path) == result.records);

    const auto rows = read_summary_csv(result.summary_path);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].stats.mean == 2.0);
}

TEST_CASE("runs = 1 collapses the statistics")
{
    ExperimentConfig c = small_sphere();
    c.runs = 1;
    const auto result = run_experiment(c);
    CHECK(result.summary.stats.best == result.summary.stats.worst);
    CHECK(result.summary.stats.mean == result.summary.stats.best);
    CHECK(result.summary.stats.sigma == 0.0);
}

TEST_CASE("hrcqea run contract on a small sphere")
{
    const ExperimentConfig c = small_sphere().resolved();
    BenchmarkProblem problem(Benchmark::Sphere, 2);
    const auto a = run_hrcqea(problem, c, 3);
    CHECK(a.record.rows.size() == 51);
    CHECK(a.record.rows.back().best_fitness <= a.record.rows.front().best_fitness);
    CHECK(is_monotone(a.record, Sense::Minimize));
    CHECK(a.global_best.fitness == a.record.rows.back().best_fitness);
    CHECK(a.global_best.fitness == sphere(a.global_best.position()));
    for (std::size_t t = 0; t < a.record.rows.size(); ++t)
        CHECK(a.record.rows[t].generation == t);

    const auto b = run_hrcqea(problem, c, 3);
    CHECK(a.record == b.record);
    const auto other = run_hrcqea(problem, c, 4);
    CHECK_FALSE(a.record == other.record);

    // At least N (m1 + m2) single-gene evaluations per generation.
    CHECK(a.evaluations >= 4 + 50 * 4 * (*c.m1 + *c.m2));
}

TEST_CASE("trace and summary files")
{
    ExperimentConfig c = small_sphere();
    c.out_dir = fresh_dir("files");
    const auto first = run_experiment(c);
    const auto records = read_trace_csv(first.trace_path);
    REQUIRE(records.size() == 2);
    for (const auto& r : records) {
        CHECK(r.rows.size() == c.t_max + 1);
        CHECK(is_monotone(r, Sense::Minimize));
    }
    CHECK(records == first.records);

    std::ifstream in(first.trace_path);
    std::string header;
    std::getline(in, header);
    CHECK(header == trace_csv_header);

    const std::string bytes = slurp(first.trace_path);
    run_experiment(c);
    CHECK(slurp(first.trace_path) == bytes);

    c.problem = "rastrigin";
    run_experiment(c);
    c.problem = "sphere";
    run_experiment(c);
    const auto rows = read_summary_csv(first.summary_path);
    CHECK(rows.size() == 2);
    std::set<std::string> keys;
    for (const auto& r : rows)
        keys.insert(r.problem + "/" + r.algorithm);
    CHECK(keys == std::set<std::string>{"sphere/hrcqea", "rastrigin/hrcqea"});

    std::ifstream sin(first.summary_path);
    std::getline(sin, header);
    CHECK(header == summary_csv_header);

    fs::remove(first.summary_path);
    const auto again = summarize_directory(c.out_dir);
    CHECK(again.size() == 2);
    CHECK(read_summary_csv(first.summary_path).size() == 2);
}

TEST_CASE("thread count does not change results")
{
    ExperimentConfig c = small_sphere();
    c.runs = 4;
    const auto serial = run_experiment(c);
    c.threads = 3;
    const auto parallel = run_experiment(c);
    CHECK(serial.records == parallel.records);
    CHECK(serial.finals == parallel.finals);
}

TEST_CASE("knapsack experiments share one pinned instance")
{
    ExperimentConfig c;
    c.problem = "knapsack";
    c.items = 20;
    c.population = 4;
    c.t_max = 20;
    c.runs = 2;
    c.seed = 5;
    c.out_dir = fresh_dir("knapsack");
    const auto h = run_experiment(c);
    const fs::path instance = c.out_dir / "instance_n20_s5.txt";
    REQUIRE(fs::exists(instance));

    ExperimentConfig q = c;
    q.algorithm = Algorithm::Qea;
    q.instance_path = instance.string();
    const auto b = run_experiment(q);
    CHECK(h.summary.dimension == 20);
    CHECK(b.summary.dimension == 20);
    for (const auto& r : b.records)
        CHECK(is_monotone(r, Sense::Maximize));
    CHECK(read_summary_csv(c.out_dir / "summary.csv").size() == 2);
}

TEST_CASE("configuration parsing")
{
    ExperimentConfig c;
    c.set("problem", "ackley");
    c.set("dim", "7");
    c.set("algo", "qea");
    c.set("pop", "12");
    c.set("gens", "99");
    c.set("runs", "3");
    c.set("seed", "42");
    c.set("c1", "0.5pi");
    c.set("delta", "8");
    c.set("m_cross", "4");
    CHECK(c.problem == "ackley");
    CHECK(c.dimension == 7);
    CHECK(c.algorithm == Algorithm::Qea);
    CHECK(c.population == 12);
    CHECK(c.t_max == 99);
    CHECK(c.runs == 3);
    CHECK(c.seed == 42);
    CHECK(c.variation.c1 == doctest::Approx(0.5 * 3.14159265358979323846));
    CHECK(c.variation.delta == 8);
    CHECK(c.variation.m_cross == 4);

    CHECK_THROWS_AS(c.set("colour", "red"), ConfigError);
    CHECK_THROWS_AS(c.set("dim", "-3"), ConfigError);
    CHECK_THROWS_AS(c.set("pop", "ten"), ConfigError);
    CHECK_THROWS_AS(c.set("algo", "pso"), ConfigError);
    CHECK_THROWS_AS(c.validate(), ConfigError); // qea on a benchmark

    const auto r = small_sphere();
    CHECK(*r.resolved().m1 == 3);
    CHECK(*r.resolved().m2 == 1);
    ExperimentConfig odd = small_sphere();
    odd.dimension = 5;
    CHECK(*odd.resolved().m1 == 8);
    CHECK(*odd.resolved().m2 == 3);
    ExperimentConfig k;
    k.problem = "knapsack";
    CHECK(*k.resolved().m1 == 45);
    CHECK(*k.resolved().m2 == 15);
    CHECK(*k.resolved().kappa == 1);
    CHECK(*small_sphere().resolved().kappa == 5);
}

TEST_CASE("configuration files")
{
    const fs::path dir = fresh_dir("config");
    {
        std::ofstream out(dir / "good.cfg");
        out << "# comment\nproblem = griewank\n\ndim = 4\nruns=2\n";
    }
    ExperimentConfig c;
    load_config_file(dir / "good.cfg", c);
    CHECK(c.problem == "griewank");
    CHECK(c.dimension == 4);
    CHECK(c.runs == 2);

    {
        std::ofstream out(dir / "bad.cfg");
        out << "problem = sphere\nthis line is wrong\n";
    }
    try {
        load_config_file(dir / "bad.cfg", c);
        FAIL("expected a configuration error");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find(":2:") != std::string::npos);
    }
    CHECK_THROWS_AS(load_config_file(dir / "missing.cfg", c), ConfigError);
}

TEST_CASE("invalid configurations fail before any work")
{
    bool called = false;
    RunFunction spy = [&](const Problem&, const ExperimentConfig&, std::uint64_t) {
        called = true;
        return RunOutcome{};
    };
    ExperimentConfig c = small_sphere();
    c.runs = 0;
    CHECK_THROWS_AS(run_experiment(c, spy), ConfigError);
    c = small_sphere();
    c.t_max = 0;
    CHECK_THROWS_AS(run_experiment(c, spy), ConfigError);
    c = small_sphere();
    c.population = 1;
    CHECK_THROWS_AS(run_experiment(c, spy), ConfigError);
    c = small_sphere();
    c.problem = "rosenbrock";
    CHECK_THROWS_AS(run_experiment(c, spy), ConfigError);
    c = small_sphere();
    c.variation.delta = 3;
    CHECK_THROWS_AS(run_experiment(c, spy), ConfigError);
    CHECK_FALSE(called);
}

TEST_CASE("unwritable output directory fails before any run")
{
    const fs::path dir = fresh_dir("blocked");
    {
        std::ofstream out(dir / "plain_file");
        out << "x";
    }
    bool called = false;
    RunFunction spy = [&](const Problem&, const ExperimentConfig&, std::uint64_t) {
        called = true;
        return RunOutcome{};
    };
    ExperimentConfig c = small_sphere();
    c.out_dir = dir / "plain_file" / "sub";
    CHECK_THROWS_AS(run_experiment(c, spy), IoError);
    CHECK_FALSE(called);
}

TEST_CASE("non-monotone traces are refused")
{
    RunRecord bad;
    bad.rows = {{0, 1.0, 1.0, 0.0}, {1, 2.0, 2.0, 0.0}};
    CHECK_FALSE(is_monotone(bad, Sense::Minimize));
    CHECK(is_monotone(bad, Sense::Maximize));
    const fs::path dir = fresh_dir("mono");
    CHECK_THROWS_AS(write_trace_csv(dir / "t.csv", {bad}, Sense::Minimize), std::logic_error);
}

TEST_CASE("summary csv round trip")
{
    std::vector<SummaryRow> rows;
    merge_summary_row(rows, {"sphere", "hrcqea", 30, 10, {1e-120, 3.5e-116, 2.25e-117, 1.0 / 3.0}});
    merge_summary_row(rows, {"knapsack", "qea", 100, 30, {609.9, 594.9, 598.37, 2.1}});
    merge_summary_row(rows, {"sphere", "hrcqea", 30, 11, {0.0, 0.0, 0.0, 0.0}});
    CHECK(rows.size() == 2);
    CHECK(rows[0].runs == 11);
    const fs::path dir = fresh_dir("summary");
    write_summary_csv(dir / "summary.csv", rows);
    const auto back = read_summary_csv(dir / "summary.csv");
    REQUIRE(back.size() == 2);
    CHECK(back[1].stats.mean == 598.37);
    CHECK(back[1].stats.sigma == 2.1);
    CHECK(back[0].problem == "sphere");
}
