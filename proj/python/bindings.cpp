#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <map>
#include <string>

#include "hrcqea/baseline_qea.hpp"
#include "hrcqea/benchmarks.hpp"
#include "hrcqea/errors.hpp"
#include "hrcqea/harness.hpp"
#include "hrcqea/knapsack.hpp"
#include "hrcqea/variation.hpp"

namespace py = pybind11;
using namespace hrcqea;

namespace {

ExperimentConfig config_from(const std::map<std::string, std::string>& settings)
{
    ExperimentConfig c;
    for (const auto& [key, value] : settings)
        c.set(key, value);
    return c;
}

py::list trace_rows(const RunRecord& record)
{
    py::list rows;
    for (const auto& r : record.rows)
        rows.append(py::make_tuple(r.generation, r.best_fitness, r.mean_fitness, r.avg_rotation_angle));
    return rows;
}

py::dict summary_dict(const SummaryRow& row)
{
    py::dict d;
    d["problem"] = row.problem;
    d["algorithm"] = row.algorithm;
    d["dimension"] = row.dimension;
    d["runs"] = row.runs;
    d["best"] = row.stats.best;
    d["worst"] = row.stats.worst;
    d["mean"] = row.stats.mean;
    d["sigma"] = row.stats.sigma;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Hybrid real-coded quantum evolutionary algorithm";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::enum_<Sense>(m, "Sense").value("MINIMIZE", Sense::Minimize).value("MAXIMIZE", Sense::Maximize);

    m.def("sphere", [](const std::vector<double>& x) { return sphere(x); }, py::arg("x"));
    m.def("rastrigin", [](const std::vector<double>& x) { return rastrigin(x); }, py::arg("x"));
    m.def("ackley", [](const std::vector<double>& x) { return ackley(x); }, py::arg("x"));
    m.def("schwefel", [](const std::vector<double>& x) { return schwefel(x); }, py::arg("x"));
    m.def("griewank", [](const std::vector<double>& x) { return griewank(x); }, py::arg("x"));

    m.def("clip_to_bounds", [](double x, double lo, double hi) { return clip_to_bounds(x, {lo, hi}); },
          py::arg("x"), py::arg("lower"), py::arg("upper"));
    m.def(
        "rotation_angle",
        [](double x, double pbest, double gbest, double c1, double c2) {
            VariationParams p;
            p.c1 = c1;
            p.c2 = c2;
            return rotation_angle(x, pbest, gbest, p);
        },
        py::arg("x"), py::arg("pbest"), py::arg("gbest"), py::arg("c1") = VariationParams{}.c1,
        py::arg("c2") = VariationParams{}.c2);
    m.def(
        "qrg_rotate",
        [](double alpha, double beta, double theta) {
            const auto a = qrg_rotate(alpha, beta, theta);
            return py::make_tuple(a.alpha, a.beta);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("theta"));
    m.def(
        "amplitude_escape",
        [](double alpha, double beta, unsigned count, Sense sense) {
            const auto a = amplitude_escape(alpha, beta, count, sense);
            return py::make_tuple(a.alpha, a.beta);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("invalid_count"), py::arg("sense"));
    m.def("gene_count_schedule", &gene_count_schedule, py::arg("n"), py::arg("t"), py::arg("t_max"));

    py::class_<KnapsackInstance>(m, "KnapsackInstance")
        .def(py::init([](std::vector<double> w, std::vector<double> p, double c) {
                 KnapsackInstance inst{std::move(w), std::move(p), c};
                 inst.validate();
                 return inst;
             }),
             py::arg("weights"), py::arg("profits"), py::arg("capacity"))
        .def_readonly("weights", &KnapsackInstance::weights)
        .def_readonly("profits", &KnapsackInstance::profits)
        .def_readonly("capacity", &KnapsackInstance::capacity)
        .def("__len__", &KnapsackInstance::size)
        .def(py::self == py::self);

    m.def(
        "generate_instance",
        [](std::size_t n, std::uint64_t seed) {
            Rng rng(seed);
            return generate_instance(n, rng);
        },
        py::arg("items"), py::arg("seed"));
    m.def("load_instance", &load_instance, py::arg("path"));
    m.def("save_instance", &save_instance, py::arg("instance"), py::arg("path"));
    m.def(
        "repair",
        [](Bits z, const KnapsackInstance& inst, std::uint64_t seed) {
            Rng rng(seed);
            repair(z, inst, rng);
            return z;
        },
        py::arg("bits"), py::arg("instance"), py::arg("seed"));
    m.def("total_profit", &total_profit, py::arg("bits"), py::arg("instance"));
    m.def("is_feasible", &is_feasible, py::arg("bits"), py::arg("instance"));

    m.def(
        "run_qea_knapsack",
        [](const KnapsackInstance& inst, std::size_t population, std::size_t t_max, std::uint64_t seed) {
            Rng rng(seed);
            const auto r = run_qea_knapsack(inst, population, t_max, rng);
            py::dict d;
            d["best_profit"] = r.best_profit;
            d["best_bits"] = r.best_bits;
            d["evaluations"] = r.evaluations;
            d["trace"] = trace_rows(r.record);
            return d;
        },
        py::arg("instance"), py::arg("population"), py::arg("t_max"), py::arg("seed"));

    m.def(
        "run_hrcqea",
        [](const std::map<std::string, std::string>& settings, std::uint64_t seed) {
            const ExperimentConfig c = config_from(settings).resolved();
            c.validate();
            const auto problem = make_problem(c);
            const auto r = run_hrcqea(*problem, c, seed);
            py::dict d;
            d["best_fitness"] = r.global_best.fitness;
            d["best_position"] = r.global_best.position();
            d["evaluations"] = r.evaluations;
            d["trace"] = trace_rows(r.record);
            return d;
        },
        py::arg("settings"), py::arg("seed"),
        "One HRCQEA run. `settings` holds configuration keys as strings, e.g. {'problem': 'sphere', 'dim': '10'}.");

    m.def(
        "run_experiment",
        [](const std::map<std::string, std::string>& settings) {
            const auto r = run_experiment(config_from(settings));
            py::dict d;
            d["summary"] = summary_dict(r.summary);
            d["finals"] = r.finals;
            d["evaluations"] = r.evaluations;
            d["trace_path"] = r.trace_path.string();
            d["summary_path"] = r.summary_path.string();
            return d;
        },
        py::arg("settings"), "Multi-run experiment; writes CSV files when 'out' is set.");

    m.def(
        "summarize_directory",
        [](const std::filesystem::path& dir) {
            py::list rows;
            for (const auto& row : summarize_directory(dir))
                rows.append(summary_dict(row));
            return rows;
        },
        py::arg("directory"));
}
