#include "hrcqea/benchmarks.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hrcqea {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

double sphere(std::span<const double> x)
{
    double sum = 0.0;
    for (double xi : x)
        sum += xi * xi;
    return sum;
}

double rastrigin(std::span<const double> x)
{
    double sum = 10.0 * static_cast<double>(x.size());
    for (double xi : x)
        sum += xi * xi - 10.0 * std::cos(two_pi * xi);
    return sum;
}

double ackley(std::span<const double> x)
{
    if (x.empty())
        return 0.0;
    const double d = static_cast<double>(x.size());
    double squares = 0.0;
    double cosines = 0.0;
    for (double xi : x) {
        squares += xi * xi;
        cosines += std::cos(two_pi * xi);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(squares / d)) - std::exp(cosines / d) + 20.0 + std::numbers::e;
}

double schwefel(std::span<const double> x)
{
    double sum = 418.9829 * static_cast<double>(x.size());
    for (double xi : x)
        sum -= xi * std::sin(std::sqrt(std::abs(xi)));
    return sum;
}

double griewank(std::span<const double> x)
{
    double squares = 0.0;
    double product = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        squares += x[i] * x[i];
        product *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return squares / 4000.0 - product + 1.0;
}

std::string to_string(Benchmark b)
{
    switch (b) {
    case Benchmark::Sphere: return "sphere";
    case Benchmark::Rastrigin: return "rastrigin";
    case Benchmark::Ackley: return "ackley";
    case Benchmark::Schwefel: return "schwefel";
    case Benchmark::Griewank: return "griewank";
    }
    return "unknown";
}

Benchmark parse_benchmark(std::string_view name)
{
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "sphere" || lower == "f1") return Benchmark::Sphere;
    if (lower == "rastrigin" || lower == "f2") return Benchmark::Rastrigin;
    if (lower == "ackley" || lower == "f3") return Benchmark::Ackley;
    if (lower == "schwefel" || lower == "f4") return Benchmark::Schwefel;
    if (lower == "griewank" || lower == "f5") return Benchmark::Griewank;
    throw std::invalid_argument("unknown benchmark '" + std::string(name) + "'");
}

double benchmark_half_width(Benchmark b)
{
    switch (b) {
    case Benchmark::Sphere: return 100.0;
    case Benchmark::Rastrigin: return 5.12;
    case Benchmark::Ackley: return 32.0;
    case Benchmark::Schwefel: return 500.0;
    case Benchmark::Griewank: return 600.0;
    }
    return 0.0;
}

double benchmark_optimum_coordinate(Benchmark b)
{
    return b == Benchmark::Schwefel ? 420.9687 : 0.0;
}

BenchmarkProblem::BenchmarkProblem(Benchmark kind, std::size_t dimension)
    : kind_(kind), dimension_(dimension), half_width_(benchmark_half_width(kind))
{
    if (dimension == 0)
        throw std::invalid_argument("benchmark dimension must be at least 1");
}

double BenchmarkProblem::evaluate(std::span<double> x, UniformSource&) const
{
    std::span<const double> cx(x.data(), x.size());
    switch (kind_) {
    case Benchmark::Sphere: return sphere(cx);
    case Benchmark::Rastrigin: return rastrigin(cx);
    case Benchmark::Ackley: return ackley(cx);
    case Benchmark::Schwefel: return schwefel(cx);
    case Benchmark::Griewank: return griewank(cx);
    }
    return 0.0;
}

} // namespace hrcqea
