#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "hrcqea/problem.hpp"

namespace hrcqea {

// Classic minimization test functions. All have global minimum 0.
double sphere(std::span<const double> x);
double rastrigin(std::span<const double> x);
double ackley(std::span<const double> x);
double schwefel(std::span<const double> x);
double griewank(std::span<const double> x);

enum class Benchmark { Sphere, Rastrigin, Ackley, Schwefel, Griewank };

std::string to_string(Benchmark b);
/// Accepts "sphere", "rastrigin", "ackley", "schwefel", "griewank" and the
/// short aliases "f1".."f5". Throws std::invalid_argument otherwise.
Benchmark parse_benchmark(std::string_view name);
/// Symmetric search box half-width, e.g. 100 for Sphere.
double benchmark_half_width(Benchmark b);
/// Coordinate of the global optimum (same in every dimension).
double benchmark_optimum_coordinate(Benchmark b);

class BenchmarkProblem final : public Problem {
public:
    BenchmarkProblem(Benchmark kind, std::size_t dimension);

    std::string name() const override { return to_string(kind_); }
    std::size_t dimension() const override { return dimension_; }
    Bounds bounds(std::size_t) const override { return {-half_width_, half_width_}; }
    Sense sense() const override { return Sense::Minimize; }
    double evaluate(std::span<double> x, UniformSource& rng) const override;

    Benchmark kind() const { return kind_; }

private:
    Benchmark kind_;
    std::size_t dimension_;
    double half_width_;
};

} // namespace hrcqea
