#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "hrcqea/random.hpp"

namespace hrcqea {

enum class Sense { Minimize, Maximize };

/// True iff `candidate` is strictly better than `reference` under `sense`.
constexpr bool is_better(double candidate, double reference, Sense sense)
{
    return sense == Sense::Minimize ? candidate < reference : candidate > reference;
}

struct Bounds {
    double lower = 0.0;
    double upper = 1.0;

    double width() const { return upper - lower; }
    bool contains(double x) const { return x >= lower && x <= upper; }
};

/// Objective over a bounded box.
///
/// `evaluate` receives the position by mutable span: decoders such as the
/// knapsack repair may write the evaluated solution back into it. Plain
/// benchmark functions leave it untouched and ignore the generator.
class Problem {
public:
    virtual ~Problem() = default;

    virtual std::string name() const = 0;
    virtual std::size_t dimension() const = 0;
    virtual Bounds bounds(std::size_t i) const = 0;
    virtual Sense sense() const = 0;
    virtual double evaluate(std::span<double> x, UniformSource& rng) const = 0;
};

} // namespace hrcqea
