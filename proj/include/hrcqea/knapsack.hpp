#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "hrcqea/core.hpp"
#include "hrcqea/problem.hpp"
#include "hrcqea/random.hpp"

namespace hrcqea {

struct KnapsackInstance {
    std::vector<double> weights;
    std::vector<double> profits;
    double capacity = 0.0;

    std::size_t size() const { return weights.size(); }

    /// Throws std::invalid_argument unless n >= 1, all weights and profits are
    /// positive, and 0 < capacity < total weight.
    void validate() const;

    bool operator==(const KnapsackInstance&) const = default;
};

using Bits = std::vector<std::uint8_t>;

/// Sum of selected weights, accumulated in index order. This is the
/// reference feasibility measure everywhere in the library.
double total_weight(const Bits& z, const KnapsackInstance& inst);
double total_profit(const Bits& z, const KnapsackInstance& inst);
bool is_feasible(const Bits& z, const KnapsackInstance& inst);

/// Threshold decoding: bit i is set iff x_i >= 0.5.
Bits make_binary(std::span<const double> x);
Bits make_binary(const TriploidChromosome& p);

/// Random repair: drops uniformly chosen selected items while overweight,
/// then scans the unselected items once in random order and adds each one
/// that still fits. The result is always feasible.
void repair(Bits& z, const KnapsackInstance& inst, UniformSource& rng);

/// Decode, repair and score a particle. With `write_back` the repaired bits
/// replace the particle's real variables (1 -> 1.0, 0 -> 0.0).
double knapsack_fitness(TriploidChromosome& p, const KnapsackInstance& inst, UniformSource& rng,
                        bool write_back = true);

/// Weights uniform on [1, 10], profits weight + 5, capacity half the total
/// weight. Weights are snapped to a 2^-32 grid so profit - weight is exactly 5.
KnapsackInstance generate_instance(std::size_t n, UniformSource& rng);

/// Text format:
///   n <count>
///   capacity <real>
///   <weight> <profit>     (count lines)
/// Lines starting with '#' and blank lines are ignored.
KnapsackInstance load_instance(const std::filesystem::path& path);
void save_instance(const KnapsackInstance& inst, const std::filesystem::path& path);

class KnapsackProblem final : public Problem {
public:
    explicit KnapsackProblem(KnapsackInstance inst, bool write_back = true);

    std::string name() const override { return "knapsack"; }
    std::size_t dimension() const override { return inst_.size(); }
    Bounds bounds(std::size_t) const override { return {0.0, 1.0}; }
    Sense sense() const override { return Sense::Maximize; }
    double evaluate(std::span<double> x, UniformSource& rng) const override;

    const KnapsackInstance& instance() const { return inst_; }
    bool write_back() const { return write_back_; }

private:
    KnapsackInstance inst_;
    bool write_back_;
};

} // namespace hrcqea
