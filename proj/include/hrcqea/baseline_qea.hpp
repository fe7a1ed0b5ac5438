#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hrcqea/knapsack.hpp"
#include "hrcqea/random.hpp"
#include "hrcqea/trace.hpp"
#include "hrcqea/variation.hpp"

namespace hrcqea {

/// Binary QEA for the 0-1 knapsack: one qubit per item.
using QubitString = std::vector<Amplitudes>;

/// All qubits in the uniform superposition (1/sqrt2, 1/sqrt2).
QubitString uniform_qubit_string(std::size_t n);

/// Collapses each qubit independently; bit i is 1 with probability beta_i^2.
Bits observe(const QubitString& q, UniformSource& rng);

/// Rotation magnitudes indexed by (observed bit, best bit, observed >= best).
/// The sign is chosen per qubit quadrant so the rotation moves the qubit
/// towards the best bit.
struct QgateTable {
    std::array<double, 8> magnitude{};

    double& at(bool observed, bool best, bool observed_not_worse)
    {
        return magnitude[(observed ? 4 : 0) + (best ? 2 : 0) + (observed_not_worse ? 1 : 0)];
    }
    double at(bool observed, bool best, bool observed_not_worse) const
    {
        return magnitude[(observed ? 4 : 0) + (best ? 2 : 0) + (observed_not_worse ? 1 : 0)];
    }

    /// 0.01*pi whenever the bits disagree and the stored best is fitter, 0 otherwise.
    static QgateTable han_kim(double delta_theta = 0.01 * 3.14159265358979323846);
};

/// Signed rotation angle for one qubit.
double qgate_angle(Amplitudes q, bool observed, bool best, bool observed_not_worse, const QgateTable& table);

/// Rotates every qubit of `q` with its table angle. Returns the mean applied
/// angle over the string.
double qgate_update(QubitString& q, const Bits& observed, const Bits& best, bool observed_not_worse,
                    const QgateTable& table);

struct QeaResult {
    double best_profit = 0.0;
    Bits best_bits;
    RunRecord record;
    std::size_t evaluations = 0;
    std::vector<QubitString> final_population;
};

/// Observe, repair, evaluate, archive per-individual bests, rotate each
/// qubit string towards its own best. Trace has t_max + 1 rows.
QeaResult run_qea_knapsack(const KnapsackInstance& inst, std::size_t population_size, std::size_t t_max,
                           UniformSource& rng, const QgateTable& table = QgateTable::han_kim());

} // namespace hrcqea
