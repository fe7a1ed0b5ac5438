#include "hrcqea/baseline_qea.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hrcqea {

QubitString uniform_qubit_string(std::size_t n)
{
    const double a = 1.0 / std::numbers::sqrt2;
    return QubitString(n, Amplitudes{a, a});
}

Bits observe(const QubitString& q, UniformSource& rng)
{
    Bits z(q.size());
    for (std::size_t i = 0; i < q.size(); ++i)
        z[i] = rng.uniform() < q[i].beta * q[i].beta ? 1 : 0;
    return z;
}

QgateTable QgateTable::han_kim(double delta_theta)
{
    QgateTable table;
    table.at(false, true, false) = delta_theta;
    table.at(true, false, false) = delta_theta;
    return table;
}

double qgate_angle(Amplitudes q, bool observed, bool best, bool observed_not_worse, const QgateTable& table)
{
    const double magnitude = table.at(observed, best, observed_not_worse);
    if (magnitude == 0.0)
        return 0.0;
    const double product = q.alpha * q.beta;
    if (best) {
        // Towards |1>: grow |beta|.
        if (q.alpha == 0.0)
            return 0.0;
        if (q.beta == 0.0)
            return magnitude;
        return product > 0.0 ? magnitude : -magnitude;
    }
    // Towards |0>: grow |alpha|.
    if (q.beta == 0.0)
        return 0.0;
    if (q.alpha == 0.0)
        return magnitude;
    return product > 0.0 ? -magnitude : magnitude;
}

double qgate_update(QubitString& q, const Bits& observed, const Bits& best, bool observed_not_worse,
                    const QgateTable& table)
{
    if (observed.size() != q.size() || best.size() != q.size())
        throw std::invalid_argument("qgate_update: length mismatch");
    if (q.empty())
        return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double theta = qgate_angle(q[i], observed[i] != 0, best[i] != 0, observed_not_worse, table);
        if (theta != 0.0)
            q[i] = qrg_rotate(q[i].alpha, q[i].beta, theta);
        sum += theta;
    }
    return sum / static_cast<double>(q.size());
}

QeaResult run_qea_knapsack(const KnapsackInstance& inst, std::size_t population_size, std::size_t t_max,
                           UniformSource& rng, const QgateTable& table)
{
    inst.validate();
    if (population_size < 1)
        throw std::invalid_argument("run_qea_knapsack: population size must be at least 1");

    const std::size_t n = inst.size();
    QeaResult result;
    std::vector<QubitString> population(population_size, uniform_qubit_string(n));
    std::vector<Bits> best_bits(population_size);
    std::vector<double> best_profit(population_size);
    std::size_t elite = 0;

    auto sample = [&](std::size_t j, Bits& z) {
        z = observe(population[j], rng);
        repair(z, inst, rng);
        ++result.evaluations;
        return total_profit(z, inst);
    };

    double mean = 0.0;
    for (std::size_t j = 0; j < population_size; ++j) {
        best_profit[j] = sample(j, best_bits[j]);
        mean += best_profit[j];
        if (best_profit[j] > best_profit[elite])
            elite = j;
    }
    result.best_profit = best_profit[elite];
    result.best_bits = best_bits[elite];
    result.record.rows.push_back({0, result.best_profit, mean / static_cast<double>(population_size), 0.0});

    Bits z;
    std::vector<double> applied(population_size);
    for (std::size_t t = 1; t <= t_max; ++t) {
        mean = 0.0;
        for (std::size_t j = 0; j < population_size; ++j) {
            const double profit = sample(j, z);
            mean += profit;
            applied[j] = qgate_update(population[j], z, best_bits[j], profit >= best_profit[j], table);
            if (profit > best_profit[j]) {
                best_profit[j] = profit;
                best_bits[j] = z;
            }
        }
        for (std::size_t j = 0; j < population_size; ++j)
            if (best_profit[j] > best_profit[elite])
                elite = j;
        if (best_profit[elite] > result.best_profit) {
            result.best_profit = best_profit[elite];
            result.best_bits = best_bits[elite];
        }
        result.record.rows.push_back(
            {t, result.best_profit, mean / static_cast<double>(population_size), applied[elite]});
    }
    result.final_population = std::move(population);
    return result;
}

} // namespace hrcqea
