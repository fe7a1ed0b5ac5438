#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's algorithm code paths.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace oracle {

/// Best profit over all 2^n subsets whose weight fits.
inline double knapsack_optimum(const std::vector<double>& weights, const std::vector<double>& profits,
                               double capacity)
{
    const std::size_t n = weights.size();
    double best = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        double w = 0.0;
        double p = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                w += weights[i];
                p += profits[i];
            }
        }
        if (w <= capacity && p > best)
            best = p;
    }
    return best;
}

/// Multi-gene count evaluated literally in floating point.
inline std::size_t gene_count(std::size_t n, std::size_t t, std::size_t t_max)
{
    return static_cast<std::size_t>(
        std::ceil((static_cast<double>(n) / 4.0) * (1.0 - static_cast<double>(t) / static_cast<double>(t_max + 1))));
}

/// Repeated mirror reflection, no shortcuts.
inline double reflect(double x, double lo, double hi)
{
    while (x < lo || x > hi)
        x = x > hi ? 2.0 * hi - x : 2.0 * lo - x;
    return x;
}

} // namespace oracle
