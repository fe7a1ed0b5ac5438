#pragma once

#include <cstddef>
#include <span>

#include "hrcqea/core.hpp"
#include "hrcqea/problem.hpp"

namespace hrcqea {

/// Hill-climbing acceptance: the child replaces the parent only on strict
/// improvement. Ties keep the parent.
constexpr bool hcs_accept(double parent_fitness, double child_fitness, Sense sense)
{
    return is_better(child_fitness, parent_fitness, sense);
}

/// Index of the best chromosome; the first one wins ties.
std::size_t best_index(std::span<const TriploidChromosome> population, Sense sense);

/// Elitist archive maintenance. Each personal best is replaced by a copy of
/// its particle on strict improvement, then the global best by the best
/// personal best on strict improvement. Returns true if anything changed.
bool refresh_bests(Swarm& swarm, Sense sense);

} // namespace hrcqea
