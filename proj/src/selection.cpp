#include "hrcqea/selection.hpp"

#include <stdexcept>

namespace hrcqea {

std::size_t best_index(std::span<const TriploidChromosome> population, Sense sense)
{
    if (population.empty())
        throw std::invalid_argument("best_index: empty population");
    std::size_t best = 0;
    for (std::size_t j = 1; j < population.size(); ++j)
        if (is_better(population[j].fitness, population[best].fitness, sense))
            best = j;
    return best;
}

bool refresh_bests(Swarm& swarm, Sense sense)
{
    if (swarm.personal_bests.size() != swarm.particles.size())
        throw std::invalid_argument("refresh_bests: archive size mismatch");

    bool changed = false;
    for (std::size_t j = 0; j < swarm.particles.size(); ++j) {
        if (hcs_accept(swarm.personal_bests[j].fitness, swarm.particles[j].fitness, sense)) {
            swarm.personal_bests[j] = swarm.particles[j];
            changed = true;
        }
    }
    const auto& candidate = swarm.personal_bests[best_index(swarm.personal_bests, sense)];
    if (hcs_accept(swarm.global_best.fitness, candidate.fitness, sense)) {
        swarm.global_best = candidate;
        changed = true;
    }
    return changed;
}

} // namespace hrcqea
