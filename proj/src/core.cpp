#include "hrcqea/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hrcqea/selection.hpp"

namespace hrcqea {

std::vector<double> TriploidChromosome::position() const
{
    std::vector<double> x(alleles.size());
    std::transform(alleles.begin(), alleles.end(), x.begin(), [](const Allele& a) { return a.x; });
    return x;
}

void TriploidChromosome::set_position(const std::vector<double>& x)
{
    if (x.size() != alleles.size())
        throw std::invalid_argument("set_position: dimension mismatch");
    for (std::size_t i = 0; i < x.size(); ++i)
        alleles[i].x = x[i];
    dirty = true;
}

void TriploidChromosome::refresh_fitness(const Problem& problem, UniformSource& rng, std::size_t* evaluations)
{
    if (!dirty)
        return;
    auto x = position();
    fitness = problem.evaluate(x, rng);
    for (std::size_t i = 0; i < x.size(); ++i)
        alleles[i].x = x[i];
    dirty = false;
    if (evaluations)
        ++*evaluations;
}

Swarm new_swarm(const Problem& problem, std::size_t population_size, UniformSource& rng,
                std::size_t* evaluations)
{
    if (population_size < 2)
        throw std::invalid_argument("new_swarm: population size must be at least 2");
    const std::size_t n = problem.dimension();
    if (n == 0)
        throw std::invalid_argument("new_swarm: problem dimension must be at least 1");

    const double amplitude = 1.0 / std::numbers::sqrt2;

    Swarm swarm;
    swarm.particles.resize(population_size);
    for (auto& p : swarm.particles) {
        p.alleles.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Bounds b = problem.bounds(i);
            p.alleles[i].x = b.lower + rng.uniform() * b.width();
            p.alleles[i].alpha = amplitude;
            p.alleles[i].beta = amplitude;
        }
        p.dirty = true;
        p.refresh_fitness(problem, rng, evaluations);
    }
    swarm.personal_bests = swarm.particles;
    swarm.global_best = swarm.particles[best_index(swarm.particles, problem.sense())];
    return swarm;
}

double average_rotation_angle(const TriploidChromosome& p)
{
    if (p.alleles.empty())
        return 0.0;
    double sum = 0.0;
    for (const auto& a : p.alleles)
        sum += a.theta_last;
    return sum / static_cast<double>(p.alleles.size());
}

double normalization_error(const TriploidChromosome& p)
{
    double worst = 0.0;
    for (const auto& a : p.alleles)
        worst = std::max(worst, std::abs(a.alpha * a.alpha + a.beta * a.beta - 1.0));
    return worst;
}

} // namespace hrcqea
