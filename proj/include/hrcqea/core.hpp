#pragma once

#include <cstddef>
#include <vector>

#include "hrcqea/problem.hpp"
#include "hrcqea/random.hpp"

namespace hrcqea {

/// One gene of a triploid chromosome: a real variable together with the
/// amplitude pair of its qubit and the bookkeeping used by the mutation.
struct Allele {
    double x = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double theta_last = 0.0;   // last applied rotation angle (radians)
    unsigned invalid_count = 0; // consecutive invalid evolutions

    bool operator==(const Allele&) const = default;
};

/// A particle. The x row is the position handed to the objective.
struct TriploidChromosome {
    std::vector<Allele> alleles;
    double fitness = 0.0;
    bool dirty = true;

    std::size_t size() const { return alleles.size(); }
    std::vector<double> position() const;
    void set_position(const std::vector<double>& x);

    /// Re-evaluates the objective if the cached fitness is stale. Counts the
    /// evaluation in `evaluations` when non-null.
    void refresh_fitness(const Problem& problem, UniformSource& rng, std::size_t* evaluations = nullptr);

    bool operator==(const TriploidChromosome&) const = default;
};

struct Swarm {
    std::vector<TriploidChromosome> particles;
    std::vector<TriploidChromosome> personal_bests;
    TriploidChromosome global_best;
    std::size_t generation = 0;

    std::size_t size() const { return particles.size(); }
};

/// Uniform positions in the box, amplitudes at 1/sqrt(2), fitness evaluated,
/// archives seeded from the initial particles. Throws std::invalid_argument
/// when population_size < 2 or the problem has no dimensions.
Swarm new_swarm(const Problem& problem, std::size_t population_size, UniformSource& rng,
                std::size_t* evaluations = nullptr);

double average_rotation_angle(const TriploidChromosome& p);

/// Largest deviation of |alpha|^2 + |beta|^2 from 1 over all alleles.
double normalization_error(const TriploidChromosome& p);

} // namespace hrcqea
