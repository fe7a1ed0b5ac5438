#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "hrcqea/core.hpp"
#include "hrcqea/problem.hpp"
#include "hrcqea/random.hpp"

namespace hrcqea {

enum class SearchMode { Fine, Coarse };

std::string to_string(SearchMode mode);
/// "fine" or "coarse"; throws ConfigError otherwise.
SearchMode parse_search_mode(std::string_view name);

struct VariationParams {
    double c1 = 3.14159265358979323846; // pull towards the personal best
    double c2 = 3.14159265358979323846; // pull towards the global best
    unsigned delta = 12;                // uniform draws summed per perturbation, even
    unsigned lambda = 1;                // invalid evolutions tolerated before escape
    unsigned m1 = 45;                   // Fine searches per particle per generation
    unsigned m2 = 15;                   // Coarse searches per particle per generation
    unsigned kappa = 5;                 // multi-gene mutation period (generations)
    unsigned tau = 500;                 // crossover period (generations)
    unsigned m_cross = 10;              // crossover repetitions per particle
    SearchMode multi_gene_mode = SearchMode::Coarse; // step scale for multi-gene mutation

    /// Throws ConfigError on an unusable combination.
    void validate() const;
};

struct Amplitudes {
    double alpha;
    double beta;
};

/// Counts objective evaluations performed by the operators below.
struct EvalCounter {
    std::size_t evaluations = 0;
};

/// Step for one real variable: width * (sum of `delta` uniforms - delta/2) * xi.
double perturbation(UniformSource& rng, unsigned delta, double xi, Bounds bounds);

/// Mirror reflection at the box walls, repeated until the value is inside.
/// Far-out values are folded in closed form. Throws on non-finite input.
double clip_to_bounds(double x, Bounds bounds);

double rotation_angle(double x_current, double x_pbest, double x_gbest, const VariationParams& params);

Amplitudes qrg_rotate(double alpha, double beta, double theta);

/// Large-scale amplitude update after repeated invalid evolutions. For
/// minimization alpha shrinks by trunc(count/5) + 1 and beta is the positive
/// partner root; maximization swaps the roles.
Amplitudes amplitude_escape(double alpha, double beta, unsigned invalid_count, Sense sense);

/// Step scale xi for an allele under the given mode and problem sense.
double search_magnitude(const Allele& a, SearchMode mode, Sense sense);

/// Amplitude update for an allele whose mutation was rejected. Increments
/// the invalid counter, then rotates (recording theta_last) while the
/// counter is within lambda, escapes otherwise.
void apply_invalid_evolution(Allele& a, double x_pbest, double x_gbest, const VariationParams& params,
                             Sense sense);

/// Mutates one random gene of `p` and keeps the result only on strict
/// improvement. Returns true for a valid evolution.
bool smm_single_gene(TriploidChromosome& p, const TriploidChromosome& pbest, const TriploidChromosome& gbest,
                     const Problem& problem, SearchMode mode, const VariationParams& params,
                     UniformSource& rng, EvalCounter* counter = nullptr);

/// Number of genes for multi-gene mutation: ceil(n/4 * (1 - t/(t_max+1))).
std::size_t gene_count_schedule(std::size_t n, std::size_t t, std::size_t t_max);

/// Mean rotation angle strictly below zero (minimization) or above zero
/// (maximization).
bool multi_gene_triggered(const TriploidChromosome& p, Sense sense);

/// Jointly perturbs gene_count_schedule(n, t, t_max) distinct genes with the
/// step scale of `params.multi_gene_mode`; the joint candidate is kept only on
/// strict improvement.
bool smm_multi_gene(TriploidChromosome& p, const TriploidChromosome& pbest, const TriploidChromosome& gbest,
                    const Problem& problem, const VariationParams& params, UniformSource& rng, std::size_t t,
                    std::size_t t_max, EvalCounter* counter = nullptr);

/// Gene-wise mean of two parents' x and alpha rows; beta is the positive root.
TriploidChromosome average_individual(const TriploidChromosome& pu, const TriploidChromosome& pv);

/// Convex blends of the averaged individual and a personal best with one
/// uniform weight per gene. The first offspring weights the personal best
/// by r, the second by 1 - r. Offspring fitness is left stale.
std::pair<TriploidChromosome, TriploidChromosome> arithmetic_crossover(const TriploidChromosome& p_avg,
                                                                      const TriploidChromosome& b_u,
                                                                      UniformSource& rng);

/// One crossover sweep: every particle is crossed `m_cross` times with a
/// random partner and its personal best, keeping the better offspring on
/// strict improvement. Archives are not touched.
void crossover_round(Swarm& swarm, const Problem& problem, const VariationParams& params, UniformSource& rng,
                     EvalCounter* counter = nullptr);

} // namespace hrcqea
