#include "hrcqea/variation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hrcqea/errors.hpp"
#include "hrcqea/selection.hpp"

namespace hrcqea {

std::string to_string(SearchMode mode)
{
    return mode == SearchMode::Fine ? "fine" : "coarse";
}

SearchMode parse_search_mode(std::string_view name)
{
    if (name == "fine")
        return SearchMode::Fine;
    if (name == "coarse")
        return SearchMode::Coarse;
    throw ConfigError("unknown search mode '" + std::string(name) + "' (expected fine or coarse)");
}

void VariationParams::validate() const
{
    if (delta < 2 || delta % 2 != 0)
        throw ConfigError("delta must be an even integer >= 2");
    if (m1 + m2 == 0)
        throw ConfigError("m1 + m2 must be positive");
    if (kappa == 0)
        throw ConfigError("kappa must be >= 1");
    if (tau == 0)
        throw ConfigError("tau must be >= 1");
    if (!std::isfinite(c1) || !std::isfinite(c2))
        throw ConfigError("learning factors must be finite");
}

double perturbation(UniformSource& rng, unsigned delta, double xi, Bounds bounds)
{
    double sum = 0.0;
    for (unsigned g = 0; g < delta; ++g)
        sum += rng.uniform();
    const double dx = sum - 0.5 * static_cast<double>(delta);
    return bounds.width() * dx * xi;
}

double clip_to_bounds(double x, Bounds bounds)
{
    if (!std::isfinite(x))
        throw std::invalid_argument("clip_to_bounds: non-finite value");
    if (!(bounds.lower < bounds.upper))
        throw std::invalid_argument("clip_to_bounds: empty box");

    constexpr int max_reflections = 64;
    for (int k = 0; k < max_reflections; ++k) {
        if (x > bounds.upper)
            x = 2.0 * bounds.upper - x;
        else if (x < bounds.lower)
            x = 2.0 * bounds.lower - x;
        else
            return x;
    }

    // Triangle-wave fold, equal to reflecting until inside.
    const double w = bounds.width();
    double m = std::fmod(x - bounds.lower, 2.0 * w);
    if (m < 0.0)
        m += 2.0 * w;
    if (m > w)
        m = 2.0 * w - m;
    return std::clamp(bounds.lower + m, bounds.lower, bounds.upper);
}

double rotation_angle(double x_current, double x_pbest, double x_gbest, const VariationParams& params)
{
    return params.c1 * (x_pbest - x_current) + params.c2 * (x_gbest - x_current);
}

Amplitudes qrg_rotate(double alpha, double beta, double theta)
{
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c * alpha - s * beta, s * alpha + c * beta};
}

Amplitudes amplitude_escape(double alpha, double beta, unsigned invalid_count, Sense sense)
{
    const double divisor = static_cast<double>(invalid_count / 5) + 1.0;
    if (sense == Sense::Minimize) {
        const double a = alpha / divisor;
        return {a, std::sqrt(std::max(0.0, 1.0 - a * a))};
    }
    const double b = beta / divisor;
    return {std::sqrt(std::max(0.0, 1.0 - b * b)), b};
}

double search_magnitude(const Allele& a, SearchMode mode, Sense sense)
{
    const bool use_alpha = (sense == Sense::Minimize) == (mode == SearchMode::Fine);
    return std::abs(use_alpha ? a.alpha : a.beta);
}

void apply_invalid_evolution(Allele& a, double x_pbest, double x_gbest, const VariationParams& params,
                             Sense sense)
{
    ++a.invalid_count;
    Amplitudes next;
    if (a.invalid_count <= params.lambda) {
        const double theta = rotation_angle(a.x, x_pbest, x_gbest, params);
        next = qrg_rotate(a.alpha, a.beta, theta);
        a.theta_last = theta;
    } else {
        next = amplitude_escape(a.alpha, a.beta, a.invalid_count, sense);
    }
    a.alpha = next.alpha;
    a.beta = next.beta;
}

namespace {

void adopt_position(TriploidChromosome& p, const std::vector<double>& x, double fitness)
{
    for (std::size_t i = 0; i < x.size(); ++i)
        p.alleles[i].x = x[i];
    p.fitness = fitness;
    p.dirty = false;
}

void check_context(const TriploidChromosome& p, const TriploidChromosome& pbest, const TriploidChromosome& gbest,
                   const Problem& problem)
{
    if (p.size() != problem.dimension() || pbest.size() != p.size() || gbest.size() != p.size())
        throw std::invalid_argument("mutation: chromosome dimensions disagree");
    if (p.dirty)
        throw std::invalid_argument("mutation: particle fitness is stale");
}

} // namespace

bool smm_single_gene(TriploidChromosome& p, const TriploidChromosome& pbest, const TriploidChromosome& gbest,
                     const Problem& problem, SearchMode mode, const VariationParams& params,
                     UniformSource& rng, EvalCounter* counter)
{
    check_context(p, pbest, gbest, problem);
    const Sense sense = problem.sense();
    const std::size_t i = rng.index(p.size());
    Allele& allele = p.alleles[i];
    const Bounds box = problem.bounds(i);

    const double xi = search_magnitude(allele, mode, sense);
    std::vector<double> candidate = p.position();
    candidate[i] = clip_to_bounds(allele.x + perturbation(rng, params.delta, xi, box), box);
    const double fitness = problem.evaluate(candidate, rng);
    if (counter)
        ++counter->evaluations;

    if (hcs_accept(p.fitness, fitness, sense)) {
        adopt_position(p, candidate, fitness);
        allele.invalid_count = 0;
        return true;
    }
    apply_invalid_evolution(allele, pbest.alleles[i].x, gbest.alleles[i].x, params, sense);
    return false;
}

std::size_t gene_count_schedule(std::size_t n, std::size_t t, std::size_t t_max)
{
    if (t > t_max)
        throw std::invalid_argument("gene_count_schedule: generation beyond budget");
    // ceil(n (t_max + 1 - t) / (4 (t_max + 1))) in exact integer arithmetic.
    const std::size_t num = n * (t_max + 1 - t);
    const std::size_t den = 4 * (t_max + 1);
    return std::max<std::size_t>(1, (num + den - 1) / den);
}

bool multi_gene_triggered(const TriploidChromosome& p, Sense sense)
{
    const double theta = average_rotation_angle(p);
    return sense == Sense::Minimize ? theta < 0.0 : theta > 0.0;
}

bool smm_multi_gene(TriploidChromosome& p, const TriploidChromosome& pbest, const TriploidChromosome& gbest,
                    const Problem& problem, const VariationParams& params, UniformSource& rng, std::size_t t,
                    std::size_t t_max, EvalCounter* counter)
{
    check_context(p, pbest, gbest, problem);
    const Sense sense = problem.sense();
    const std::size_t n = p.size();
    const std::size_t count = std::min(n, gene_count_schedule(n, t, t_max));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t k = 0; k < count; ++k)
        std::swap(order[k], order[k + rng.index(n - k)]);
    order.resize(count);

    std::vector<double> candidate = p.position();
    for (std::size_t i : order) {
        const Bounds box = problem.bounds(i);
        const double xi = search_magnitude(p.alleles[i], params.multi_gene_mode, sense);
        candidate[i] = clip_to_bounds(candidate[i] + perturbation(rng, params.delta, xi, box), box);
    }
    const double fitness = problem.evaluate(candidate, rng);
    if (counter)
        ++counter->evaluations;

    if (hcs_accept(p.fitness, fitness, sense)) {
        adopt_position(p, candidate, fitness);
        for (std::size_t i : order)
            p.alleles[i].invalid_count = 0;
        return true;
    }
    for (std::size_t i : order)
        apply_invalid_evolution(p.alleles[i], pbest.alleles[i].x, gbest.alleles[i].x, params, sense);
    return false;
}

namespace {

double partner_root(double a)
{
    const double rest = 1.0 - a * a;
    if (rest < 0.0) {
        // Rounding can push a convex blend of unit amplitudes a hair past 1.
        if (rest < -1e-12)
            throw std::logic_error("amplitude magnitude exceeds 1");
        return 0.0;
    }
    return std::sqrt(rest);
}

} // namespace

TriploidChromosome average_individual(const TriploidChromosome& pu, const TriploidChromosome& pv)
{
    if (pu.size() != pv.size())
        throw std::invalid_argument("average_individual: dimension mismatch");
    TriploidChromosome avg;
    avg.alleles.resize(pu.size());
    for (std::size_t i = 0; i < pu.size(); ++i) {
        Allele& a = avg.alleles[i];
        a.x = (pu.alleles[i].x + pv.alleles[i].x) / 2.0;
        a.alpha = (pu.alleles[i].alpha + pv.alleles[i].alpha) / 2.0;
        a.beta = partner_root(a.alpha);
    }
    avg.dirty = true;
    return avg;
}

std::pair<TriploidChromosome, TriploidChromosome> arithmetic_crossover(const TriploidChromosome& p_avg,
                                                                      const TriploidChromosome& b_u,
                                                                      UniformSource& rng)
{
    if (p_avg.size() != b_u.size())
        throw std::invalid_argument("arithmetic_crossover: dimension mismatch");
    const std::size_t n = p_avg.size();
    TriploidChromosome d1;
    TriploidChromosome d2;
    d1.alleles.resize(n);
    d2.alleles.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = rng.uniform();
        const Allele& b = b_u.alleles[i];
        const Allele& m = p_avg.alleles[i];
        d1.alleles[i].x = r * b.x + (1.0 - r) * m.x;
        d1.alleles[i].alpha = r * b.alpha + (1.0 - r) * m.alpha;
        d1.alleles[i].beta = partner_root(d1.alleles[i].alpha);
        d2.alleles[i].x = (1.0 - r) * b.x + r * m.x;
        d2.alleles[i].alpha = (1.0 - r) * b.alpha + r * m.alpha;
        d2.alleles[i].beta = partner_root(d2.alleles[i].alpha);
    }
    d1.dirty = true;
    d2.dirty = true;
    return {std::move(d1), std::move(d2)};
}

void crossover_round(Swarm& swarm, const Problem& problem, const VariationParams& params, UniformSource& rng,
                     EvalCounter* counter)
{
    const std::size_t n_particles = swarm.size();
    if (n_particles < 2)
        throw std::invalid_argument("crossover_round: need at least two particles");
    const Sense sense = problem.sense();
    std::size_t* evals = counter ? &counter->evaluations : nullptr;

    for (std::size_t u = 0; u < n_particles; ++u) {
        for (unsigned rep = 0; rep < params.m_cross; ++rep) {
            std::size_t v = rng.index(n_particles - 1);
            if (v >= u)
                ++v;
            TriploidChromosome& pu = swarm.particles[u];
            auto avg = average_individual(pu, swarm.particles[v]);
            auto [d1, d2] = arithmetic_crossover(avg, swarm.personal_bests[u], rng);
            d1.refresh_fitness(problem, rng, evals);
            d2.refresh_fitness(problem, rng, evals);
            const TriploidChromosome& child = is_better(d2.fitness, d1.fitness, sense) ? d2 : d1;
            if (!hcs_accept(pu.fitness, child.fitness, sense))
                continue;
            // Rotation history stays with the particle; the counters restart
            // because this is a valid evolution.
            for (std::size_t i = 0; i < pu.size(); ++i) {
                Allele& a = pu.alleles[i];
                a.x = child.alleles[i].x;
                a.alpha = child.alleles[i].alpha;
                a.beta = child.alleles[i].beta;
                a.invalid_count = 0;
            }
            pu.fitness = child.fitness;
            pu.dirty = false;
        }
    }
}

} // namespace hrcqea
