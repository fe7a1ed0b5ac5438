#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hrcqea/benchmarks.hpp"
#include "hrcqea/core.hpp"
#include "hrcqea/random.hpp"

using namespace hrcqea;

TEST_CASE("rng replays bit-identically for the same seed")
{
    Rng a(42);
    Rng b(42);
    Rng c(43);
    bool differs = false;
    for (int i = 0; i < 1000; ++i) {
        const double x = a.uniform();
        CHECK(x == b.uniform());
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
        differs |= x != c.uniform();
    }
    CHECK(differs);
}

TEST_CASE("index stays in range and scripted draws replay in order")
{
    ScriptedRng rng({0.0, 0.999999, 1.0, 0.5});
    CHECK(rng.index(4) == 0);
    CHECK(rng.index(4) == 3);
    CHECK(rng.index(4) == 3); // u = 1.0 clamps to the last index
    CHECK(rng.index(4) == 2);
    CHECK(rng.consumed() == 4);
    CHECK_THROWS(rng.index(0));
}

TEST_CASE("new_swarm initializes particles, archives and amplitudes")
{
    BenchmarkProblem sphere_2d(Benchmark::Sphere, 2);
    Rng rng(42);
    const Swarm swarm = new_swarm(sphere_2d, 3, rng);

    REQUIRE(swarm.size() == 3);
    CHECK(swarm.generation == 0);
    for (const auto& p : swarm.particles) {
        REQUIRE(p.size() == 2);
        CHECK_FALSE(p.dirty);
        CHECK(normalization_error(p) < 1e-12);
        for (const auto& a : p.alleles) {
            CHECK(a.x >= -100.0);
            CHECK(a.x <= 100.0);
            CHECK(a.alpha == doctest::Approx(1.0 / std::numbers::sqrt2));
            CHECK(a.theta_last == 0.0);
            CHECK(a.invalid_count == 0);
        }
        auto x = p.position();
        CHECK(p.fitness == sphere(x));
    }
    CHECK(swarm.personal_bests == swarm.particles);
    for (const auto& p : swarm.particles)
        CHECK(swarm.global_best.fitness <= p.fitness);
}

TEST_CASE("new_swarm is deterministic and rejects tiny populations")
{
    BenchmarkProblem sphere_2d(Benchmark::Sphere, 2);
    Rng a(42);
    Rng b(42);
    const Swarm s1 = new_swarm(sphere_2d, 3, a);
    const Swarm s2 = new_swarm(sphere_2d, 3, b);
    CHECK(s1.particles == s2.particles);
    CHECK(s1.global_best == s2.global_best);

    Rng c(1);
    CHECK_THROWS_AS(new_swarm(sphere_2d, 1, c), std::invalid_argument);
}

TEST_CASE("average_rotation_angle")
{
    TriploidChromosome p;
    p.alleles.resize(3);
    CHECK(average_rotation_angle(p) == 0.0);

    p.alleles.resize(2);
    p.alleles[0].theta_last = std::numbers::pi;
    p.alleles[1].theta_last = -std::numbers::pi;
    CHECK(average_rotation_angle(p) == 0.0);

    p.alleles.resize(3);
    p.alleles[0].theta_last = 0.1;
    p.alleles[1].theta_last = 0.2;
    p.alleles[2].theta_last = 0.3;
    CHECK(average_rotation_angle(p) == doctest::Approx(0.2).epsilon(1e-15));
}
