#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace hrcqea {

/// Source of uniform draws in [0, 1). Every stochastic operator in the library
/// consumes randomness only through this interface, so a run is fully
/// determined by the seed and the call sequence.
class UniformSource {
public:
    virtual ~UniformSource() = default;

    virtual double uniform() = 0;

    /// Uniform index in [0, n). Consumes exactly one draw.
    std::size_t index(std::size_t n);
};

/// Seeded generator: 64-bit Mersenne Twister with a fixed 53-bit mantissa
/// conversion, so sequences are bit-identical across standard libraries.
class Rng final : public UniformSource {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    double uniform() override
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Replays a fixed list of draws, cycling when exhausted. Used to drive
/// operators through hand-computed scenarios.
class ScriptedRng final : public UniformSource {
public:
    explicit ScriptedRng(std::vector<double> draws) : draws_(std::move(draws)) {}

    double uniform() override;

    std::size_t consumed() const { return consumed_; }

private:
    std::vector<double> draws_;
    std::size_t consumed_ = 0;
};

} // namespace hrcqea
