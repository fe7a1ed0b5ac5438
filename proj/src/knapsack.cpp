#include "hrcqea/knapsack.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hrcqea/errors.hpp"
#include "text_util.hpp"

namespace hrcqea {

void KnapsackInstance::validate() const
{
    if (weights.empty())
        throw std::invalid_argument("knapsack instance needs at least one item");
    if (weights.size() != profits.size())
        throw std::invalid_argument("knapsack weights and profits differ in length");
    double total = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] > 0.0) || !std::isfinite(weights[i]))
            throw std::invalid_argument("item " + std::to_string(i) + ": weight must be positive");
        if (!(profits[i] > 0.0) || !std::isfinite(profits[i]))
            throw std::invalid_argument("item " + std::to_string(i) + ": profit must be positive");
        total += weights[i];
    }
    if (!(capacity > 0.0))
        throw std::invalid_argument("knapsack capacity must be positive");
    if (!(capacity < total))
        throw std::invalid_argument("knapsack capacity must be below the total weight");
}

double total_weight(const Bits& z, const KnapsackInstance& inst)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i])
            sum += inst.weights[i];
    return sum;
}

double total_profit(const Bits& z, const KnapsackInstance& inst)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i])
            sum += inst.profits[i];
    return sum;
}

bool is_feasible(const Bits& z, const KnapsackInstance& inst)
{
    return total_weight(z, inst) <= inst.capacity;
}

Bits make_binary(std::span<const double> x)
{
    Bits z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        z[i] = x[i] >= 0.5 ? 1 : 0;
    return z;
}

Bits make_binary(const TriploidChromosome& p)
{
    Bits z(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        z[i] = p.alleles[i].x >= 0.5 ? 1 : 0;
    return z;
}

namespace {

void drop_until_feasible(Bits& z, const KnapsackInstance& inst, UniformSource& rng,
                         std::vector<std::size_t>& scratch)
{
    while (total_weight(z, inst) > inst.capacity) {
        scratch.clear();
        for (std::size_t i = 0; i < z.size(); ++i)
            if (z[i])
                scratch.push_back(i);
        z[scratch[rng.index(scratch.size())]] = 0;
    }
}

} // namespace

void repair(Bits& z, const KnapsackInstance& inst, UniformSource& rng)
{
    if (z.size() != inst.size())
        throw std::invalid_argument("repair: bit string length differs from item count");

    std::vector<std::size_t> scratch;
    scratch.reserve(z.size());
    drop_until_feasible(z, inst, rng, scratch);

    double min_weight = std::numeric_limits<double>::infinity();
    scratch.clear();
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (!z[i]) {
            scratch.push_back(i);
            min_weight = std::min(min_weight, inst.weights[i]);
        }
    }

    // One pass over the unselected items in random order (lazy Fisher-Yates).
    // The pass ends early once no unselected item can fit.
    double load = total_weight(z, inst);
    for (std::size_t k = 0; k < scratch.size(); ++k) {
        if (inst.capacity - load < min_weight)
            break;
        std::size_t pick = k + rng.index(scratch.size() - k);
        std::swap(scratch[k], scratch[pick]);
        const std::size_t item = scratch[k];
        if (load + inst.weights[item] <= inst.capacity) {
            z[item] = 1;
            load += inst.weights[item];
        }
    }

    // The running load can differ from the index-order sum in the last ulp.
    drop_until_feasible(z, inst, rng, scratch);
}

double knapsack_fitness(TriploidChromosome& p, const KnapsackInstance& inst, UniformSource& rng,
                        bool write_back)
{
    if (p.size() != inst.size())
        throw std::invalid_argument("knapsack_fitness: chromosome length differs from item count");
    Bits z = make_binary(p);
    repair(z, inst, rng);
    if (write_back)
        for (std::size_t i = 0; i < z.size(); ++i)
            p.alleles[i].x = z[i] ? 1.0 : 0.0;
    p.fitness = total_profit(z, inst);
    p.dirty = false;
    return p.fitness;
}

KnapsackInstance generate_instance(std::size_t n, UniformSource& rng)
{
    if (n == 0)
        throw std::invalid_argument("generate_instance: need at least one item");
    constexpr double lower = 1.0;
    constexpr double upper = 10.0;
    constexpr double offset = 5.0;

    KnapsackInstance inst;
    inst.weights.resize(n);
    inst.profits.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double w = lower + rng.uniform() * (upper - lower);
        w = std::ldexp(std::round(std::ldexp(w, 32)), -32);
        inst.weights[i] = w;
        inst.profits[i] = w + offset;
    }
    inst.capacity = 0.5 * std::accumulate(inst.weights.begin(), inst.weights.end(), 0.0);
    return inst;
}

KnapsackInstance load_instance(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open knapsack instance '" + path.string() + "'");
    const std::string source = path.string();

    KnapsackInstance inst;
    std::size_t expected = 0;
    bool have_count = false;
    bool have_capacity = false;
    std::size_t line_no = 0;
    std::size_t last_line = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        auto text = detail::trim(line);
        if (text.empty() || text.front() == '#')
            continue;
        last_line = line_no;
        auto fields = detail::split(text, ' ');
        if (fields.size() != 2)
            throw ParseError(source, line_no, "expected two space-separated fields");

        if (!have_count) {
            auto count = detail::parse_int<std::size_t>(fields[1]);
            if (fields[0] != "n" || !count)
                throw ParseError(source, line_no, "expected 'n <count>'");
            if (*count == 0)
                throw ParseError(source, line_no, "item count must be at least 1");
            expected = *count;
            have_count = true;
        } else if (!have_capacity) {
            auto cap = detail::parse_real(fields[1]);
            if (fields[0] != "capacity" || !cap)
                throw ParseError(source, line_no, "expected 'capacity <real>'");
            if (!(*cap > 0.0))
                throw ParseError(source, line_no, "capacity must be positive");
            inst.capacity = *cap;
            have_capacity = true;
        } else {
            if (inst.size() == expected)
                throw ParseError(source, line_no, "more item lines than declared");
            auto w = detail::parse_real(fields[0]);
            auto p = detail::parse_real(fields[1]);
            if (!w || !p)
                throw ParseError(source, line_no, "expected '<weight> <profit>'");
            if (!(*w > 0.0) || !(*p > 0.0))
                throw ParseError(source, line_no, "weight and profit must be positive");
            inst.weights.push_back(*w);
            inst.profits.push_back(*p);
        }
    }
    if (!have_count || !have_capacity)
        throw ParseError(source, line_no, "missing header");
    if (inst.size() != expected)
        throw ParseError(source, last_line,
                         "declared " + std::to_string(expected) + " items, found " + std::to_string(inst.size()));
    try {
        inst.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(source, 0, e.what());
    }
    return inst;
}

void save_instance(const KnapsackInstance& inst, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write knapsack instance '" + path.string() + "'");
    out << "# 0-1 knapsack instance\n";
    out << "n " << inst.size() << "\n";
    out << "capacity " << detail::format_real(inst.capacity) << "\n";
    for (std::size_t i = 0; i < inst.size(); ++i)
        out << detail::format_real(inst.weights[i]) << ' ' << detail::format_real(inst.profits[i]) << "\n";
    if (!out)
        throw IoError("failed writing knapsack instance '" + path.string() + "'");
}

KnapsackProblem::KnapsackProblem(KnapsackInstance inst, bool write_back)
    : inst_(std::move(inst)), write_back_(write_back)
{
    inst_.validate();
}

double KnapsackProblem::evaluate(std::span<double> x, UniformSource& rng) const
{
    if (x.size() != inst_.size())
        throw std::invalid_argument("knapsack: position length differs from item count");
    Bits z = make_binary(std::span<const double>(x.data(), x.size()));
    repair(z, inst_, rng);
    if (write_back_)
        for (std::size_t i = 0; i < z.size(); ++i)
            x[i] = z[i] ? 1.0 : 0.0;
    return total_profit(z, inst_);
}

} // namespace hrcqea
