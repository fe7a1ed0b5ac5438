#pragma once

#include <cstddef>
#include <vector>

namespace hrcqea {

struct TraceRow {
    std::size_t generation = 0;
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
    double avg_rotation_angle = 0.0;

    bool operator==(const TraceRow&) const = default;
};

/// Per-generation trace of one run, generation 0 included.
struct RunRecord {
    std::vector<TraceRow> rows;

    bool operator==(const RunRecord&) const = default;
};

} // namespace hrcqea
