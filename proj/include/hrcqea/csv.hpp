#pragma once

#include <filesystem>
#include <ostream>
#include <vector>

#include "hrcqea/harness.hpp"
#include "hrcqea/problem.hpp"
#include "hrcqea/trace.hpp"

namespace hrcqea {

inline constexpr const char* trace_csv_header = "run,generation,best_fitness,mean_fitness,avg_rotation_angle";
inline constexpr const char* summary_csv_header = "problem,algorithm,dimension,runs,best,worst,mean,sigma";

/// True iff the best-fitness column never gets worse under `sense`.
bool is_monotone(const RunRecord& record, Sense sense);

/// Writes one row per (run, generation). Throws std::logic_error if a trace
/// is not monotone, IoError if the file cannot be written.
void write_trace_csv(const std::filesystem::path& path, const std::vector<RunRecord>& records, Sense sense);
std::vector<RunRecord> read_trace_csv(const std::filesystem::path& path);

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);
void write_summary_csv(const std::filesystem::path& path, const std::vector<SummaryRow>& rows);
std::vector<SummaryRow> read_summary_csv(const std::filesystem::path& path);

/// Replaces the row with the same problem, algorithm and dimension, or
/// appends it.
void merge_summary_row(std::vector<SummaryRow>& rows, const SummaryRow& row);

} // namespace hrcqea
