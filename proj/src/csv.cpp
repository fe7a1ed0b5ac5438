#include "hrcqea/csv.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <string>

#include "hrcqea/errors.hpp"
#include "text_util.hpp"

namespace hrcqea {

using detail::format_real;

bool is_monotone(const RunRecord& record, Sense sense)
{
    for (std::size_t k = 1; k < record.rows.size(); ++k)
        if (is_better(record.rows[k - 1].best_fitness, record.rows[k].best_fitness, sense))
            return false;
    return true;
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot write '" + path.string() + "'");
    return out;
}

std::ifstream open_for_read(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path.string() + "'");
    return in;
}

void expect_header(std::ifstream& in, const char* header, const std::string& source)
{
    std::string line;
    if (!std::getline(in, line) || detail::trim(line) != header)
        throw ParseError(source, 1, std::string("expected header '") + header + "'");
}

double real_field(std::string_view s, const std::string& source, std::size_t line)
{
    auto v = detail::parse_real(s);
    if (!v)
        throw ParseError(source, line, "bad number '" + std::string(s) + "'");
    return *v;
}

std::size_t count_field(std::string_view s, const std::string& source, std::size_t line)
{
    auto v = detail::parse_int<std::size_t>(s);
    if (!v)
        throw ParseError(source, line, "bad integer '" + std::string(s) + "'");
    return *v;
}

} // namespace

void write_trace_csv(const std::filesystem::path& path, const std::vector<RunRecord>& records, Sense sense)
{
    if (records.empty())
        throw std::invalid_argument("write_trace_csv: no records");
    for (std::size_t r = 0; r < records.size(); ++r)
        if (!is_monotone(records[r], sense))
            throw std::logic_error("trace of run " + std::to_string(r) + " is not monotone");

    auto out = open_for_write(path);
    out << trace_csv_header << '\n';
    for (std::size_t r = 0; r < records.size(); ++r)
        for (const auto& row : records[r].rows)
            out << r << ',' << row.generation << ',' << format_real(row.best_fitness) << ','
                << format_real(row.mean_fitness) << ',' << format_real(row.avg_rotation_angle) << '\n';
    if (!out)
        throw IoError("failed writing '" + path.string() + "'");
}

std::vector<RunRecord> read_trace_csv(const std::filesystem::path& path)
{
    const std::string source = path.string();
    auto in = open_for_read(path);
    expect_header(in, trace_csv_header, source);

    std::vector<RunRecord> records;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        auto text = detail::trim(line);
        if (text.empty())
            continue;
        auto f = detail::split(text, ',');
        if (f.size() != 5)
            throw ParseError(source, line_no, "expected 5 fields");
        const std::size_t run = count_field(f[0], source, line_no);
        if (run > records.size())
            throw ParseError(source, line_no, "run index out of order");
        if (run == records.size())
            records.emplace_back();
        records[run].rows.push_back({count_field(f[1], source, line_no), real_field(f[2], source, line_no),
                                     real_field(f[3], source, line_no), real_field(f[4], source, line_no)});
    }
    return records;
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows)
{
    out << summary_csv_header << '\n';
    for (const auto& r : rows)
        out << r.problem << ',' << r.algorithm << ',' << r.dimension << ',' << r.runs << ','
            << format_real(r.stats.best) << ',' << format_real(r.stats.worst) << ',' << format_real(r.stats.mean)
            << ',' << format_real(r.stats.sigma) << '\n';
}

void write_summary_csv(const std::filesystem::path& path, const std::vector<SummaryRow>& rows)
{
    auto out = open_for_write(path);
    write_summary_csv(out, rows);
    if (!out)
        throw IoError("failed writing '" + path.string() + "'");
}

std::vector<SummaryRow> read_summary_csv(const std::filesystem::path& path)
{
    const std::string source = path.string();
    auto in = open_for_read(path);
    expect_header(in, summary_csv_header, source);

    std::vector<SummaryRow> rows;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        auto text = detail::trim(line);
        if (text.empty())
            continue;
        auto f = detail::split(text, ',');
        if (f.size() != 8)
            throw ParseError(source, line_no, "expected 8 fields");
        SummaryRow row;
        row.problem = std::string(f[0]);
        row.algorithm = std::string(f[1]);
        row.dimension = count_field(f[2], source, line_no);
        row.runs = count_field(f[3], source, line_no);
        row.stats = {real_field(f[4], source, line_no), real_field(f[5], source, line_no),
                     real_field(f[6], source, line_no), real_field(f[7], source, line_no)};
        rows.push_back(std::move(row));
    }
    return rows;
}

void merge_summary_row(std::vector<SummaryRow>& rows, const SummaryRow& row)
{
    auto it = std::find_if(rows.begin(), rows.end(), [&](const SummaryRow& r) {
        return r.problem == row.problem && r.algorithm == row.algorithm && r.dimension == row.dimension;
    });
    if (it != rows.end())
        *it = row;
    else
        rows.push_back(row);
}

} // namespace hrcqea
