#ifndef IOACO_IO_HPP
#define IOACO_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ioaco/assessment.hpp"
#include "ioaco/config.hpp"
#include "ioaco/optimizer.hpp"

namespace ioaco {

/// write-temp-then-rename so readers never observe partial files
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

std::string aroi_to_text(const ARoI& aroi);
ARoI aroi_from_text(const std::string& text);
void save_aroi(const std::string& path, const ARoI& aroi);
ARoI load_aroi(const std::string& path);

std::string run_result_to_json(const RunResult& result);
RunResult run_result_from_json(const std::string& text);
void save_run_result(const std::string& path, const RunResult& result);
RunResult load_run_result(const std::string& path);

struct ResultRow {
    std::string problem_id;
    std::size_t n_obj = 0;
    std::string dm_id;
    std::string algorithm;
    std::uint64_t seed = 0;
    IndicatorBlock block;
    std::uint64_t evaluations = 0;
    std::uint64_t wall_ms = 0;
};

extern const char* const kResultsHeader;

std::string result_row_to_csv(const ResultRow& row);

struct CsvReadOutcome {
    std::vector<ResultRow> rows;
    std::vector<std::string> skipped;  // one message per rejected line
};

/// Throws if the header line does not hash to the current schema.
CsvReadOutcome read_results_csv(const std::string& path);

} // namespace ioaco

#endif
