#pragma once

#include <string>
#include <string_view>

#include "asearch/harness.hpp"

namespace asearch {

enum class ReportFormat { table, csv, structured };

/// Parses "table", "csv" or "structured". Throws std::invalid_argument.
ReportFormat parse_report_format(std::string_view name);

/// Aligned table: instance, sequential mean time, one speed-up column per
/// non-baseline worker count, mean time at the largest worker count.
std::string format_table(const RunReport& report);

/// One row per sample, header `problem,size,workers,sample,seconds,solved`.
std::string format_csv(const RunReport& report);

/// JSON document carrying the whole report, metadata included.
std::string format_structured(const RunReport& report);

std::string emit_report(const RunReport& report, ReportFormat format);

/// Inverse of format_csv for the fields the CSV carries.
RunReport parse_csv(std::string_view text);

/// Inverse of format_structured.
RunReport parse_structured(std::string_view text);

}  // namespace asearch
