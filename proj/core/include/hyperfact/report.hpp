#pragma once

#include <string>
#include <string_view>

#include "hyperfact/verify.hpp"

namespace hyperfact {

enum class ReportFormat { kJson, kCsv, kHuman };

/// "json", "csv", "human"; throws std::invalid_argument otherwise.
ReportFormat parse_report_format(std::string_view name);

struct EmitOptions {
  /// Include elapsed_ms (json) and the timing line (human).
  bool timing = true;
};

/// Deterministic serialization of a sweep report.
///
/// json: one object with keys theorem, range, checked_count, violations,
///   equality_cases, informational, elapsed_ms, chunk_count, in that order.
/// csv: header "N,statistic,bound,kind", one LF-terminated row per record,
///   rows ordered by N, then kind (violation, equality, informational).
/// human: summary plus one factorization line per record.
std::string emit_report(const SweepReport& report, ReportFormat format, const EmitOptions& opts = {});

}  // namespace hyperfact
