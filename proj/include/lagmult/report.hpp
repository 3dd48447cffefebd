#pragma once

#include "lagmult/harness.hpp"

#include <ostream>
#include <string>

namespace lagmult {

enum class ReportFormat { csv, json };

/// CSV: header row, then one row per table entry, %.17g numbers.
void write_csv(const Table& table, std::ostream& out);

/// One JSON object mirroring VerificationReport. Non-finite numbers are
/// written as the strings "inf", "-inf" and "nan".
void write_json(const VerificationReport& report, std::ostream& out);

/// Writes to `path` ("-" for stdout). Throws std::runtime_error naming the path
/// when the file cannot be written.
void emit_report(const VerificationReport& report, ReportFormat format, const std::string& path);

}  // namespace lagmult
