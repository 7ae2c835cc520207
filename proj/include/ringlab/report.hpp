#pragma once

#include <string>

#include "ringlab/harness.hpp"

namespace ringlab {

enum class ReportFormat { Json, Table };

// Serializes a suite report with a stable field order. Timing values are
// zeroed unless with_timings is set, so that repeated runs on the same corpus
// are byte-identical.
std::string emit_report(const SuiteReport& report, ReportFormat format,
                        bool with_timings = false);

// Validates the JSON form against the shipped record schema: exactly the keys
// {id, anchor, status, instances, hypothesis_hits, skipped, witness, millis}
// per check with the right types. Returns an error message, empty when valid.
std::string validate_report_json(const std::string& text);

}  // namespace ringlab
