#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "natq/quivers.hpp"

namespace natq {

/// Check groups understood by verify_target, in report order.
const std::vector<std::string>& verify_groups();

/// Runs the checks of one group, or of every group for "all". With `strict`, a group whose
/// preconditions fail throws (CyclicNaturalQuiver, NotSplitting); otherwise it is reported
/// as skipped with the reason. Throws ParseError for an unknown target.
RelationReport verify_target(const AlgebraAnalysis& an, std::string_view target, bool strict = false);

struct ReportSummary {
    std::size_t pass = 0, fail = 0, skipped = 0;
};
ReportSummary summarize(const RelationReport& r);
std::string format_report_text(const RelationReport& r);

}  // namespace natq
