#pragma once

#include <ostream>
#include <string>

#include "qfactor_cli/campaign.hpp"

namespace qfactor::cli {

inline constexpr const char* kCsvHeader = "trial,seed,lhs,rhs,error_factor,margin,status";

/// %.17g, or nan / inf / -inf.
std::string format_number(double x);

/// Rows, then summary and decay blocks as '#'-prefixed sections. The only varying line is
/// the leading "# generated" comment, emitted when `timestamp` is nonempty.
void write_csv(std::ostream& out, const CampaignReport& report, const std::string& timestamp = {});

/// {"command", "config", "rows", "summary", "decay"}; non-finite numbers become null.
void write_json(std::ostream& out, const CampaignReport& report);

/// Writes in the configured format to the resolved output. Returns false when the file cannot be opened.
bool emit_report(const CampaignReport& report, std::ostream& fallback, const std::string& timestamp);

/// Explicit path, else $QFACTOR_OUTPUT_DIR/<command>.<csv|json>, else empty (stdout).
std::string resolve_output_path(const CampaignConfig& config);

/// parse_config + run_campaign + emit_report, with exit codes 0 / 1 / 2 / 3.
int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfactor::cli
