#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qfactor_cli/campaign.hpp"

namespace qfactor::cli {

inline constexpr int kMaxTotalDim = 64;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnwritable = 3;

/// Parse failure or explicit help request. `exit_code` is 0 for --help, kExitUsage otherwise;
/// what() holds the text to print.
class UsageError : public std::runtime_error {
 public:
  UsageError(int exit_code, const std::string& message) : std::runtime_error(message), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

/// args excludes the program name. Throws UsageError.
CampaignConfig parse_config(const std::vector<std::string>& args);

}  // namespace qfactor::cli
