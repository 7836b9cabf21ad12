#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <qfactor/qfactor.hpp>

namespace qfactor::cli {

enum class Command { QfProduct, QfOverlap, QfExpectation, CompareCre, Evolve, LsEstimate, QuadSelftest };
enum class Format { Csv, Json };
enum class Status { Pass, Fail, Vacuous, Skipped };

const char* command_name(Command c);
const char* status_name(Status s);

struct CampaignConfig {
  Command command = Command::QfProduct;
  std::vector<int> dims;
  int trials = 100;
  std::uint64_t seed = 42;
  double eps_depolarize = 1e-6;
  double tolerance = 1e-8;
  /// Empty: $QFACTOR_OUTPUT_DIR/<command>.<format> when that variable is set, else stdout.
  std::string output_path;
  Format format = Format::Csv;
  double t_max = 5.0;
  int steps = 100;
  int threads = 1;
};

struct ReportRow {
  int trial = 0;
  std::uint64_t seed = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double error_factor = 1.0;
  double margin = 0.0;
  Status status = Status::Pass;
};

/// One point of an evolve trajectory.
struct DecayRow {
  int trial = 0;
  double t = 0.0;
  double divergence = 0.0;
  double bound = 0.0;
  double trace_distance = 0.0;
};

struct Summary {
  int trials = 0;
  int pass = 0;
  int fail = 0;
  int vacuous = 0;
  int skipped = 0;
  double min_margin = kInfinity;
  int worst_trial = -1;
  std::uint64_t worst_seed = 0;
  /// Command-specific entries, in emission order.
  std::vector<std::pair<std::string, std::variant<double, std::uint64_t>>> extras;
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<ReportRow> rows;
  std::vector<DecayRow> decay;
  Summary summary;
};

// Seed derivation. Trial k of a campaign with root seed r uses s = derive_seed(r, k); inside a
// trial, rho comes from derive_seed(s, 0) and the reference (sigma or generator factors) from
// derive_seed(s, 1). ls-estimate is the exception: its generator is shared by all trials and
// comes from derive_seed(r, kGeneratorIndex), while trial k samples rho from derive_seed(r, k).
inline constexpr std::uint64_t kGeneratorIndex = 0xFFFFFFFFull;

Seed trial_seed(const CampaignConfig& config, int trial);

/// (1 - lambda) (x)_x sigma_x + lambda tau with random full-rank factors sigma_x, tau and
/// lambda uniform on (0, 1]: correlated references with a nontrivial share of small ||H||.
DensityMatrix sample_reference(const HilbertLayout& layout, Seed seed);

/// Partition used by the overlap and comparison commands: A = {0}, C = {n-1}, B in between.
struct Partition {
  Region a, b, c;
};
Partition default_partition(int sites);

/// Region A = first half of the sites (at least one) for the expectation command.
Region expectation_region(int sites);

/// Status for an inequality check: vacuous when the error factor is nonpositive, fail when the
/// margin is below -tolerance.
Status classify(double margin, bool nontrivial, double tolerance);

ReportRow run_qf_product_trial(const HilbertLayout& layout, int trial, Seed seed, double tolerance);
ReportRow run_qf_overlap_trial(const HilbertLayout& layout, int trial, Seed seed, double tolerance);
/// margin is the smallest margin among the chain links that apply; the final link only when 1 - xi > 0.
ReportRow run_qf_expectation_trial(const HilbertLayout& layout, int trial, Seed seed, double tolerance);
/// lhs = I(A:C|B), rhs = D(rho || rho-built Petz state), margin = lhs - rhs; rho is a depolarized
/// random pure state. Never fails; skipped when rhs is infinite.
ReportRow run_compare_trial(const HilbertLayout& layout, int trial, Seed seed, double eps);

/// Runs every trial on `config.threads` workers; rows are ordered by trial index.
CampaignReport run_campaign(const CampaignConfig& config);

Summary summarize(const std::vector<ReportRow>& rows);

}  // namespace qfactor::cli
