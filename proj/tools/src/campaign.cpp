#include "qfactor_cli/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <thread>

namespace qfactor::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kSelftestTol = 1e-10;
// The Petz state of an eps-depolarized pure state has genuine eigenvalues of order eps^2.
constexpr ToleranceConfig kNearPureTol{1e-15, 1e-10};

ReportRow skipped_row(int trial, Seed seed) {
  return {trial, seed.value, kNaN, kNaN, kNaN, kNaN, Status::Skipped};
}

ReportRow qf_row(int trial, Seed seed, const QFResult& r, double tolerance) {
  return {trial, seed.value, r.lhs, r.rhs, r.error_factor, r.margin, classify(r.margin, r.nontrivial, tolerance)};
}

std::vector<double> time_grid(double t_max, int steps) {
  std::vector<double> grid(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k) grid[k] = t_max * k / steps;
  return grid;
}

ReportRow run_evolve_trial(const CampaignConfig& config, const HilbertLayout& layout, int trial, Seed seed,
                           std::vector<DecayRow>& decay) {
  const HeatBathGenerator gen(random_product_factors(layout, derive_seed(seed, 1)));
  const DensityMatrix rho0 = random_mixed(layout, derive_seed(seed, 0));
  const std::vector<double> grid = time_grid(config.t_max, config.steps);
  const auto diag = mixing_diagnostics(gen, rho0, 0.5, grid);
  double margin = kInfinity;
  for (const auto& d : diag) {
    margin = std::min(margin, d.min_margin());
    decay.push_back({trial, d.t, d.divergence, d.divergence_bound, d.trace_distance});
  }
  return {trial, seed.value, diag.back().divergence, diag.back().divergence_bound, 1.0, margin,
          classify(margin, true, config.tolerance)};
}

std::vector<ReportRow> run_quad_selftest(const CampaignConfig& config) {
  const QuadratureScheme quad;
  const Seed seed{config.seed};
  std::vector<std::pair<double, double>> checks;
  checks.emplace_back(quad.integrate_beta([](double) { return 1.0; }), 1.0);
  for (double w : {1.0, 3.0})
    checks.emplace_back(quad.integrate_beta([w](double t) { return std::cos(w * t); }), w / std::sinh(w));
  const GaussLegendreRule gl = gauss_legendre(quad.order());
  double poly = 0.0;
  for (std::size_t k = 0; k < gl.nodes.size(); ++k) poly += gl.weights[k] * std::pow(gl.nodes[k], 30);
  checks.emplace_back(poly, 2.0 / 31.0);

  std::vector<ReportRow> rows;
  for (std::size_t k = 0; k < checks.size(); ++k) {
    const auto [lhs, rhs] = checks[k];
    const double margin = kSelftestTol - std::abs(lhs - rhs);
    rows.push_back({static_cast<int>(k), seed.value, lhs, rhs, 1.0, margin, margin < 0 ? Status::Fail : Status::Pass});
  }
  const double tail = quad.tail_bound();
  const double margin = QuadratureScheme::kMaxTail - tail;
  rows.push_back({static_cast<int>(checks.size()), seed.value, tail, QuadratureScheme::kMaxTail, 1.0, margin,
                  margin < 0 ? Status::Fail : Status::Pass});
  return rows;
}

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
  const int workers = std::max(1, std::min(threads, count));
  if (workers == 1) {
    for (int k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int k = next++; k < count; k = next++) body(k);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::QfProduct: return "qf-product";
    case Command::QfOverlap: return "qf-overlap";
    case Command::QfExpectation: return "qf-expectation";
    case Command::CompareCre: return "compare-cre";
    case Command::Evolve: return "evolve";
    case Command::LsEstimate: return "ls-estimate";
    case Command::QuadSelftest: return "quad-selftest";
  }
  return "unknown";
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Vacuous: return "vacuous";
    case Status::Skipped: return "skipped";
  }
  return "unknown";
}

Seed trial_seed(const CampaignConfig& config, int trial) {
  return derive_seed(Seed{config.seed}, static_cast<std::uint64_t>(trial));
}

DensityMatrix sample_reference(const HilbertLayout& layout, Seed seed) {
  const DensityMatrix product = product_state(random_product_factors(layout, derive_seed(seed, 0)));
  const DensityMatrix tau = random_mixed(layout, derive_seed(seed, 1));
  GaussianStream rng(derive_seed(seed, 2));
  const double lambda = rng.uniform();
  return DensityMatrix((1.0 - lambda) * product.matrix() + lambda * tau.matrix(), layout,
                       DensityMatrix::kComputedTol);
}

Partition default_partition(int sites) {
  std::vector<int> middle(std::max(0, sites - 2));
  std::iota(middle.begin(), middle.end(), 1);
  return {Region::single(sites, 0), Region(sites, middle), Region::single(sites, sites - 1)};
}

Region expectation_region(int sites) {
  std::vector<int> first(std::max(1, sites / 2));
  std::iota(first.begin(), first.end(), 0);
  return Region(sites, first);
}

Status classify(double margin, bool nontrivial, double tolerance) {
  if (!nontrivial) return Status::Vacuous;
  return margin < -tolerance ? Status::Fail : Status::Pass;
}

ReportRow run_qf_product_trial(const HilbertLayout& layout, int trial, Seed seed, double tolerance) {
  const DensityMatrix rho = random_mixed(layout, derive_seed(seed, 0));
  const auto factors = random_product_factors(layout, derive_seed(seed, 1));
  return qf_row(trial, seed, verify_product_qf(rho, factors), tolerance);
}

ReportRow run_qf_overlap_trial(const HilbertLayout& layout, int trial, Seed seed, double tolerance) {
  const int n = layout.site_count();
  const DensityMatrix rho = random_mixed(layout, derive_seed(seed, 0));
  const DensityMatrix sigma = sample_reference(layout, derive_seed(seed, 1));
  const Partition p = default_partition(n);
  return qf_row(trial, seed, verify_overlap_qf(rho, sigma, p.a.unite(p.b), p.b.unite(p.c)), tolerance);
}

ReportRow run_qf_expectation_trial(const HilbertLayout& layout, int trial, Seed seed, double tolerance) {
  const DensityMatrix rho = random_mixed(layout, derive_seed(seed, 0));
  const DensityMatrix sigma = sample_reference(layout, derive_seed(seed, 1));
  const ExpectationQFResult e = verify_expectation_qf(rho, sigma, expectation_region(layout.site_count()));
  double margin = std::min({e.step1_margin, e.lieb_margin, e.step2_margin, e.step4_margin});
  if (e.result.nontrivial) margin = std::min(margin, e.result.margin);
  const Status status = margin < -tolerance ? Status::Fail : (e.result.nontrivial ? Status::Pass : Status::Vacuous);
  return {trial, seed.value, e.result.lhs, e.result.rhs, e.result.error_factor, margin, status};
}

ReportRow run_compare_trial(const HilbertLayout& layout, int trial, Seed seed, double eps) {
  const DensityMatrix rho = depolarize(random_pure(layout, derive_seed(seed, 0)), eps);
  const Partition p = default_partition(layout.site_count());
  const ComparisonRecord rec = compare_definitions(rho, p.a, p.b, p.c, 1e-12, kNearPureTol);
  if (!rec.finite) return skipped_row(trial, seed);
  return {trial, seed.value, rec.lhs, rec.rhs, 1.0, rec.difference(), Status::Pass};
}

Summary summarize(const std::vector<ReportRow>& rows) {
  Summary s;
  s.trials = static_cast<int>(rows.size());
  for (const auto& r : rows) {
    switch (r.status) {
      case Status::Pass: ++s.pass; break;
      case Status::Fail: ++s.fail; break;
      case Status::Vacuous: ++s.vacuous; break;
      case Status::Skipped: ++s.skipped; break;
    }
    if (r.status != Status::Skipped && r.margin < s.min_margin) {
      s.min_margin = r.margin;
      s.worst_trial = r.trial;
      s.worst_seed = r.seed;
    }
  }
  return s;
}

CampaignReport run_campaign(const CampaignConfig& config) {
  CampaignReport report;
  report.config = config;
  if (config.command == Command::QuadSelftest) {
    report.rows = run_quad_selftest(config);
    report.summary = summarize(report.rows);
    return report;
  }

  const HilbertLayout layout(config.dims);
  const int n = config.trials;
  report.rows.resize(n);
  std::vector<std::vector<DecayRow>> decay(n);
  std::unique_ptr<HeatBathGenerator> shared_gen;
  if (config.command == Command::LsEstimate) {
    shared_gen = std::make_unique<HeatBathGenerator>(
        random_product_factors(layout, derive_seed(Seed{config.seed}, kGeneratorIndex)));
  }

  parallel_for(n, config.threads, [&](int k) {
    const Seed s = trial_seed(config, k);
    try {
      switch (config.command) {
        case Command::QfProduct: report.rows[k] = run_qf_product_trial(layout, k, s, config.tolerance); break;
        case Command::QfOverlap: report.rows[k] = run_qf_overlap_trial(layout, k, s, config.tolerance); break;
        case Command::QfExpectation:
          report.rows[k] = run_qf_expectation_trial(layout, k, s, config.tolerance);
          break;
        case Command::CompareCre: report.rows[k] = run_compare_trial(layout, k, s, config.eps_depolarize); break;
        case Command::Evolve: report.rows[k] = run_evolve_trial(config, layout, k, s, decay[k]); break;
        case Command::LsEstimate: {
          const double ratio = global_ls_ratio(*shared_gen, random_mixed(layout, s));
          report.rows[k] = std::isfinite(ratio) ? ReportRow{k, s.value, ratio, 0.5, 1.0, ratio - 0.5,
                                                            classify(ratio - 0.5, true, config.tolerance)}
                                                : skipped_row(k, s);
          break;
        }
        case Command::QuadSelftest: break;
      }
    } catch (const std::exception&) {
      report.rows[k] = skipped_row(k, s);
    }
  });

  for (auto& d : decay) report.decay.insert(report.decay.end(), d.begin(), d.end());
  report.summary = summarize(report.rows);

  if (config.command == Command::CompareCre) {
    int lhs_greater = 0, rhs_greater = 0, equal = 0;
    for (const auto& r : report.rows) {
      if (r.status == Status::Skipped) continue;
      if (std::abs(r.margin) <= config.tolerance) ++equal;
      else (r.margin > 0 ? lhs_greater : rhs_greater)++;
    }
    report.summary.extras = {{"cmi_greater", double(lhs_greater)}, {"petz_divergence_greater", double(rhs_greater)}, {"tied", double(equal)}};
  } else if (config.command == Command::LsEstimate) {
    const LSEstimate est = estimate_global_ls(*shared_gen, n, Seed{config.seed});
    report.summary.extras = {{"alpha_sampled", est.sampled_value},
                             {"alpha_refined", est.value},
                             {"argmin_seed", est.argmin_seed.value}};
    if (est.value < 0.5 - config.tolerance) ++report.summary.fail;
  } else if (config.command == Command::QfOverlap || config.command == Command::QfExpectation) {
    report.summary.extras = {{"vacuous_fraction", static_cast<double>(report.summary.vacuous) / n}};
  }
  return report;
}

}  // namespace qfactor::cli
