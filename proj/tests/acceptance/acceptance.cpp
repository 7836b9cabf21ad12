// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number of failures.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <qfactor/qfactor.hpp>

#include "qfactor_cli/campaign.hpp"

namespace {

using namespace qfactor;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

const Seed kRoot{20240611};

Seed seed_for(int criterion, int trial) {
  return derive_seed(derive_seed(kRoot, static_cast<std::uint64_t>(criterion)), static_cast<std::uint64_t>(trial));
}

Outcome product_campaign() {
  const auto start = Clock::now();
  const HilbertLayout layout({2, 2, 2});
  double worst = kInfinity;
  int failures = 0;
  for (int k = 0; k < 500; ++k) {
    const cli::ReportRow row = cli::run_qf_product_trial(layout, k, seed_for(1, k), 1e-9);
    worst = std::min(worst, row.margin);
    failures += row.margin < -1e-9;
  }
  const double elapsed = seconds_since(start);
  return {failures == 0 && elapsed <= 60.0,
          fmt("500 trials, %d below -1e-9, min margin %.3e, %.2f s (limit 60 s)", failures, worst, elapsed)};
}

Outcome shearer_campaign() {
  double worst = kInfinity;
  int failures = 0;
  for (int k = 0; k < 500; ++k) {
    const int n = 2 + k % 3;
    const HilbertLayout layout = HilbertLayout::qubits(n);
    const DensityMatrix rho = k % 2 == 0 ? random_mixed(layout, seed_for(2, k)) : random_pure(layout, seed_for(2, k));
    const double m = shearer_margin(rho);
    worst = std::min(worst, m);
    failures += m < -1e-9;
  }
  return {failures == 0, fmt("500 states on 2-4 qubits, %d below -1e-9, min margin %.3e", failures, worst)};
}

Outcome overlap_campaign() {
  const HilbertLayout layout({2, 2, 2});
  int nontrivial = 0, failures = 0;
  double worst = kInfinity;
  for (int k = 0; k < 500; ++k) {
    const cli::ReportRow row = cli::run_qf_overlap_trial(layout, k, seed_for(3, k), 1e-8);
    if (row.status == cli::Status::Vacuous) continue;
    ++nontrivial;
    worst = std::min(worst, row.margin);
    failures += row.margin < -1e-8;
  }
  return {failures == 0 && nontrivial > 0,
          fmt("%d/500 nontrivial (vacuous fraction %.3f), %d below -1e-8, min margin %.3e", nontrivial,
              (500 - nontrivial) / 500.0, failures, worst)};
}

Outcome expectation_campaign() {
  const HilbertLayout layout({2, 2});
  const Region a(2, {0});
  const QuadratureScheme quad;
  int failures = 0, applicable_final = 0;
  double worst_step1 = kInfinity, worst_step2 = kInfinity, worst_final = kInfinity;
  for (int k = 0; k < 300; ++k) {
    const Seed s = seed_for(4, k);
    const DensityMatrix rho = random_mixed(layout, derive_seed(s, 0));
    const DensityMatrix sigma = cli::sample_reference(layout, derive_seed(s, 1));
    const ExpectationQFResult r = verify_expectation_qf(rho, sigma, a, quad);
    worst_step1 = std::min(worst_step1, r.step1_margin);
    worst_step2 = std::min(worst_step2, r.step2_margin);
    bool ok = r.step1_margin >= -1e-8 && r.step2_margin >= -1e-8;
    if (r.result.nontrivial) {
      ++applicable_final;
      worst_final = std::min(worst_final, r.result.margin);
      ok = ok && r.result.margin >= -1e-8;
    }
    failures += !ok;
  }
  const double mass = quad.integrate_beta([](double) { return 1.0; });
  const bool quad_ok = std::abs(mass - 1.0) <= 1e-10;
  return {failures == 0 && quad_ok && applicable_final > 0,
          fmt("300 pairs, %d failing; min margins step1 %.3e, step2 %.3e, final %.3e over %d applicable; "
              "int beta0 = 1 %+.1e",
              failures, worst_step1, worst_step2, worst_final, applicable_final, mass - 1.0)};
}

// sum p_ab log(p(a|b) / q(a|b)) over a 2 x 3 table, A the first index.
double classical_conditional_oracle(const std::vector<double>& p, const std::vector<double>& q) {
  double acc = 0.0;
  for (int b = 0; b < 3; ++b) {
    const double pb = p[b] + p[3 + b], qb = q[b] + q[3 + b];
    for (int a = 0; a < 2; ++a) {
      const double pab = p[3 * a + b], qab = q[3 * a + b];
      acc += pab * std::log((pab / pb) / (qab / qb));
    }
  }
  return acc;
}

std::vector<double> random_distribution(int n, Seed seed) {
  GaussianStream rng(seed);
  std::vector<double> p(n);
  double sum = 0.0;
  for (auto& x : p) sum += (x = 0.05 + rng.uniform());
  for (auto& x : p) x /= sum;
  return p;
}

Outcome definitional_coincidence() {
  const HilbertLayout qubits = HilbertLayout::qubits(3);
  double worst_product = 0.0;
  for (int k = 0; k < 200; ++k) {
    const Seed s = seed_for(5, k);
    const DensityMatrix rho = random_mixed(qubits, derive_seed(s, 0));
    const DensityMatrix sigma = product_state(random_product_factors(qubits, derive_seed(s, 1)));
    const Region a = Region::single(3, k % 3);
    worst_product = std::max(worst_product, std::abs(cond_rel_entropy(rho, sigma, a) - cond_rel_entropy_exp(rho, sigma, a)));
  }
  const HilbertLayout table({2, 3});
  const Region a(2, {0});
  double worst_classical = 0.0;
  for (int k = 0; k < 200; ++k) {
    const Seed s = seed_for(5, 1000 + k);
    const auto p = random_distribution(6, derive_seed(s, 0));
    const auto q = random_distribution(6, derive_seed(s, 1));
    const double oracle = classical_conditional_oracle(p, q);
    const DensityMatrix rho = classical_state(p, table), sigma = classical_state(q, table);
    worst_classical = std::max({worst_classical, std::abs(cond_rel_entropy(rho, sigma, a) - oracle),
                                std::abs(cond_rel_entropy_exp(rho, sigma, a) - oracle)});
  }
  return {worst_product <= 1e-9 && worst_classical <= 1e-9,
          fmt("product sigma max |D_A - D^E_A| = %.2e; classical max deviation from oracle = %.2e (limit 1e-9)",
              worst_product, worst_classical)};
}

Outcome petz_kernel() {
  const HilbertLayout qubits = HilbertLayout::qubits(3);
  const HilbertLayout one({2}, TrivialSites::Allow), two({2, 2});
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const Seed s = seed_for(6, k);
    // sigma splits across the A | A^c cut; A^c stays correlated.
    const ComplexMatrix sa = random_mixed(one, derive_seed(s, 0)).matrix();
    const ComplexMatrix sc = random_mixed(two, derive_seed(s, 1)).matrix();
    const bool first = k % 2 == 0;
    const DensityMatrix sigma(first ? kron(sa, sc) : kron(sc, sa), qubits, DensityMatrix::kComputedTol);
    const Region a = Region::single(3, first ? 0 : 2);
    const DensityMatrix rho = markov_state(random_mixed(qubits, derive_seed(s, 2)), sigma, a);
    worst = std::max({worst, cond_rel_entropy(rho, sigma, a), cond_rel_entropy_exp(rho, sigma, a)});
  }
  return {worst <= 1e-9, fmt("200 Markov states, max(D_A, D^E_A) = %.2e (limit 1e-9)", worst)};
}

Outcome counterexample_search() {
  const HilbertLayout layout({2, 2, 2});
  int lhs_greater = 0, rhs_greater = 0, ties = 0, skipped = 0;
  for (int k = 0; k < 2000; ++k) {
    const cli::ReportRow row = cli::run_compare_trial(layout, k, seed_for(7, k), 1e-6);
    if (row.status == cli::Status::Skipped) {
      ++skipped;
    } else if (std::abs(row.margin) <= 1e-12) {
      ++ties;
    } else {
      (row.margin > 0 ? lhs_greater : rhs_greater)++;
    }
  }
  return {lhs_greater > 0 && rhs_greater > 0,
          fmt("2000 near-pure samples (eps 1e-6): I(A:C|B) larger %d, Petz divergence larger %d, ties %d, "
              "skipped %d",
              lhs_greater, rhs_greater, ties, skipped)};
}

Outcome conditional_ls() {
  double worst_ratio = kInfinity, worst_decomposition = 0.0;
  int checked = 0, degenerate = 0;
  for (int k = 0; k < 1000; ++k) {
    const int n = k < 500 ? 2 : 3;
    const Seed s = seed_for(8, k);
    const HilbertLayout layout = HilbertLayout::qubits(n);
    const HeatBathGenerator gen(random_product_factors(layout, derive_seed(s, 1)));
    const DensityMatrix rho = random_mixed(layout, derive_seed(s, 0));
    for (int x = 0; x < n; ++x) {
      try {
        const ConditionalLSRatio r = conditional_ls_ratio(gen, rho, Region::single(n, x));
        worst_ratio = std::min(worst_ratio, r.ratio);
        worst_decomposition = std::max(worst_decomposition, std::abs(r.ratio - r.decomposition));
        ++checked;
      } catch (const DegenerateDenominator&) {
        ++degenerate;
      }
    }
  }
  return {worst_ratio >= 0.5 - 1e-7 && worst_decomposition <= 1e-9 && checked > 0,
          fmt("%d ratios (%d degenerate) over 1000 states, min ratio %.6f, max decomposition error %.2e", checked,
              degenerate, worst_ratio, worst_decomposition)};
}

Outcome global_ls_and_decay() {
  std::string detail;
  bool pass = true;
  for (int n : {2, 3}) {
    const HilbertLayout layout = HilbertLayout::qubits(n);
    const HeatBathGenerator gen(random_product_factors(layout, seed_for(9, n)));
    const LSEstimate est = estimate_global_ls(gen, 500, seed_for(9, 10 + n));
    pass = pass && est.value >= 0.5 - 1e-6;
    detail += fmt("%d qubits alpha = %.6f (sampled %.6f); ", n, est.value, est.sampled_value);

    std::vector<double> grid;
    for (int j = 0; j <= 100; ++j) grid.push_back(0.05 * j);
    double worst = kInfinity;
    for (int k = 0; k < 20; ++k) {
      const Seed s = seed_for(9, 100 * n + k);
      const DensityMatrix rho0 = k % 2 == 0 ? random_mixed(layout, s) : depolarize(random_pure(layout, s), 1e-3);
      for (const auto& row : mixing_diagnostics(gen, rho0, 0.5, grid))
        worst = std::min(worst, row.divergence_bound - row.divergence);
    }
    pass = pass && worst >= -1e-8;
    detail += fmt("decay min margin %.3e; ", worst);
  }
  detail.resize(detail.size() - 2);
  return {pass, detail};
}

Outcome propagator_equivalence() {
  const auto start = Clock::now();
  const HilbertLayout layout = HilbertLayout::qubits(3);
  const std::vector<double> times{0.1, 1.0, 3.0};
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) {
    const Seed s = seed_for(10, k);
    const HeatBathGenerator gen(random_product_factors(layout, derive_seed(s, 1)));
    const DensityMatrix rho0 = random_mixed(layout, derive_seed(s, 0));
    const Trajectory traj = evolve_ode(gen, rho0, times, 1e-3);
    for (std::size_t j = 0; j < times.size(); ++j) {
      const ComplexMatrix closed = evolve_closed_form(gen, rho0, times[j]).matrix();
      const ComplexMatrix super = evolve_superoperator(gen, rho0, times[j]).matrix();
      worst = std::max({worst, max_abs_diff(closed, traj.states[j].matrix()), max_abs_diff(closed, super),
                        max_abs_diff(super, traj.states[j].matrix())});
    }
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-8 && elapsed <= 30.0,
          fmt("5 three-qubit runs, max pairwise entry deviation %.2e (limit 1e-8), %.2f s (limit 30 s)", worst,
              elapsed)};
}

Outcome numerical_calculus() {
  const HilbertLayout eight({8}, TrivialSites::Allow);
  double worst_lieb = kInfinity, worst_forms = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Seed s = seed_for(11, k);
    ComplexMatrix f = random_hermitian(8, derive_seed(s, 0), 0.5);
    ComplexMatrix g = random_hermitian(8, derive_seed(s, 1), 0.5);
    ComplexMatrix h = random_hermitian(8, derive_seed(s, 2), 0.5);
    if (k % 4 == 3) {
      // Commuting triple.
      f = f.diagonal().asDiagonal();
      g = g.diagonal().asDiagonal();
      h = h.diagonal().asDiagonal();
    }
    worst_lieb = std::min(worst_lieb, lieb_margin(f, g, h));

    const ComplexMatrix pg = random_mixed(eight, derive_seed(s, 3)).matrix() * 8.0;
    const ComplexMatrix pf = random_mixed(eight, derive_seed(s, 4)).matrix();
    const ComplexMatrix resolvent = lieb_operator_resolvent(pg, pf);
    const double scale = std::max(1.0, resolvent.cwiseAbs().maxCoeff());
    worst_forms = std::max(worst_forms, max_abs_diff(lieb_operator_beta(pg, pf), resolvent) / scale);
  }
  return {worst_lieb >= -1e-8 && worst_forms <= 1e-7,
          fmt("100 dim-8 instances: min Lieb margin %.3e (limit -1e-8), max two-quadrature deviation %.2e "
              "(limit 1e-7)",
              worst_lieb, worst_forms)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"product quasi-factorization campaign", product_campaign},
      {"Shearer inequality campaign", shearer_campaign},
      {"overlapping quasi-factorization campaign", overlap_campaign},
      {"expectation quasi-factorization chain", expectation_campaign},
      {"definitional coincidence", definitional_coincidence},
      {"Petz kernel", petz_kernel},
      {"counterexample search", counterexample_search},
      {"conditional log-Sobolev decomposition", conditional_ls},
      {"global log-Sobolev estimate and decay", global_ls_and_decay},
      {"propagator oracle equivalence", propagator_equivalence},
      {"numerical-calculus suite", numerical_calculus},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}
