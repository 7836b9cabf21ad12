#include "qfactor/heatbath.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "qfactor/errors.hpp"

namespace qfactor {
namespace {

constexpr double kPositivityFloor = -1e-9;
constexpr int kMaxSuperoperatorDim = 8;

HilbertLayout layout_of(const std::vector<DensityMatrix>& factors) {
  std::vector<int> dims;
  for (const auto& f : factors) {
    if (f.layout().site_count() != 1) throw DimensionMismatch("HeatBathGenerator: factors must be single-site");
    dims.push_back(f.dim());
  }
  return HilbertLayout(std::move(dims));
}

DensityMatrix product_of(const std::vector<DensityMatrix>& factors) {
  if (factors.empty()) throw DimensionMismatch("HeatBathGenerator: no factors");
  return DensityMatrix(product_state(factors).matrix(), layout_of(factors), DensityMatrix::kComputedTol);
}

ComplexMatrix vec(const ComplexMatrix& m) { return m.reshaped(m.size(), 1); }

ComplexMatrix unvec(const ComplexMatrix& v, Eigen::Index d) { return v.reshaped(d, d); }

}  // namespace

HeatBathGenerator::HeatBathGenerator(std::vector<DensityMatrix> sigma_factors, const ToleranceConfig& tol)
    : factors_(std::move(sigma_factors)), fixed_point_(product_of(factors_)) {
  sigma_min_ = 1.0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const EigenSystem es = eigh(factors_[k].matrix());
    require_full_rank(es, tol, "HeatBathGenerator");
    sigma_min_ *= es.min();
    embedded_factors_.push_back(
        embed(factors_[k].matrix(), Region::single(site_count(), static_cast<int>(k)), layout()));
  }
}

void HeatBathGenerator::check(const ComplexMatrix& x, const char* who) const {
  if (x.rows() != layout().total_dim() || x.cols() != layout().total_dim())
    throw DimensionMismatch(std::string(who) + ": operand does not match layout " + layout().to_string());
}

ComplexMatrix HeatBathGenerator::local_map(const ComplexMatrix& x, const Region& s) const {
  check(x, "HeatBathGenerator::local_map");
  s.check(layout());
  const Region rest = s.complement();
  ComplexMatrix out = embed(marginal(x, layout(), rest), rest, layout());
  for (int site : s.sites()) out = embedded_factors_[site] * out;
  return out;
}

ComplexMatrix HeatBathGenerator::apply_local(const ComplexMatrix& x, const Region& s) const {
  return local_map(x, s) - x;
}

ComplexMatrix HeatBathGenerator::apply(const ComplexMatrix& x) const {
  check(x, "apply_generator");
  ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
  for (int site = 0; site < site_count(); ++site) out += apply_local(x, Region::single(site_count(), site));
  return out;
}

ComplexMatrix HeatBathGenerator::apply_dual(const ComplexMatrix& f) const {
  check(f, "apply_generator_dual");
  ComplexMatrix out = ComplexMatrix::Zero(f.rows(), f.cols());
  for (int site = 0; site < site_count(); ++site) {
    const Region x = Region::single(site_count(), site);
    const Region rest = x.complement();
    out += embed(partial_trace(embedded_factors_[site] * f, layout(), x), rest, layout()) - f;
  }
  return out;
}

ComplexMatrix HeatBathGenerator::superoperator() const {
  const int d = layout().total_dim();
  ComplexMatrix super(d * d, d * d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      ComplexMatrix e = ComplexMatrix::Zero(d, d);
      e(i, j) = 1.0;
      super.col(j * d + i) = vec(apply(e));
    }
  return super;
}

ComplexMatrix apply_generator(const HeatBathGenerator& gen, const DensityMatrix& rho) {
  if (!(rho.layout() == gen.layout())) throw DimensionMismatch("apply_generator: layout mismatch");
  return gen.apply(rho.matrix());
}

ComplexMatrix apply_generator_dual(const HeatBathGenerator& gen, const ComplexMatrix& f) { return gen.apply_dual(f); }

DensityMatrix evolve_closed_form(const HeatBathGenerator& gen, const DensityMatrix& rho0, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("evolve_closed_form: t must be nonnegative");
  if (!(rho0.layout() == gen.layout())) throw DimensionMismatch("evolve_closed_form: layout mismatch");
  const int n = gen.site_count();
  const double stay = std::exp(-t);
  const double jump = -std::expm1(-t);
  ComplexMatrix acc = ComplexMatrix::Zero(rho0.dim(), rho0.dim());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const Region s = Region::from_mask(n, mask);
    const double weight = std::pow(stay, n - s.size()) * std::pow(jump, s.size());
    if (weight == 0.0) continue;
    acc += weight * (s.empty() ? rho0.matrix() : gen.local_map(rho0.matrix(), s));
  }
  return DensityMatrix(std::move(acc), rho0.layout(), DensityMatrix::kComputedTol);
}

Trajectory evolve_ode(const HeatBathGenerator& gen, const DensityMatrix& rho0, std::span<const double> t_grid,
                      double max_step) {
  if (!(rho0.layout() == gen.layout())) throw DimensionMismatch("evolve_ode: layout mismatch");
  if (!(max_step > 0.0)) throw std::invalid_argument("evolve_ode: step must be positive");
  double prev = 0.0;
  for (double t : t_grid) {
    if (!(t >= prev)) throw std::invalid_argument("evolve_ode: grid must be nonnegative and increasing");
    prev = t;
  }

  Trajectory traj;
  ComplexMatrix state = rho0.matrix();
  double now = 0.0;
  const auto rhs = [&gen](const ComplexMatrix& x) { return gen.apply(x); };
  for (double target : t_grid) {
    const double span = target - now;
    const int steps = span > 0.0 ? static_cast<int>(std::ceil(span / max_step - 1e-9)) : 0;
    const double h = steps > 0 ? span / steps : 0.0;
    for (int k = 0; k < steps; ++k) {
      const ComplexMatrix k1 = rhs(state);
      const ComplexMatrix k2 = rhs(state + (0.5 * h) * k1);
      const ComplexMatrix k3 = rhs(state + (0.5 * h) * k2);
      const ComplexMatrix k4 = rhs(state + h * k3);
      state += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      state = hermitian_part(state);
      state /= state.trace().real();
      const double lowest = eigh(state).min();
      if (lowest < kPositivityFloor)
        throw StepRejected("evolve_ode: eigenvalue " + std::to_string(lowest) + " below -1e-9");
    }
    now = target;
    traj.times.push_back(target);
    traj.states.emplace_back(state, rho0.layout(), DensityMatrix::kComputedTol);
    traj.divergences.push_back(relative_entropy(traj.states.back(), gen.fixed_point()).value);
  }
  return traj;
}

DensityMatrix evolve_superoperator(const HeatBathGenerator& gen, const DensityMatrix& rho0, double t) {
  if (!(rho0.layout() == gen.layout())) throw DimensionMismatch("evolve_superoperator: layout mismatch");
  const int d = rho0.dim();
  if (d > kMaxSuperoperatorDim) throw std::invalid_argument("evolve_superoperator: total dimension above 8");
  const ComplexMatrix propagator = (t * gen.superoperator()).exp();
  const ComplexMatrix out = unvec(propagator * vec(rho0.matrix()), d);
  return DensityMatrix(hermitian_part(out), rho0.layout(), DensityMatrix::kComputedTol);
}

double entropy_production(const HeatBathGenerator& gen, const DensityMatrix& rho, const ToleranceConfig& tol) {
  const ComplexMatrix l = apply_generator(gen, rho);
  const ComplexMatrix log_diff = mat_log(rho.matrix(), tol) - mat_log(gen.fixed_point().matrix(), tol);
  return -(l * log_diff).trace().real();
}

ConditionalLSRatio conditional_ls_ratio(const HeatBathGenerator& gen, const DensityMatrix& rho, const Region& x,
                                        const ToleranceConfig& tol) {
  if (!(rho.layout() == gen.layout())) throw DimensionMismatch("conditional_ls_ratio: layout mismatch");
  const DensityMatrix& sigma = gen.fixed_point();
  ConditionalLSRatio out;
  out.denominator = cond_rel_entropy(rho, sigma, x, tol);
  if (out.denominator <= kDegenerateDivergence)
    throw DegenerateDenominator("conditional_ls_ratio: D_x(rho||sigma) vanishes");
  const ComplexMatrix recovered = gen.local_map(rho.matrix(), x);
  const ComplexMatrix log_diff = mat_log(rho.matrix(), tol) - mat_log(sigma.matrix(), tol);
  const double numerator = -((recovered - rho.matrix()) * log_diff).trace().real();
  out.ratio = numerator / (2.0 * out.denominator);
  const DensityMatrix tau(recovered, rho.layout(), DensityMatrix::kComputedTol);
  out.decomposition = 0.5 + relative_entropy_value(tau, rho, tol) / (2.0 * out.denominator);
  return out;
}

double global_ls_ratio(const HeatBathGenerator& gen, const DensityMatrix& rho, const ToleranceConfig& tol) {
  const double d = relative_entropy_value(rho, gen.fixed_point(), tol);
  if (d <= kDegenerateDivergence) return kInfinity;
  return entropy_production(gen, rho, tol) / (2.0 * d);
}

namespace {

// rho(theta, lambda) = V0 G(theta) diag(softmax(lambda)) G(theta)^dagger V0^dagger.
// theta holds an (angle, phase) pair per index pair i < j.
class StateChart {
 public:
  StateChart(const DensityMatrix& start, const ToleranceConfig& tol) : layout_(start.layout()) {
    const EigenSystem es = eigh(start.matrix());
    basis_ = es.vectors;
    const int d = start.dim();
    params_.assign(static_cast<std::size_t>(d + d * (d - 1)), 0.0);
    for (int k = 0; k < d; ++k) params_[k] = std::log(std::max(es.values(k), tol.rank_floor));
  }

  std::vector<double>& params() { return params_; }

  DensityMatrix state(const std::vector<double>& p) const {
    const int d = layout_.total_dim();
    Eigen::VectorXd lam(d);
    for (int k = 0; k < d; ++k) lam(k) = p[k];
    lam = (lam.array() - lam.maxCoeff()).exp();
    lam /= lam.sum();
    ComplexMatrix g = ComplexMatrix::Identity(d, d);
    std::size_t idx = d;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        const double c = std::cos(p[idx]), s = std::sin(p[idx]);
        const Complex phase = std::polar(1.0, p[idx + 1]);
        idx += 2;
        // Right-multiply by the rotation acting on columns i, j.
        const Eigen::VectorXcd ci = g.col(i), cj = g.col(j);
        g.col(i) = c * ci + s * phase * cj;
        g.col(j) = -s * std::conj(phase) * ci + c * cj;
      }
    const ComplexMatrix v = basis_ * g;
    ComplexMatrix m = v * lam.cast<Complex>().asDiagonal() * v.adjoint();
    m = hermitian_part(m);
    m /= m.trace().real();
    return DensityMatrix(std::move(m), layout_, DensityMatrix::kComputedTol);
  }

 private:
  HilbertLayout layout_;
  ComplexMatrix basis_;
  std::vector<double> params_;
};

double safe_ratio(const HeatBathGenerator& gen, const DensityMatrix& rho, const ToleranceConfig& tol) {
  try {
    return global_ls_ratio(gen, rho, tol);
  } catch (const RankDeficient&) {
    return kInfinity;
  }
}

double refine(const HeatBathGenerator& gen, const DensityMatrix& start, const LSRefinement& cfg,
              const ToleranceConfig& tol) {
  StateChart chart(start, tol);
  std::vector<double> p = chart.params();
  double best = safe_ratio(gen, chart.state(p), tol);
  double step = cfg.initial_step;
  for (int sweep = 0; sweep < cfg.max_sweeps && step >= cfg.min_step; ++sweep) {
    bool improved = false;
    for (std::size_t k = 0; k < p.size(); ++k) {
      for (double dir : {1.0, -1.0}) {
        std::vector<double> trial = p;
        trial[k] += dir * step;
        const double r = safe_ratio(gen, chart.state(trial), tol);
        if (r < best) {
          best = r;
          p = std::move(trial);
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

}  // namespace

LSEstimate estimate_global_ls(const HeatBathGenerator& gen, int trials, Seed seed, const LSRefinement& refinement,
                              const ToleranceConfig& tol) {
  if (trials < 1) throw std::invalid_argument("estimate_global_ls: trials must be positive");
  struct Sample {
    double ratio;
    int index;
  };
  std::vector<Sample> samples;
  samples.reserve(trials);
  for (int k = 0; k < trials; ++k) {
    const DensityMatrix rho = random_mixed(gen.layout(), derive_seed(seed, k), tol);
    samples.push_back({safe_ratio(gen, rho, tol), k});
  }
  std::stable_sort(samples.begin(), samples.end(), [](const Sample& a, const Sample& b) { return a.ratio < b.ratio; });

  LSEstimate est;
  est.trials = trials;
  est.sampled_value = samples.front().ratio;
  est.value = est.sampled_value;
  est.argmin_seed = derive_seed(seed, samples.front().index);
  est.method = LSMethod::Sampling;

  const int restarts = std::min(refinement.restarts, trials);
  for (int r = 0; r < restarts; ++r) {
    const Seed start_seed = derive_seed(seed, samples[r].index);
    if (!std::isfinite(samples[r].ratio)) continue;
    const double refined = refine(gen, random_mixed(gen.layout(), start_seed, tol), refinement, tol);
    if (refined < est.value) {
      est.value = refined;
      est.argmin_seed = start_seed;
      est.method = LSMethod::LocalRefinement;
    }
  }
  return est;
}

double DiagnosticRow::min_margin() const {
  return std::min({divergence_bound - divergence, pinsker_bound - trace_distance, global_bound - trace_distance});
}

std::vector<DiagnosticRow> mixing_diagnostics(const HeatBathGenerator& gen, const DensityMatrix& rho0, double alpha,
                                              std::span<const double> t_grid) {
  const DensityMatrix& sigma = gen.fixed_point();
  const double d0 = relative_entropy(rho0, sigma).value;
  const double global_prefactor = std::sqrt(2.0 * std::log(1.0 / gen.sigma_min()));
  std::vector<DiagnosticRow> rows;
  for (double t : t_grid) {
    const DensityMatrix rho_t = evolve_closed_form(gen, rho0, t);
    DiagnosticRow row;
    row.t = t;
    row.divergence = relative_entropy(rho_t, sigma).value;
    row.divergence_bound = d0 * std::exp(-2.0 * alpha * t);
    row.trace_distance = schatten_norm(rho_t.matrix() - sigma.matrix(), 1.0);
    row.pinsker_bound = std::sqrt(2.0 * std::max(row.divergence, 0.0));
    row.global_bound = global_prefactor * std::exp(-alpha * t);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qfactor
