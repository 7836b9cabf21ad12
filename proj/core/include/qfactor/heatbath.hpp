#pragma once

#include <span>
#include <vector>

#include "qfactor/entropy.hpp"

namespace qfactor {

/// Heat-bath generator with product fixed point sigma = (x)_x sigma_x:
///   L*(rho) = sum_x (sigma_x (x) rho_{x^c} - rho).
class HeatBathGenerator {
 public:
  /// One full-rank factor per site; factor k acts on site k. Throws RankDeficient otherwise.
  explicit HeatBathGenerator(std::vector<DensityMatrix> sigma_factors, const ToleranceConfig& tol = {});

  const HilbertLayout& layout() const noexcept { return fixed_point_.layout(); }
  int site_count() const noexcept { return layout().site_count(); }
  const std::vector<DensityMatrix>& factors() const noexcept { return factors_; }
  const DensityMatrix& fixed_point() const noexcept { return fixed_point_; }
  /// Smallest eigenvalue of the fixed point: the product of the factor minima.
  double sigma_min() const noexcept { return sigma_min_; }

  /// T*_S(x) = sigma_S (x) tr_S(x), for any operator x and region S (S empty gives x).
  ComplexMatrix local_map(const ComplexMatrix& x, const Region& s) const;
  /// L*(x), linear in x.
  ComplexMatrix apply(const ComplexMatrix& x) const;
  /// sigma_S (x) tr_S(x) - x
  ComplexMatrix apply_local(const ComplexMatrix& x, const Region& s) const;
  /// Heisenberg-picture dual: L(f) = sum_x (1_x (x) tr_x[(sigma_x (x) 1) f] - f).
  ComplexMatrix apply_dual(const ComplexMatrix& f) const;
  /// d^2 x d^2 matrix of L* acting on column-stacked vec(x).
  ComplexMatrix superoperator() const;

 private:
  void check(const ComplexMatrix& x, const char* who) const;

  std::vector<DensityMatrix> factors_;
  DensityMatrix fixed_point_;
  double sigma_min_ = 0.0;
  std::vector<ComplexMatrix> embedded_factors_;
};

ComplexMatrix apply_generator(const HeatBathGenerator& gen, const DensityMatrix& rho);
ComplexMatrix apply_generator_dual(const HeatBathGenerator& gen, const ComplexMatrix& f);

/// Exact propagator. The local maps are commuting idempotents, so
/// e^{t(T_x - 1)} = e^{-t} id + (1 - e^{-t}) T_x and the product over sites expands to
///   rho_t = sum_{S} e^{-t(n - |S|)} (1 - e^{-t})^{|S|} sigma_S (x) rho_{S^c}.
/// Throws std::invalid_argument for t < 0.
DensityMatrix evolve_closed_form(const HeatBathGenerator& gen, const DensityMatrix& rho0, double t);

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  /// D(rho_t || sigma)
  std::vector<double> divergences;
};

/// Classic fourth-order Runge-Kutta from t = 0 through every grid point, step at most max_step,
/// Hermitian part and unit trace restored after every step. Throws StepRejected when an
/// eigenvalue falls below -1e-9; std::invalid_argument for a negative or decreasing grid.
Trajectory evolve_ode(const HeatBathGenerator& gen, const DensityMatrix& rho0, std::span<const double> t_grid,
                      double max_step = 1e-3);

/// exp(t L*) applied to vec(rho0) with the d^2 x d^2 superoperator. d <= 8.
DensityMatrix evolve_superoperator(const HeatBathGenerator& gen, const DensityMatrix& rho0, double t);

/// -tr[L*(rho)(log rho - log sigma)]. rho full rank.
double entropy_production(const HeatBathGenerator& gen, const DensityMatrix& rho, const ToleranceConfig& tol = {});

/// Below this, D_x(rho||sigma) counts as zero and the conditional ratio is undefined.
inline constexpr double kDegenerateDivergence = 1e-12;

struct ConditionalLSRatio {
  /// -tr[L*_x(rho)(log rho - log sigma)] / (2 D_x(rho||sigma))
  double ratio = 0.0;
  /// 1/2 + D(sigma_x (x) rho_{x^c} || rho) / (2 D_x(rho||sigma))
  double decomposition = 0.0;
  double denominator = 0.0;  // D_x(rho||sigma)
};

/// Throws DegenerateDenominator when D_x(rho||sigma) <= kDegenerateDivergence.
ConditionalLSRatio conditional_ls_ratio(const HeatBathGenerator& gen, const DensityMatrix& rho, const Region& x,
                                        const ToleranceConfig& tol = {});

enum class LSMethod { Sampling, LocalRefinement };

struct LSEstimate {
  double value = kInfinity;
  /// Seed of the sampled state with the smallest ratio (the refinement starting point when
  /// the minimum came from refinement).
  Seed argmin_seed{};
  int trials = 0;
  LSMethod method = LSMethod::Sampling;
  /// Minimum over the samples alone.
  double sampled_value = kInfinity;
};

struct LSRefinement {
  int restarts = 3;
  int max_sweeps = 40;
  double initial_step = 0.5;
  double min_step = 1e-4;
};

/// entropy_production / (2 D(rho||sigma)), or +inf within kDegenerateDivergence of sigma.
double global_ls_ratio(const HeatBathGenerator& gen, const DensityMatrix& rho, const ToleranceConfig& tol = {});

/// Minimum ratio over `trials` random_mixed states (trial k from derive_seed(seed, k)), then
/// derivative-free coordinate descent from the `restarts` worst samples. States are
/// parameterized as V0 G(theta) diag(softmax(lambda)) G(theta)^dagger V0^dagger, G a product of
/// complex Givens rotations. Throws std::invalid_argument for trials < 1.
LSEstimate estimate_global_ls(const HeatBathGenerator& gen, int trials, Seed seed,
                              const LSRefinement& refinement = {}, const ToleranceConfig& tol = {});

struct DiagnosticRow {
  double t = 0.0;
  double divergence = 0.0;        // D(rho_t || sigma)
  double divergence_bound = 0.0;  // D(rho_0 || sigma) e^{-2 alpha t}
  double trace_distance = 0.0;    // ||rho_t - sigma||_1
  double pinsker_bound = 0.0;     // sqrt(2 D(rho_t || sigma))
  double global_bound = 0.0;      // sqrt(2 ln(1/sigma_min)) e^{-alpha t}

  /// Smallest of the three bound-minus-measured gaps.
  double min_margin() const;
};

/// Rows at each grid time, states from the closed-form propagator.
std::vector<DiagnosticRow> mixing_diagnostics(const HeatBathGenerator& gen, const DensityMatrix& rho0, double alpha,
                                              std::span<const double> t_grid);

}  // namespace qfactor
