#pragma once

#include <span>

#include "qfactor/entropy.hpp"
#include "qfactor/quadrature.hpp"

namespace qfactor {

/// Outcome of one quasi-factorization inequality  error_factor * lhs <= rhs.
/// lhs is the global divergence D(rho||sigma); rhs the sum of conditional divergences.
struct QFResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double error_factor = 1.0;
  /// error_factor > 0. With a nonpositive factor the inequality holds trivially.
  bool nontrivial = true;
  /// rhs - error_factor * lhs
  double margin = 0.0;
};

QFResult make_qf_result(double lhs, double rhs, double error_factor);

/// H(sigma_AC) = (sigma_A^{-1/2} (x) sigma_C^{-1/2}) sigma_AC (sigma_A^{-1/2} (x) sigma_C^{-1/2}) - 1_AC
/// on the sites of a and c, everything else traced out.
ComplexMatrix h_operator(const DensityMatrix& sigma, const Region& a, const Region& c, const ToleranceConfig& tol = {});

/// ||H(sigma_AC)||_inf
double h_error_term(const DensityMatrix& sigma, const Region& a, const Region& c, const ToleranceConfig& tol = {});

/// Integrands of the two xi integrals at a single t, for the split (a, a^c):
///   e1(t) = ||sigma_B^{(-1+it)/2} sigma^{(1-it)/2} sigma_A^{(-1+it)/2} - 1||_inf
///           * ||sigma_A^{-1/2} sigma^{(1+it)/2} sigma_B^{-1/2}||_inf
///   e2(t) = ||sigma_B^{(-1-it)/2} sigma^{(1+it)/2} sigma_A^{(-1-it)/2} - 1||_inf
/// with the marginal powers embedded in the full space.
class XiIntegrand {
 public:
  XiIntegrand(const DensityMatrix& sigma, const Region& a, const ToleranceConfig& tol = {});

  double e1(double t) const;
  double e2(double t) const;

 private:
  ComplexMatrix power_ab(Complex z) const;
  ComplexMatrix power_a(Complex z) const;
  ComplexMatrix power_b(Complex z) const;

  HilbertLayout layout_;
  Region a_, b_;
  EigenSystem es_ab_, es_a_, es_b_;
};

struct XiTerm {
  double e1 = 0.0;  // integral of beta0 * e1(t)
  double e2 = 0.0;  // integral of beta0 * e2(t)
  double xi = 0.0;  // 2 (e1 + e2)
};

XiTerm xi_components(const DensityMatrix& sigma, const Region& a, const QuadratureScheme& quad = {},
                     const ToleranceConfig& tol = {});

double xi_error_term(const DensityMatrix& sigma, const Region& a, const QuadratureScheme& quad = {},
                     const ToleranceConfig& tol = {});

/// D(rho||sigma) <= sum_x D_x(rho||sigma) over single sites x, sigma the product of the factors.
QFResult verify_product_qf(const DensityMatrix& rho, std::span<const DensityMatrix> sigma_factors,
                           const ToleranceConfig& tol = {});

/// sum_x S(rho_{x^c}) - (n - 1) S(rho), n the number of sites. Nonnegative.
double shearer_margin(const DensityMatrix& rho);

/// (1 - 2||H(sigma_AC)||_inf) D(rho||sigma) <= D_AB + D_BC, where A = ab \ bc, C = bc \ ab,
/// B = ab & bc (possibly empty). ab and bc must cover the layout.
QFResult verify_overlap_qf(const DensityMatrix& rho, const DensityMatrix& sigma, const Region& ab, const Region& bc,
                           const ToleranceConfig& tol = {});

/// (1 + 2||H(sigma_AC)||_inf) D(rho||sigma) - D(rho_A||sigma_A) - D(rho_C||sigma_C) for a partition (a, c).
double superadditivity_margin(const DensityMatrix& rho, const DensityMatrix& sigma, const Region& a, const Region& c,
                              const ToleranceConfig& tol = {});

/// Every link of the chain bounding D(rho||sigma) by the two expectation-based conditional divergences.
/// With T_A = sigma_A^{-1/2}(rho_A - sigma_A)sigma_A^{-1/2}, T_B likewise (both embedded):
///   step 1:  D <= D^E_A + D^E_B + log tr M,   M = exp(-log sigma + log E*_A(rho) + log E*_B(rho))
///   Lieb:    tr M <= tr[E*_A(rho) T_sigma(E*_B(rho))]
///   step 2:  log tr M <= I2 = int beta0(t) tr[T_B sigma^{(1-it)/2} T_A sigma^{(1+it)/2}] dt
///   step 4:  I2 <= xi D
///   final:   (1 - xi) D <= D^E_A + D^E_B
/// Margins are "larger side minus smaller side".
struct ExpectationQFResult {
  QFResult result;
  double d_a_exp = 0.0;
  double d_b_exp = 0.0;
  double log_tr_m = 0.0;
  double lieb_bound = 0.0;
  double step2_integral = 0.0;
  XiTerm xi;
  double step1_margin = 0.0;
  double lieb_margin = 0.0;
  double step2_margin = 0.0;
  double step4_margin = 0.0;
};

ExpectationQFResult verify_expectation_qf(const DensityMatrix& rho, const DensityMatrix& sigma, const Region& a,
                                          const QuadratureScheme& quad = {}, const ToleranceConfig& tol = {});

/// D <= D_A + D_B + D_C for a three-site layout and product sigma, plus the intermediate bound
/// I(A:BC) + I(B:AC) + I(C:AB) >= D(rho || rho_A (x) rho_B (x) rho_C).
struct TripartiteResult {
  QFResult result;
  double mutual_information_margin = 0.0;
};

TripartiteResult verify_tripartite_nonoverlap(const DensityMatrix& rho, std::span<const DensityMatrix> sigma_factors,
                                              const ToleranceConfig& tol = {});

/// int beta0(t) g^{(-1-it)/2} f g^{(-1+it)/2} dt over the scheme. g positive definite.
ComplexMatrix lieb_operator_beta(const ComplexMatrix& g, const ComplexMatrix& f, const QuadratureScheme& quad = {},
                                 const ToleranceConfig& tol = {});

/// int_0^inf (g + s)^{-1} f (g + s)^{-1} ds, by the substitution s = e^u on u in [-50, 50]
/// (100 Gauss-Legendre panels of order 16) with LU inverses. g positive definite.
ComplexMatrix lieb_operator_resolvent(const ComplexMatrix& g, const ComplexMatrix& f);

/// tr[e^h T_{e^f}(e^g)] - tr[exp(-f + g + h)] for Hermitian f, g, h, T in resolvent form.
double lieb_margin(const ComplexMatrix& f, const ComplexMatrix& g, const ComplexMatrix& h);

}  // namespace qfactor
