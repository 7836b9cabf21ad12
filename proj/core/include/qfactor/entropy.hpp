#pragma once

#include "qfactor/states.hpp"

namespace qfactor {

/// Relative entropy value in nats. `finite` is false, with value = +inf, when the support of
/// the first state is not contained in the support of the second.
struct EntropyReport {
  double value = 0.0;
  bool finite = true;
  bool support_ok = true;
};

/// S(rho) = -tr[rho log rho], with 0 log 0 = 0.
double von_neumann(const DensityMatrix& rho);
double shannon_entropy(const RealVector& probabilities);

/// D(rho||sigma) = tr[rho (log rho - log sigma)], both logarithms from independent
/// eigendecompositions. Eigenvalues of sigma below tol.rank_floor span its kernel; weight of rho
/// on that kernel above tol.rank_floor means infinite divergence.
EntropyReport relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, const ToleranceConfig& tol = {});

/// Same as relative_entropy(...).value but throws RankDeficient on support failure.
double relative_entropy_value(const DensityMatrix& rho, const DensityMatrix& sigma, const ToleranceConfig& tol = {});

/// I(A:B) = D(rho_AB || rho_A (x) rho_B). Regions must be disjoint; sites outside both are traced out.
double mutual_information(const DensityMatrix& rho, const Region& a, const Region& b);

/// I(A:C|B) = S(AB) + S(BC) - S(B) - S(ABC). Regions must be pairwise disjoint.
double conditional_mutual_information(const DensityMatrix& rho, const Region& a, const Region& b, const Region& c);

/// S(A|A^c) = S(rho) - S(rho_{A^c}).
double conditional_entropy(const DensityMatrix& rho, const Region& a);

/// Minimal conditional expectation (Heisenberg picture) of the observable `f`:
///   E_A(f) = sigma_B^{-1/2} tr_A[sigma^{1/2} f sigma^{1/2}] sigma_B^{-1/2},  B = A^c.
/// Returns an operator on B. sigma must be full rank.
ComplexMatrix min_cond_expectation(const ComplexMatrix& f, const DensityMatrix& sigma, const Region& a,
                                   const ToleranceConfig& tol = {});

/// Petz recovery map of tr_A (the Hilbert-Schmidt adjoint of E_A), applied to any operator x:
///   E*_A(x) = sigma^{1/2} (1_A (x) sigma_B^{-1/2} x_B sigma_B^{-1/2}) sigma^{1/2},  x_B = tr_A x.
ComplexMatrix petz_recovery_map(const ComplexMatrix& x, const DensityMatrix& sigma, const Region& a,
                                const ToleranceConfig& tol = {});

DensityMatrix petz_recovery(const DensityMatrix& rho, const DensityMatrix& sigma, const Region& a,
                            const ToleranceConfig& tol = {});

/// Petz recovery of tau. The result has D_A(.||sigma) = 0 whenever tr_A o E*_A is the identity on
/// A^c, e.g. sigma = sigma_A (x) sigma_{A^c}; for generic sigma the recovery does not keep tau's marginal.
DensityMatrix markov_state(const DensityMatrix& tau, const DensityMatrix& sigma, const Region& a,
                           const ToleranceConfig& tol = {});

/// D_A(rho||sigma) = D(rho||sigma) - D(rho_{A^c}||sigma_{A^c}). Both states full rank.
double cond_rel_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, const Region& a,
                        const ToleranceConfig& tol = {});

/// D^E_A(rho||sigma) = D(rho || E*_A(rho)); +inf when the recovered state misses rho's support.
double cond_rel_entropy_exp(const DensityMatrix& rho, const DensityMatrix& sigma, const Region& a,
                            const ToleranceConfig& tol = {});

enum class Ordering { LhsGreater, RhsGreater, Equal };

/// Conditional mutual information against the divergence from the rho-built Petz state
///   rho_BC^{1/2} rho_B^{-1/2} rho_AB rho_B^{-1/2} rho_BC^{1/2},
/// i.e. D_C vs. D^E_C for sigma = 1_A (x) rho_BC.
struct ComparisonRecord {
  double lhs = 0.0;  // I(A:C|B)
  double rhs = 0.0;  // D(rho || Petz state)
  bool finite = true;
  Ordering ordering = Ordering::Equal;

  double difference() const { return lhs - rhs; }
};

/// `equal_tol` decides when the two sides count as tied.
ComparisonRecord compare_definitions(const DensityMatrix& rho, const Region& a, const Region& b, const Region& c,
                                     double equal_tol = 1e-12, const ToleranceConfig& tol = {});

/// Three-site layouts: B = `b`, A and C the remaining sites in increasing order.
ComparisonRecord compare_definitions(const DensityMatrix& rho, const Region& b, double equal_tol = 1e-12,
                                     const ToleranceConfig& tol = {});

/// The Petz state used as the right-hand side of compare_definitions.
DensityMatrix rho_built_petz_state(const DensityMatrix& rho, const Region& a, const Region& b, const Region& c,
                                   const ToleranceConfig& tol = {});

}  // namespace qfactor
