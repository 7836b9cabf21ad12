#pragma once

#include <span>
#include <vector>

#include "qfactor/hermitian.hpp"
#include "qfactor/layout.hpp"
#include "qfactor/random.hpp"

namespace qfactor {

/// Hermitian, positive semi-definite, unit-trace matrix bound to a layout.
/// Construction validates the invariants to `tol` and stores the Hermitian part.
class DensityMatrix {
 public:
  static constexpr double kStrictTol = 1e-12;
  /// Looser check used for states produced by arithmetic (recoveries, propagators).
  static constexpr double kComputedTol = 1e-9;

  DensityMatrix(ComplexMatrix matrix, HilbertLayout layout, double tol = kStrictTol);

  /// Single-site or flat state: layout is {dim}.
  static DensityMatrix flat(ComplexMatrix matrix, double tol = kStrictTol);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const HilbertLayout& layout() const noexcept { return layout_; }
  int dim() const noexcept { return layout_.total_dim(); }
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }
  bool is_full_rank(const ToleranceConfig& tol = {}) const noexcept { return min_eigenvalue_ >= tol.rank_floor; }
  double purity() const;

  /// Reduced state on `kept`, with the sublayout of its sites.
  DensityMatrix marginal(const Region& kept) const;

  Region region(std::initializer_list<int> sites) const { return Region(layout_.site_count(), sites); }
  Region all_sites() const { return Region::all(layout_.site_count()); }

 private:
  ComplexMatrix matrix_;
  HilbertLayout layout_;
  double min_eigenvalue_ = 0.0;
};

/// |psi><psi| with psi a normalized complex Gaussian vector (Haar measure on pure states).
DensityMatrix random_pure(const HilbertLayout& layout, Seed seed);

/// G G^dagger / tr(G G^dagger) for square Ginibre G. Resamples (seed derived from the attempt
/// number) while the smallest eigenvalue is below tol.rank_floor; gives up after 100 attempts.
DensityMatrix random_mixed(const HilbertLayout& layout, Seed seed, const ToleranceConfig& tol = {});

/// (1 - eps) rho + eps I/d
DensityMatrix depolarize(const DensityMatrix& rho, double eps);

/// Kronecker product of single-site states, factor k on site k.
DensityMatrix product_state(std::span<const DensityMatrix> factors);

/// Diagonal state with the given probabilities in the computational product basis.
DensityMatrix classical_state(std::span<const double> probabilities, const HilbertLayout& layout);

DensityMatrix maximally_mixed(const HilbertLayout& layout);

/// Random full-rank single-site factors, factor k drawn from derive_seed(seed, k).
std::vector<DensityMatrix> random_product_factors(const HilbertLayout& layout, Seed seed);

}  // namespace qfactor
