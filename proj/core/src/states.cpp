#include "qfactor/states.hpp"

#include <cmath>
#include <string>

#include "qfactor/errors.hpp"

namespace qfactor {

DensityMatrix::DensityMatrix(ComplexMatrix matrix, HilbertLayout layout, double tol)
    : matrix_(std::move(matrix)), layout_(std::move(layout)) {
  const int d = layout_.total_dim();
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw DimensionMismatch("DensityMatrix: " + std::to_string(matrix_.rows()) + "x" +
                            std::to_string(matrix_.cols()) + " matrix for layout " + layout_.to_string());
  }
  if (!matrix_.allFinite()) throw InvalidState("DensityMatrix: non-finite entries");
  if (!is_hermitian(matrix_, tol)) throw InvalidState("DensityMatrix: not Hermitian");
  matrix_ = hermitian_part(matrix_);
  const double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) > tol) throw InvalidState("DensityMatrix: trace " + std::to_string(tr));
  min_eigenvalue_ = eigh(matrix_).min();
  if (min_eigenvalue_ < -tol) {
    throw InvalidState("DensityMatrix: negative eigenvalue " + std::to_string(min_eigenvalue_));
  }
}

DensityMatrix DensityMatrix::flat(ComplexMatrix matrix, double tol) {
  HilbertLayout layout({static_cast<int>(matrix.rows())}, TrivialSites::Allow);
  return DensityMatrix(std::move(matrix), std::move(layout), tol);
}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

DensityMatrix DensityMatrix::marginal(const Region& kept) const {
  return DensityMatrix(qfactor::marginal(matrix_, layout_, kept), kept.sublayout(layout_), kComputedTol);
}

DensityMatrix random_pure(const HilbertLayout& layout, Seed seed) {
  GaussianStream rng(seed);
  Eigen::VectorXcd psi = ginibre(layout.total_dim(), 1, rng).col(0);
  psi.normalize();
  return DensityMatrix(psi * psi.adjoint(), layout);
}

DensityMatrix random_mixed(const HilbertLayout& layout, Seed seed, const ToleranceConfig& tol) {
  constexpr int kMaxAttempts = 100;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    GaussianStream rng(attempt == 0 ? seed : derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    const ComplexMatrix g = ginibre(layout.total_dim(), layout.total_dim(), rng);
    ComplexMatrix m = g * g.adjoint();
    m /= m.trace().real();
    DensityMatrix rho(std::move(m), layout, DensityMatrix::kComputedTol);
    if (rho.is_full_rank(tol)) return rho;
  }
  throw SamplingFailed("random_mixed: no full-rank sample in 100 attempts");
}

DensityMatrix depolarize(const DensityMatrix& rho, double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("depolarize: eps must lie in [0, 1]");
  const int d = rho.dim();
  ComplexMatrix m = (1.0 - eps) * rho.matrix() + (eps / d) * ComplexMatrix::Identity(d, d);
  return DensityMatrix(std::move(m), rho.layout(), DensityMatrix::kComputedTol);
}

DensityMatrix product_state(std::span<const DensityMatrix> factors) {
  ComplexMatrix m = ComplexMatrix::Identity(1, 1);
  std::vector<int> dims;
  for (const auto& f : factors) {
    if (f.layout().site_count() != 1) throw DimensionMismatch("product_state: factors must be single-site");
    m = kron(m, f.matrix());
    dims.push_back(f.dim());
  }
  return DensityMatrix(std::move(m), HilbertLayout(std::move(dims), TrivialSites::Allow),
                       DensityMatrix::kComputedTol);
}

DensityMatrix classical_state(std::span<const double> probabilities, const HilbertLayout& layout) {
  if (static_cast<int>(probabilities.size()) != layout.total_dim()) {
    throw DimensionMismatch("classical_state: probability vector length differs from total dimension");
  }
  double sum = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0)) throw InvalidState("classical_state: negative or NaN probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > DensityMatrix::kStrictTol) throw InvalidState("classical_state: probabilities do not sum to 1");
  ComplexMatrix m = ComplexMatrix::Zero(layout.total_dim(), layout.total_dim());
  for (std::size_t i = 0; i < probabilities.size(); ++i) m(i, i) = probabilities[i];
  return DensityMatrix(std::move(m), layout);
}

DensityMatrix maximally_mixed(const HilbertLayout& layout) {
  const int d = layout.total_dim();
  return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(d), layout);
}

std::vector<DensityMatrix> random_product_factors(const HilbertLayout& layout, Seed seed) {
  std::vector<DensityMatrix> factors;
  for (int k = 0; k < layout.site_count(); ++k)
    factors.push_back(random_mixed(HilbertLayout({layout.dim(k)}, TrivialSites::Allow), derive_seed(seed, k)));
  return factors;
}

}  // namespace qfactor
