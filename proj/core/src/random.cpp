#include "qfactor/random.hpp"

#include <cmath>
#include <numbers>

namespace qfactor {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

Seed derive_seed(Seed root, std::uint64_t index) {
  return Seed{splitmix64(root.value + (index + 1) * 0x9E3779B97F4A7C15ull)};
}

double GaussianStream::uniform() {
  // 53 random mantissa bits, shifted off zero.
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double GaussianStream::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform()));
  const double phi = 2.0 * std::numbers::pi * uniform();
  cached_ = r * std::sin(phi);
  has_cached_ = true;
  return r * std::cos(phi);
}

Complex GaussianStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

ComplexMatrix ginibre(int rows, int cols, GaussianStream& rng) {
  ComplexMatrix g(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) g(i, j) = rng.complex_normal();
  return g;
}

ComplexMatrix random_unitary(int dim, Seed seed) {
  GaussianStream rng(seed);
  const ComplexMatrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    const double a = std::abs(r(k, k));
    if (a > 0.0) q.col(k) *= r(k, k) / a;
  }
  return q;
}

ComplexMatrix random_hermitian(int dim, Seed seed, double scale) {
  GaussianStream rng(seed);
  const ComplexMatrix g = ginibre(dim, dim, rng);
  return (g + g.adjoint()) * (0.5 * scale);
}

}  // namespace qfactor
