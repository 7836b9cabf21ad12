#pragma once

#include <vector>

#include <gtest/gtest.h>

#include "qfactor/qfactor.hpp"

namespace qfactor::testing {

// Digits of a flat index, site 0 most significant.
inline std::vector<int> digits_of(int index, const std::vector<int>& dims) {
  std::vector<int> out(dims.size());
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    out[k] = index % dims[k];
    index /= dims[k];
  }
  return out;
}

inline int index_of(const std::vector<int>& digits, const std::vector<int>& dims) {
  int idx = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + digits[k];
  return idx;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  EXPECT_EQ(a.rows(), b.rows());
  EXPECT_EQ(a.cols(), b.cols());
  return (a - b).cwiseAbs().maxCoeff();
}

inline ComplexMatrix random_matrix(int rows, int cols, Seed seed) {
  GaussianStream rng(seed);
  return ginibre(rows, cols, rng);
}

inline ComplexMatrix pauli_z() {
  ComplexMatrix z = ComplexMatrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  return z;
}

// (|00> + |11>)/sqrt(2)
inline DensityMatrix bell_state() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return DensityMatrix(m, HilbertLayout::qubits(2));
}

inline DensityMatrix diagonal_state(const std::vector<double>& p, const HilbertLayout& layout) {
  return classical_state(p, layout);
}

// sigma = (1 - lambda) (x)_x sigma_x + lambda tau: correlations tunable through lambda.
inline DensityMatrix weakly_correlated(const HilbertLayout& layout, Seed seed, double lambda) {
  const auto factors = random_product_factors(layout, derive_seed(seed, 100));
  const DensityMatrix product = product_state(factors);
  const DensityMatrix tau = random_mixed(layout, derive_seed(seed, 200));
  return DensityMatrix((1.0 - lambda) * product.matrix() + lambda * tau.matrix(), layout,
                       DensityMatrix::kComputedTol);
}

}  // namespace qfactor::testing
