#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qfactor/layout.hpp"

namespace qfactor {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Traces out the sites of `traced`; the result acts on the complement, sites in increasing order.
///
///   out(i, j) = sum_k m((i, k), (j, k))
///
/// with (i, k) the flat index assembled from kept digits i and traced digits k.
ComplexMatrix partial_trace(const ComplexMatrix& m, const HilbertLayout& layout, const Region& traced);

/// Partial trace over the complement of `kept`.
ComplexMatrix marginal(const ComplexMatrix& m, const HilbertLayout& layout, const Region& kept);

/// op (acting on `support`, sites in increasing order) tensored with the identity elsewhere.
/// Supports need not be contiguous.
ComplexMatrix embed(const ComplexMatrix& op, const Region& support, const HilbertLayout& layout);

/// Kronecker product, `a` as the leftmost factor.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// (m + m^dagger) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

}  // namespace qfactor
