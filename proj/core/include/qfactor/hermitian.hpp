#pragma once

#include <functional>
#include <limits>

#include "qfactor/tensor.hpp"

namespace qfactor {

struct ToleranceConfig {
  /// Eigenvalues below this count as rank deficiency.
  double rank_floor = 1e-12;
  double recon_tol = 1e-10;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Eigenvalues ascending, eigenvectors as columns.
struct EigenSystem {
  RealVector values;
  ComplexMatrix vectors;

  double min() const { return values.size() ? values(0) : kInfinity; }
  double max() const { return values.size() ? values(values.size() - 1) : -kInfinity; }
};

/// Decomposes the Hermitian part of `m`.
EigenSystem eigh(const ComplexMatrix& m);

/// U f(Lambda) U^dagger.
ComplexMatrix apply_function(const EigenSystem& es, const std::function<Complex(double)>& f);

// All functions below re-Hermitize their argument before decomposing it.

ComplexMatrix mat_log(const ComplexMatrix& m, const ToleranceConfig& tol = {});
ComplexMatrix mat_sqrt(const ComplexMatrix& m);
ComplexMatrix mat_pow(const ComplexMatrix& m, double exponent, const ToleranceConfig& tol = {});
ComplexMatrix mat_pow_complex(const ComplexMatrix& m, Complex z, const ToleranceConfig& tol = {});
/// Exponential of a Hermitian matrix via its eigendecomposition.
ComplexMatrix mat_exp_hermitian(const ComplexMatrix& m);

/// Throws RankDeficient when the smallest eigenvalue is below tol.rank_floor.
void require_full_rank(const EigenSystem& es, const ToleranceConfig& tol, const char* who);

/// (tr |m|^p)^{1/p} from singular values; p = kInfinity gives the operator norm.
double schatten_norm(const ComplexMatrix& m, double p);
RealVector singular_values(const ComplexMatrix& m);

/// tr[a^dagger b]
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// tr[sqrt(rho) f sqrt(rho) g], real part. rho must be full rank.
double weighted_inner(const ComplexMatrix& f, const ComplexMatrix& g, const ComplexMatrix& rho,
                      const ToleranceConfig& tol = {});

bool is_hermitian(const ComplexMatrix& m, double tol);

}  // namespace qfactor
