#include "qfactor/hermitian.hpp"

#include <cmath>
#include <string>

#include "qfactor/errors.hpp"

namespace qfactor {

EigenSystem eigh(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("eigh: matrix is not square");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(m));
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigh: decomposition failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix apply_function(const EigenSystem& es, const std::function<Complex(double)>& f) {
  const auto n = es.values.size();
  Eigen::VectorXcd fv(n);
  for (Eigen::Index i = 0; i < n; ++i) fv(i) = f(es.values(i));
  return es.vectors * fv.asDiagonal() * es.vectors.adjoint();
}

void require_full_rank(const EigenSystem& es, const ToleranceConfig& tol, const char* who) {
  if (es.min() < tol.rank_floor) {
    throw RankDeficient(std::string(who) + ": eigenvalue " + std::to_string(es.min()) + " below rank floor",
                        es.min());
  }
}

ComplexMatrix mat_log(const ComplexMatrix& m, const ToleranceConfig& tol) {
  const auto es = eigh(m);
  require_full_rank(es, tol, "mat_log");
  return apply_function(es, [](double x) { return Complex(std::log(x), 0.0); });
}

ComplexMatrix mat_sqrt(const ComplexMatrix& m) {
  const auto es = eigh(m);
  return apply_function(es, [](double x) { return Complex(x > 0.0 ? std::sqrt(x) : 0.0, 0.0); });
}

ComplexMatrix mat_pow(const ComplexMatrix& m, double exponent, const ToleranceConfig& tol) {
  const auto es = eigh(m);
  require_full_rank(es, tol, "mat_pow");
  return apply_function(es, [exponent](double x) { return Complex(std::pow(x, exponent), 0.0); });
}

ComplexMatrix mat_pow_complex(const ComplexMatrix& m, Complex z, const ToleranceConfig& tol) {
  const auto es = eigh(m);
  require_full_rank(es, tol, "mat_pow_complex");
  return apply_function(es, [z](double x) { return std::exp(z * std::log(x)); });
}

ComplexMatrix mat_exp_hermitian(const ComplexMatrix& m) {
  const auto es = eigh(m);
  return apply_function(es, [](double x) { return Complex(std::exp(x), 0.0); });
}

RealVector singular_values(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues();
}

double schatten_norm(const ComplexMatrix& m, double p) {
  if (!(p >= 1.0)) throw InvalidOrder("schatten_norm: order must be >= 1, got " + std::to_string(p));
  const RealVector s = singular_values(m);
  if (s.size() == 0) return 0.0;
  if (std::isinf(p)) return s.maxCoeff();
  if (p == 1.0) return s.sum();
  // Scale by the largest value so large p does not overflow.
  const double top = s.maxCoeff();
  if (top == 0.0) return 0.0;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) acc += std::pow(s(i) / top, p);
  return top * std::pow(acc, 1.0 / p);
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("hs_inner: shape mismatch");
  return (a.adjoint() * b).trace();
}

double weighted_inner(const ComplexMatrix& f, const ComplexMatrix& g, const ComplexMatrix& rho,
                      const ToleranceConfig& tol) {
  if (f.rows() != rho.rows() || g.rows() != rho.rows() || f.cols() != rho.cols() || g.cols() != rho.cols()) {
    throw DimensionMismatch("weighted_inner: shape mismatch");
  }
  const auto es = eigh(rho);
  require_full_rank(es, tol, "weighted_inner");
  const ComplexMatrix root = apply_function(es, [](double x) { return Complex(std::sqrt(x), 0.0); });
  return (root * f * root * g).trace().real();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return m.size() == 0 || (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace qfactor
