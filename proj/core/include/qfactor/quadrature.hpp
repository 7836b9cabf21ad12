#pragma once

#include <functional>
#include <vector>

namespace qfactor {

/// beta0(t) = (pi/2) / (cosh(pi t) + 1). Positive, even, unit mass on the real line.
double beta0(double t);

/// Gauss-Legendre nodes and weights of order n on [-1, 1], nodes ascending.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int order);

/// Composite Gauss-Legendre rule on [-T, T] for integrals against beta0.
/// The discarded tail mass is at most 2 exp(-pi T), which must not exceed kMaxTail.
class QuadratureScheme {
 public:
  static constexpr double kMaxTail = 1e-12;

  QuadratureScheme() : QuadratureScheme(12.0, 48, 16) {}
  /// Throws QuadratureTailTooLarge when 2 exp(-pi T) > kMaxTail, std::invalid_argument on
  /// nonpositive panel count or order.
  QuadratureScheme(double half_width, int panels, int order);

  double half_width() const noexcept { return half_width_; }
  int panels() const noexcept { return panels_; }
  int order() const noexcept { return order_; }
  double tail_bound() const;

  /// Global nodes on [-T, T] and their plain Gauss-Legendre weights.
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  /// weights()[k] * beta0(nodes()[k]).
  const std::vector<double>& beta_weights() const noexcept { return beta_weights_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  /// sum_k w_k f(t_k) over [-T, T].
  double integrate(const std::function<double(double)>& f) const;
  /// sum_k w_k beta0(t_k) f(t_k).
  double integrate_beta(const std::function<double(double)>& f) const;

 private:
  double half_width_;
  int panels_;
  int order_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<double> beta_weights_;
};

}  // namespace qfactor
