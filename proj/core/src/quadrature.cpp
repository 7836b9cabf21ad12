#include "qfactor/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qfactor/errors.hpp"

namespace qfactor {

double beta0(double t) {
  const double x = std::abs(t) * std::numbers::pi;
  // cosh overflows near x = 710; beta0 is below 1e-300 long before that.
  if (x > 700.0) return 0.0;
  return 0.5 * std::numbers::pi / (std::cosh(x) + 1.0);
}

GaussLegendreRule gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
  GaussLegendreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-style initial guess for the (i+1)-th largest root, then Newton.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged root.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = order * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[order - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[order - 1 - i] = w;
    rule.weights[i] = w;
  }
  return rule;
}

QuadratureScheme::QuadratureScheme(double half_width, int panels, int order)
    : half_width_(half_width), panels_(panels), order_(order) {
  if (panels < 1 || order < 1) throw std::invalid_argument("QuadratureScheme: panels and order must be positive");
  if (!(tail_bound() <= kMaxTail)) {
    throw QuadratureTailTooLarge("QuadratureScheme: tail bound " + std::to_string(tail_bound()) +
                                 " exceeds 1e-12 for half-width " + std::to_string(half_width));
  }
  const GaussLegendreRule rule = gauss_legendre(order);
  const double h = 2.0 * half_width / panels;
  nodes_.reserve(static_cast<std::size_t>(panels) * order);
  for (int p = 0; p < panels; ++p) {
    const double mid = -half_width + (p + 0.5) * h;
    for (int k = 0; k < order; ++k) {
      const double t = mid + 0.5 * h * rule.nodes[k];
      nodes_.push_back(t);
      weights_.push_back(0.5 * h * rule.weights[k]);
      beta_weights_.push_back(weights_.back() * beta0(t));
    }
  }
}

double QuadratureScheme::tail_bound() const { return 2.0 * std::exp(-std::numbers::pi * half_width_); }

double QuadratureScheme::integrate(const std::function<double(double)>& f) const {
  double acc = 0.0;
  for (std::size_t k = 0; k < nodes_.size(); ++k) acc += weights_[k] * f(nodes_[k]);
  return acc;
}

double QuadratureScheme::integrate_beta(const std::function<double(double)>& f) const {
  double acc = 0.0;
  for (std::size_t k = 0; k < nodes_.size(); ++k) acc += beta_weights_[k] * f(nodes_[k]);
  return acc;
}

}  // namespace qfactor
