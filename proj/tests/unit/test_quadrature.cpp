#include <cmath>
#include <numbers>

#include "support.hpp"

namespace qfactor {
namespace {

TEST(Beta0, ValueAtZeroAndEvenness) {
  EXPECT_NEAR(beta0(0.0), std::numbers::pi / 4.0, 1e-15);
  GaussianStream rng(Seed{1});
  for (int k = 0; k < 20; ++k) {
    const double t = 10.0 * rng.normal();
    EXPECT_EQ(beta0(t), beta0(-t));
    EXPECT_GE(beta0(t), 0.0);
  }
  EXPECT_EQ(beta0(1e6), 0.0);
}

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  for (int n : {1, 2, 5, 16}) {
    const auto rule = gauss_legendre(n);
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    EXPECT_NEAR(wsum, 2.0, 1e-14);
    // x^k for k <= 2n - 1 integrates to 2/(k+1) for even k, 0 for odd k.
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += rule.weights[i] * std::pow(rule.nodes[i], k);
      EXPECT_NEAR(acc, k % 2 ? 0.0 : 2.0 / (k + 1), 1e-13) << "n=" << n << " k=" << k;
    }
    for (int i = 1; i < n; ++i) EXPECT_LT(rule.nodes[i - 1], rule.nodes[i]);
  }
}

TEST(QuadratureScheme, DefaultSchemeIntegratesBetaToOne) {
  const QuadratureScheme quad;
  EXPECT_EQ(quad.size(), 48u * 16u);
  EXPECT_NEAR(quad.integrate_beta([](double) { return 1.0; }), 1.0, 1e-10);
  EXPECT_LT(quad.tail_bound(), 1e-12);
}

TEST(QuadratureScheme, ExactTailMatchesBound) {
  // int_{|t|>T} beta0 = 1 - tanh(pi T / 2) <= 2 e^{-pi T}.
  const QuadratureScheme quad(9.5, 40, 16);
  const double inside = quad.integrate_beta([](double) { return 1.0; });
  const double exact_tail = 1.0 - std::tanh(std::numbers::pi * 9.5 / 2.0);
  EXPECT_NEAR(1.0 - inside, exact_tail, 1e-13);
  EXPECT_LE(exact_tail, quad.tail_bound());
}

TEST(QuadratureScheme, FourierTransformOfBeta) {
  // int beta0(t) cos(w t) dt = w / sinh(w)
  const QuadratureScheme quad;
  for (double w : {0.3, 1.0, 2.5, 4.0}) {
    EXPECT_NEAR(quad.integrate_beta([w](double t) { return std::cos(w * t); }), w / std::sinh(w), 1e-10);
  }
}

TEST(QuadratureScheme, RejectsShortWindow) {
  EXPECT_THROW(QuadratureScheme(8.0, 48, 16), QuadratureTailTooLarge);
  EXPECT_NO_THROW(QuadratureScheme(9.1, 48, 16));
  EXPECT_THROW(QuadratureScheme(12.0, 0, 16), std::invalid_argument);
}

}  // namespace
}  // namespace qfactor
