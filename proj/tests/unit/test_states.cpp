#include <cmath>
#include <numbers>

#include "support.hpp"

namespace qfactor {
namespace {

using testing::max_abs_diff;

TEST(Seeds, SplitMixReferenceValue) {
  // First output of the reference splitmix64 generator seeded with 0.
  EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFull);
}

TEST(Seeds, DerivationIsDeterministicAndSpreads) {
  EXPECT_EQ(derive_seed(Seed{42}, 3), derive_seed(Seed{42}, 3));
  EXPECT_FALSE(derive_seed(Seed{42}, 3) == derive_seed(Seed{42}, 4));
  EXPECT_FALSE(derive_seed(Seed{42}, 3) == derive_seed(Seed{43}, 3));
  EXPECT_EQ(derive_seed(Seed{7}, 0).value, splitmix64(7 + 0x9E3779B97F4A7C15ull));
}

TEST(GaussianStream, FirstTwoMoments) {
  GaussianStream rng(Seed{1});
  constexpr int n = 200000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sq += x * x;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sq / n, 1.0, 0.01);
}

TEST(GaussianStream, SameSeedSameStream) {
  GaussianStream a(Seed{9}), b(Seed{9});
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.normal(), b.normal());
}

TEST(RandomUnitary, IsUnitary) {
  const ComplexMatrix u = random_unitary(6, Seed{2});
  EXPECT_LT(max_abs_diff(u.adjoint() * u, ComplexMatrix::Identity(6, 6)), 1e-12);
}

TEST(RandomUnitary, HaarFirstMoments) {
  // Haar: E[U_00] = 0 and E[|U_00|^2] = 1/d.
  constexpr int d = 4, n = 4000;
  Complex mean = 0.0;
  double second = 0.0;
  for (int k = 0; k < n; ++k) {
    const ComplexMatrix u = random_unitary(d, derive_seed(Seed{3}, k));
    mean += u(0, 0);
    second += std::norm(u(0, 0));
  }
  EXPECT_LT(std::abs(mean / double(n)), 0.03);
  EXPECT_NEAR(second / n, 1.0 / d, 0.01);
}

TEST(RandomStates, MixedIsValidFullRankAndReproducible) {
  const HilbertLayout layout({2, 3});
  const DensityMatrix a = random_mixed(layout, Seed{4});
  const DensityMatrix b = random_mixed(layout, Seed{4});
  EXPECT_TRUE(a.is_full_rank());
  EXPECT_EQ(max_abs_diff(a.matrix(), b.matrix()), 0.0);
  EXPECT_NEAR(a.matrix().trace().real(), 1.0, 1e-12);
}

TEST(RandomStates, PureHasUnitPurity) {
  const DensityMatrix p = random_pure(HilbertLayout::qubits(3), Seed{5});
  EXPECT_NEAR(p.purity(), 1.0, 1e-12);
}

TEST(RandomStates, DepolarizeMixesWithIdentity) {
  const DensityMatrix p = random_pure(HilbertLayout::qubits(2), Seed{6});
  const DensityMatrix q = depolarize(p, 0.25);
  EXPECT_LT(max_abs_diff(q.matrix(), 0.75 * p.matrix() + 0.0625 * ComplexMatrix::Identity(4, 4)), 1e-14);
  EXPECT_NEAR(q.min_eigenvalue(), 0.0625, 1e-12);
  EXPECT_THROW(depolarize(p, 1.5), std::invalid_argument);
}

TEST(RandomStates, ProductStateIsKronecker) {
  const auto factors = random_product_factors(HilbertLayout({2, 3}), Seed{7});
  const DensityMatrix prod = product_state(factors);
  EXPECT_LT(max_abs_diff(prod.matrix(), kron(factors[0].matrix(), factors[1].matrix())), 1e-15);
  EXPECT_EQ(prod.layout(), HilbertLayout({2, 3}));
}

TEST(RandomStates, ClassicalStateValidation) {
  const HilbertLayout layout = HilbertLayout::qubits(1);
  EXPECT_NO_THROW(classical_state(std::vector<double>{0.25, 0.75}, layout));
  EXPECT_THROW(classical_state(std::vector<double>{0.5, 0.6}, layout), InvalidState);
  EXPECT_THROW(classical_state(std::vector<double>{1.5, -0.5}, layout), InvalidState);
  EXPECT_THROW(classical_state(std::vector<double>{1.0}, layout), DimensionMismatch);
}

TEST(DensityMatrix, RejectsInvalidMatrices) {
  const HilbertLayout layout = HilbertLayout::qubits(1);
  ComplexMatrix m = ComplexMatrix::Identity(2, 2) * 0.5;
  EXPECT_NO_THROW(DensityMatrix(m, layout));
  m(0, 1) = 0.1;
  EXPECT_THROW(DensityMatrix(m, layout), InvalidState);
  EXPECT_THROW(DensityMatrix(ComplexMatrix::Identity(2, 2), layout), InvalidState);
  ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix(neg, layout), InvalidState);
  EXPECT_THROW(DensityMatrix(ComplexMatrix::Identity(3, 3) / 3.0, layout), DimensionMismatch);
}

TEST(DensityMatrix, MarginalOfProduct) {
  const auto factors = random_product_factors(HilbertLayout({2, 2, 3}), Seed{8});
  const DensityMatrix prod = product_state(factors);
  const DensityMatrix m = prod.marginal(prod.region({2}));
  EXPECT_LT(max_abs_diff(m.matrix(), factors[2].matrix()), 1e-14);
  EXPECT_EQ(m.layout(), HilbertLayout({3}));
}

TEST(DensityMatrix, MaximallyMixed) {
  const DensityMatrix tau = maximally_mixed(HilbertLayout({2, 2}));
  EXPECT_NEAR(tau.purity(), 0.25, 1e-15);
}

}  // namespace
}  // namespace qfactor
