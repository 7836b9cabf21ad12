#include "support.hpp"

namespace qfactor {
namespace {

using testing::digits_of;
using testing::index_of;
using testing::max_abs_diff;
using testing::random_matrix;

// Direct digit-matching evaluation of the partial trace.
ComplexMatrix partial_trace_oracle(const ComplexMatrix& m, const std::vector<int>& dims, const Region& traced) {
  const int total = static_cast<int>(m.rows());
  std::vector<int> kept_dims;
  for (int k = 0; k < static_cast<int>(dims.size()); ++k)
    if (!traced.contains(k)) kept_dims.push_back(dims[k]);
  int kept_total = 1;
  for (int d : kept_dims) kept_total *= d;
  ComplexMatrix out = ComplexMatrix::Zero(kept_total, kept_total);
  for (int r = 0; r < total; ++r)
    for (int c = 0; c < total; ++c) {
      const auto dr = digits_of(r, dims), dc = digits_of(c, dims);
      bool match = true;
      std::vector<int> kr, kc;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (traced.contains(static_cast<int>(k))) {
          match = match && dr[k] == dc[k];
        } else {
          kr.push_back(dr[k]);
          kc.push_back(dc[k]);
        }
      }
      if (match) out(index_of(kr, kept_dims), index_of(kc, kept_dims)) += m(r, c);
    }
  return out;
}

// op on `support` placed by digit matching, identity on the rest.
ComplexMatrix embed_oracle(const ComplexMatrix& op, const std::vector<int>& dims, const Region& support) {
  int total = 1;
  for (int d : dims) total *= d;
  std::vector<int> sup_dims;
  for (int k = 0; k < static_cast<int>(dims.size()); ++k)
    if (support.contains(k)) sup_dims.push_back(dims[k]);
  ComplexMatrix out = ComplexMatrix::Zero(total, total);
  for (int r = 0; r < total; ++r)
    for (int c = 0; c < total; ++c) {
      const auto dr = digits_of(r, dims), dc = digits_of(c, dims);
      bool match = true;
      std::vector<int> sr, sc;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (support.contains(static_cast<int>(k))) {
          sr.push_back(dr[k]);
          sc.push_back(dc[k]);
        } else {
          match = match && dr[k] == dc[k];
        }
      }
      if (match) out(r, c) = op(index_of(sr, sup_dims), index_of(sc, sup_dims));
    }
  return out;
}

TEST(HilbertLayout, StridesPutSiteZeroFirst) {
  const HilbertLayout layout({2, 3, 4});
  EXPECT_EQ(layout.total_dim(), 24);
  EXPECT_EQ(layout.stride(0), 12);
  EXPECT_EQ(layout.stride(1), 4);
  EXPECT_EQ(layout.stride(2), 1);
  EXPECT_EQ(layout.to_string(), "2,3,4");
}

TEST(HilbertLayout, RejectsBadDimensions) {
  EXPECT_THROW(HilbertLayout({2, 1}), DimensionMismatch);
  EXPECT_THROW(HilbertLayout({2, 0}), DimensionMismatch);
  EXPECT_NO_THROW(HilbertLayout({2, 1}, TrivialSites::Allow));
  EXPECT_THROW(HilbertLayout::qubits(21), DimensionMismatch);
}

TEST(Region, SetAlgebra) {
  const Region a(4, {0, 2});
  const Region b(4, {2, 3});
  EXPECT_EQ(a.size(), 2);
  EXPECT_EQ(a.unite(b), Region(4, {0, 2, 3}));
  EXPECT_EQ(a.intersect(b), Region(4, {2}));
  EXPECT_EQ(a.minus(b), Region(4, {0}));
  EXPECT_EQ(a.complement(), Region(4, {1, 3}));
  EXPECT_FALSE(a.disjoint(b));
  EXPECT_TRUE(a.disjoint(Region(4, {1})));
  EXPECT_EQ(a.sites(), (std::vector<int>{0, 2}));
  EXPECT_THROW(Region(3, {3}), InvalidRegion);
  EXPECT_THROW(Region(3, {0}).check(HilbertLayout::qubits(2)), InvalidRegion);
}

TEST(PartialTrace, MatchesDigitOracleOnEveryRegion) {
  const std::vector<int> dims{2, 3, 2};
  const HilbertLayout layout(dims);
  const ComplexMatrix m = random_matrix(12, 12, Seed{5});
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    const Region traced = Region::from_mask(3, mask);
    EXPECT_LT(max_abs_diff(partial_trace(m, layout, traced), partial_trace_oracle(m, dims, traced)), 1e-12)
        << "mask " << mask;
  }
}

TEST(PartialTrace, FullTraceIsTrace) {
  const HilbertLayout layout({2, 2});
  const ComplexMatrix m = random_matrix(4, 4, Seed{6});
  const ComplexMatrix t = partial_trace(m, layout, Region::all(2));
  ASSERT_EQ(t.rows(), 1);
  EXPECT_NEAR(std::abs(t(0, 0) - m.trace()), 0.0, 1e-12);
}

TEST(PartialTrace, ProductStatesFactorize) {
  const ComplexMatrix a = random_matrix(2, 2, Seed{1});
  const ComplexMatrix b = random_matrix(3, 3, Seed{2});
  const HilbertLayout layout({2, 3});
  EXPECT_LT(max_abs_diff(partial_trace(kron(a, b), layout, Region(2, {1})), a * b.trace()), 1e-12);
  EXPECT_LT(max_abs_diff(partial_trace(kron(a, b), layout, Region(2, {0})), b * a.trace()), 1e-12);
}

TEST(PartialTrace, RejectsShapeMismatch) {
  EXPECT_THROW(partial_trace(ComplexMatrix::Zero(3, 3), HilbertLayout::qubits(2), Region(2, {0})), DimensionMismatch);
}

TEST(Embed, PauliZOnSiteZero) {
  const ComplexMatrix z0 = embed(testing::pauli_z(), Region(2, {0}), HilbertLayout::qubits(2));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.diagonal() << 1.0, 1.0, -1.0, -1.0;
  EXPECT_LT(max_abs_diff(z0, expected), 1e-15);
}

TEST(Embed, MatchesKroneckerOnContiguousSupport) {
  const HilbertLayout layout({2, 3, 2});
  const ComplexMatrix op = random_matrix(6, 6, Seed{3});
  const ComplexMatrix expected = kron(op, ComplexMatrix::Identity(2, 2));
  EXPECT_LT(max_abs_diff(embed(op, Region(3, {0, 1}), layout), expected), 1e-14);
}

TEST(Embed, MatchesDigitOracleOnNonContiguousSupport) {
  const std::vector<int> dims{2, 3, 2};
  const ComplexMatrix op = random_matrix(4, 4, Seed{4});
  const Region support(3, {0, 2});
  EXPECT_LT(max_abs_diff(embed(op, support, HilbertLayout(dims)), embed_oracle(op, dims, support)), 1e-14);
}

TEST(Embed, PartialTraceInvertsUpToDimension) {
  const HilbertLayout layout({3, 2});
  const ComplexMatrix x = random_matrix(2, 2, Seed{8});
  const Region b(2, {1});
  EXPECT_LT(max_abs_diff(marginal(embed(x, b, layout), layout, b), 3.0 * x), 1e-12);
}

TEST(Kron, SmallExample) {
  ComplexMatrix a(1, 2), b(2, 1);
  a << 1.0, 2.0;
  b << 3.0, Complex(0.0, 1.0);
  ComplexMatrix expected(2, 2);
  expected << 3.0, 6.0, Complex(0.0, 1.0), Complex(0.0, 2.0);
  EXPECT_LT(max_abs_diff(kron(a, b), expected), 1e-15);
}

}  // namespace
}  // namespace qfactor
