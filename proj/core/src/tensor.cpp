#include "qfactor/tensor.hpp"

#include <string>
#include <vector>

#include "qfactor/errors.hpp"

namespace qfactor {
namespace {

// Flat full-space offsets of every basis state of `region`, enumerated with the
// lowest member site as the most significant digit.
std::vector<int> region_offsets(const HilbertLayout& layout, const Region& region) {
  std::vector<int> offsets{0};
  for (int s : region.sites()) {
    std::vector<int> next;
    next.reserve(offsets.size() * layout.dim(s));
    for (int base : offsets)
      for (int d = 0; d < layout.dim(s); ++d) next.push_back(base + d * layout.stride(s));
    offsets = std::move(next);
  }
  return offsets;
}

void check_square(const ComplexMatrix& m, int dim, const char* what) {
  if (m.rows() != dim || m.cols() != dim) {
    throw DimensionMismatch(std::string(what) + ": expected " + std::to_string(dim) + "x" + std::to_string(dim) +
                            ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& m, const HilbertLayout& layout, const Region& traced) {
  traced.check(layout);
  check_square(m, layout.total_dim(), "partial_trace");
  const auto kept = region_offsets(layout, traced.complement());
  const auto summed = region_offsets(layout, traced);
  const auto n = static_cast<Eigen::Index>(kept.size());
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      Complex acc = 0.0;
      for (int k : summed) acc += m(kept[i] + k, kept[j] + k);
      out(i, j) = acc;
    }
  return out;
}

ComplexMatrix marginal(const ComplexMatrix& m, const HilbertLayout& layout, const Region& kept) {
  return partial_trace(m, layout, kept.complement());
}

ComplexMatrix embed(const ComplexMatrix& op, const Region& support, const HilbertLayout& layout) {
  support.check(layout);
  check_square(op, support.dim(layout), "embed");
  const auto inside = region_offsets(layout, support);
  const auto outside = region_offsets(layout, support.complement());
  const int d = layout.total_dim();
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  const auto n = static_cast<Eigen::Index>(inside.size());
  for (int k : outside)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i) out(inside[i] + k, inside[j] + k) = op(i, j);
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return (m + m.adjoint()) * 0.5; }

}  // namespace qfactor
