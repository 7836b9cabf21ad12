#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace qfactor {

enum class TrivialSites { Reject, Allow };

/// Ordered local dimensions of a tensor-product Hilbert space.
///
/// Site 0 is the leftmost Kronecker factor: the flat index of a basis vector
/// is sum_k digit_k * stride_k with stride_k = prod_{j > k} dims_j.
class HilbertLayout {
 public:
  static constexpr int kMaxSites = 30;

  HilbertLayout() = default;
  explicit HilbertLayout(std::vector<int> dims, TrivialSites trivial = TrivialSites::Reject);
  HilbertLayout(std::initializer_list<int> dims) : HilbertLayout(std::vector<int>(dims)) {}

  /// `n` copies of a two-level site.
  static HilbertLayout qubits(int n);

  const std::vector<int>& dims() const noexcept { return dims_; }
  int site_count() const noexcept { return static_cast<int>(dims_.size()); }
  int dim(int site) const { return dims_.at(site); }
  int total_dim() const noexcept { return total_dim_; }
  int stride(int site) const { return strides_.at(site); }

  std::string to_string() const;

  friend bool operator==(const HilbertLayout& a, const HilbertLayout& b) { return a.dims_ == b.dims_; }

 private:
  std::vector<int> dims_;
  std::vector<int> strides_;
  int total_dim_ = 1;
};

/// Subset of sites of a layout with `site_count` sites; bit k set means site k belongs.
class Region {
 public:
  Region() = default;
  Region(int site_count, std::initializer_list<int> sites);
  Region(int site_count, const std::vector<int>& sites);

  static Region from_mask(int site_count, std::uint32_t mask);
  static Region all(int site_count);
  static Region none(int site_count) { return from_mask(site_count, 0); }
  static Region single(int site_count, int site) { return Region(site_count, {site}); }

  std::uint32_t mask() const noexcept { return mask_; }
  int site_count() const noexcept { return site_count_; }
  bool contains(int site) const noexcept { return site >= 0 && site < site_count_ && ((mask_ >> site) & 1u); }
  bool empty() const noexcept { return mask_ == 0; }
  int size() const noexcept;
  std::vector<int> sites() const;

  Region complement() const;
  Region unite(const Region& other) const;
  Region intersect(const Region& other) const;
  Region minus(const Region& other) const;
  bool disjoint(const Region& other) const;

  /// Product of the local dimensions of the member sites.
  int dim(const HilbertLayout& layout) const;
  /// Layout of the member sites, in increasing site order.
  HilbertLayout sublayout(const HilbertLayout& layout) const;
  /// Throws InvalidRegion unless this region was built for `layout`.
  void check(const HilbertLayout& layout) const;

  friend bool operator==(const Region& a, const Region& b) {
    return a.mask_ == b.mask_ && a.site_count_ == b.site_count_;
  }

 private:
  Region(int site_count, std::uint32_t mask, bool) : site_count_(site_count), mask_(mask) {}

  int site_count_ = 0;
  std::uint32_t mask_ = 0;
};

}  // namespace qfactor
