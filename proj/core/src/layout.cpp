#include "qfactor/layout.hpp"

#include <bit>
#include <sstream>

#include "qfactor/errors.hpp"

namespace qfactor {

HilbertLayout::HilbertLayout(std::vector<int> dims, TrivialSites trivial) : dims_(std::move(dims)) {
  if (site_count() > kMaxSites) throw DimensionMismatch("HilbertLayout: too many sites");
  const int min_dim = trivial == TrivialSites::Allow ? 1 : 2;
  strides_.assign(dims_.size(), 1);
  long long total = 1;
  for (int k = site_count() - 1; k >= 0; --k) {
    if (dims_[k] < min_dim) {
      throw DimensionMismatch("HilbertLayout: site " + std::to_string(k) + " has dimension " +
                              std::to_string(dims_[k]));
    }
    strides_[k] = static_cast<int>(total);
    total *= dims_[k];
    if (total > (1 << 20)) throw DimensionMismatch("HilbertLayout: total dimension too large");
  }
  total_dim_ = static_cast<int>(total);
}

HilbertLayout HilbertLayout::qubits(int n) { return HilbertLayout(std::vector<int>(n, 2)); }

std::string HilbertLayout::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < dims_.size(); ++k) os << (k ? "," : "") << dims_[k];
  return os.str();
}

Region::Region(int site_count, std::initializer_list<int> sites) : Region(site_count, std::vector<int>(sites)) {}

Region::Region(int site_count, const std::vector<int>& sites) : site_count_(site_count) {
  if (site_count < 0 || site_count > HilbertLayout::kMaxSites) throw InvalidRegion("Region: bad site count");
  for (int s : sites) {
    if (s < 0 || s >= site_count) throw InvalidRegion("Region: site " + std::to_string(s) + " out of range");
    mask_ |= 1u << s;
  }
}

Region Region::from_mask(int site_count, std::uint32_t mask) {
  if (site_count < 0 || site_count > HilbertLayout::kMaxSites) throw InvalidRegion("Region: bad site count");
  const std::uint32_t full = site_count == 32 ? ~0u : ((1u << site_count) - 1u);
  if (mask & ~full) throw InvalidRegion("Region: mask outside layout");
  return Region(site_count, mask, true);
}

Region Region::all(int site_count) {
  return from_mask(site_count, site_count == 32 ? ~0u : ((1u << site_count) - 1u));
}

int Region::size() const noexcept { return std::popcount(mask_); }

std::vector<int> Region::sites() const {
  std::vector<int> out;
  for (int k = 0; k < site_count_; ++k)
    if ((mask_ >> k) & 1u) out.push_back(k);
  return out;
}

Region Region::complement() const { return from_mask(site_count_, all(site_count_).mask_ & ~mask_); }

Region Region::unite(const Region& other) const {
  if (other.site_count_ != site_count_) throw InvalidRegion("Region: mixing layouts");
  return from_mask(site_count_, mask_ | other.mask_);
}

Region Region::intersect(const Region& other) const {
  if (other.site_count_ != site_count_) throw InvalidRegion("Region: mixing layouts");
  return from_mask(site_count_, mask_ & other.mask_);
}

Region Region::minus(const Region& other) const {
  if (other.site_count_ != site_count_) throw InvalidRegion("Region: mixing layouts");
  return from_mask(site_count_, mask_ & ~other.mask_);
}

bool Region::disjoint(const Region& other) const { return (mask_ & other.mask_) == 0; }

int Region::dim(const HilbertLayout& layout) const {
  check(layout);
  int d = 1;
  for (int s : sites()) d *= layout.dim(s);
  return d;
}

HilbertLayout Region::sublayout(const HilbertLayout& layout) const {
  check(layout);
  std::vector<int> dims;
  for (int s : sites()) dims.push_back(layout.dim(s));
  return HilbertLayout(std::move(dims), TrivialSites::Allow);
}

void Region::check(const HilbertLayout& layout) const {
  if (layout.site_count() != site_count_) {
    throw InvalidRegion("Region built for " + std::to_string(site_count_) + " sites used with a " +
                        std::to_string(layout.site_count()) + "-site layout");
  }
}

}  // namespace qfactor
