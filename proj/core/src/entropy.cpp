#include "qfactor/entropy.hpp"

#include <cmath>

#include "qfactor/errors.hpp"

namespace qfactor {
namespace {

void require_same_layout(const DensityMatrix& rho, const DensityMatrix& sigma, const char* who) {
  if (!(rho.layout() == sigma.layout())) {
    throw DimensionMismatch(std::string(who) + ": layouts " + rho.layout().to_string() + " and " +
                            sigma.layout().to_string() + " differ");
  }
}

// sum lambda ln lambda over strictly positive eigenvalues.
double neg_entropy_of_spectrum(const RealVector& values) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const double l = values(i);
    if (l > 0.0) acc += l * std::log(l);
  }
  return acc;
}

void require_disjoint(const Region& a, const Region& b, const char* who) {
  if (!a.disjoint(b)) throw InvalidRegion(std::string(who) + ": regions overlap");
}

}  // namespace

double von_neumann(const DensityMatrix& rho) { return -neg_entropy_of_spectrum(eigh(rho.matrix()).values); }

double shannon_entropy(const RealVector& probabilities) { return -neg_entropy_of_spectrum(probabilities); }

EntropyReport relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, const ToleranceConfig& tol) {
  require_same_layout(rho, sigma, "relative_entropy");
  const EigenSystem er = eigh(rho.matrix());
  const EigenSystem es = eigh(sigma.matrix());
  // Diagonal of rho in sigma's eigenbasis: <v_k| rho |v_k>.
  const ComplexMatrix rho_in_sigma = es.vectors.adjoint() * rho.matrix() * es.vectors;

  double cross = 0.0;
  double kernel_weight = 0.0;
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    const double w = rho_in_sigma(k, k).real();
    if (es.values(k) < tol.rank_floor) {
      kernel_weight += w;
    } else {
      cross += w * std::log(es.values(k));
    }
  }
  if (kernel_weight > tol.rank_floor) return {kInfinity, false, false};
  return {neg_entropy_of_spectrum(er.values) - cross, true, true};
}

double relative_entropy_value(const DensityMatrix& rho, const DensityMatrix& sigma, const ToleranceConfig& tol) {
  const EntropyReport r = relative_entropy(rho, sigma, tol);
  if (!r.finite) throw RankDeficient("relative_entropy: support of rho not contained in support of sigma", 0.0);
  return r.value;
}

double mutual_information(const DensityMatrix& rho, const Region& a, const Region& b) {
  a.check(rho.layout());
  b.check(rho.layout());
  require_disjoint(a, b, "mutual_information");
  if (a.empty() || b.empty()) return 0.0;
  const Region ab = a.unite(b);
  const DensityMatrix rho_ab = rho.marginal(ab);
  // Regions re-expressed on the sites of ab.
  const std::vector<int> ab_sites = ab.sites();
  std::vector<int> a_local, b_local;
  for (int k = 0; k < static_cast<int>(ab_sites.size()); ++k)
    (a.contains(ab_sites[k]) ? a_local : b_local).push_back(k);
  const int n = ab.size();
  const Region ra(n, a_local), rb(n, b_local);
  const ComplexMatrix product = embed(rho.marginal(a).matrix(), ra, rho_ab.layout()) *
                                embed(rho.marginal(b).matrix(), rb, rho_ab.layout());
  const DensityMatrix prod(product, rho_ab.layout(), DensityMatrix::kComputedTol);
  return relative_entropy_value(rho_ab, prod);
}

double conditional_mutual_information(const DensityMatrix& rho, const Region& a, const Region& b, const Region& c) {
  a.check(rho.layout());
  b.check(rho.layout());
  c.check(rho.layout());
  require_disjoint(a, b, "conditional_mutual_information");
  require_disjoint(a, c, "conditional_mutual_information");
  require_disjoint(b, c, "conditional_mutual_information");
  const auto s = [&](const Region& r) { return r.empty() ? 0.0 : von_neumann(rho.marginal(r)); };
  const Region ab = a.unite(b), bc = b.unite(c), abc = ab.unite(c);
  return -s(abc) + s(bc) + s(ab) - s(b);
}

double conditional_entropy(const DensityMatrix& rho, const Region& a) {
  a.check(rho.layout());
  const Region rest = a.complement();
  return von_neumann(rho) - (rest.empty() ? 0.0 : von_neumann(rho.marginal(rest)));
}

ComplexMatrix min_cond_expectation(const ComplexMatrix& f, const DensityMatrix& sigma, const Region& a,
                                   const ToleranceConfig& tol) {
  const HilbertLayout& layout = sigma.layout();
  a.check(layout);
  if (f.rows() != sigma.dim() || f.cols() != sigma.dim())
    throw DimensionMismatch("min_cond_expectation: observable shape differs from sigma");
  require_full_rank(eigh(sigma.matrix()), tol, "min_cond_expectation");
  const Region b = a.complement();
  const ComplexMatrix sqrt_sigma = mat_sqrt(sigma.matrix());
  const ComplexMatrix inner = partial_trace(sqrt_sigma * f * sqrt_sigma, layout, a);
  if (b.empty()) return inner;
  const ComplexMatrix sb_inv_half = mat_pow(marginal(sigma.matrix(), layout, b), -0.5, tol);
  return sb_inv_half * inner * sb_inv_half;
}

ComplexMatrix petz_recovery_map(const ComplexMatrix& x, const DensityMatrix& sigma, const Region& a,
                                const ToleranceConfig& tol) {
  const HilbertLayout& layout = sigma.layout();
  a.check(layout);
  if (x.rows() != sigma.dim() || x.cols() != sigma.dim())
    throw DimensionMismatch("petz_recovery: operand shape differs from sigma");
  require_full_rank(eigh(sigma.matrix()), tol, "petz_recovery");
  const Region b = a.complement();
  const ComplexMatrix sqrt_sigma = mat_sqrt(sigma.matrix());
  ComplexMatrix middle;
  if (b.empty()) {
    // Complement is trivial: sigma^{1/2} sigma^{1/2} tr[x].
    middle = ComplexMatrix::Identity(sigma.dim(), sigma.dim()) * x.trace();
  } else {
    const ComplexMatrix sb_inv_half = mat_pow(marginal(sigma.matrix(), layout, b), -0.5, tol);
    middle = embed(sb_inv_half * marginal(x, layout, b) * sb_inv_half, b, layout);
  }
  return sqrt_sigma * middle * sqrt_sigma;
}

DensityMatrix petz_recovery(const DensityMatrix& rho, const DensityMatrix& sigma, const Region& a,
                            const ToleranceConfig& tol) {
  require_same_layout(rho, sigma, "petz_recovery");
  return DensityMatrix(petz_recovery_map(rho.matrix(), sigma, a, tol), sigma.layout(), DensityMatrix::kComputedTol);
}

DensityMatrix markov_state(const DensityMatrix& tau, const DensityMatrix& sigma, const Region& a,
                           const ToleranceConfig& tol) {
  return petz_recovery(tau, sigma, a, tol);
}

double cond_rel_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, const Region& a,
                        const ToleranceConfig& tol) {
  require_same_layout(rho, sigma, "cond_rel_entropy");
  a.check(rho.layout());
  require_full_rank(eigh(rho.matrix()), tol, "cond_rel_entropy (rho)");
  require_full_rank(eigh(sigma.matrix()), tol, "cond_rel_entropy (sigma)");
  const double full = relative_entropy_value(rho, sigma, tol);
  const Region b = a.complement();
  if (b.empty()) return full;
  return full - relative_entropy_value(rho.marginal(b), sigma.marginal(b), tol);
}

double cond_rel_entropy_exp(const DensityMatrix& rho, const DensityMatrix& sigma, const Region& a,
                            const ToleranceConfig& tol) {
  const DensityMatrix recovered = petz_recovery(rho, sigma, a, tol);
  const EntropyReport r = relative_entropy(rho, recovered, tol);
  return r.finite ? r.value : kInfinity;
}

DensityMatrix rho_built_petz_state(const DensityMatrix& rho, const Region& a, const Region& b, const Region& c,
                                   const ToleranceConfig& tol) {
  const HilbertLayout& layout = rho.layout();
  a.check(layout);
  b.check(layout);
  c.check(layout);
  require_disjoint(a, b, "compare_definitions");
  require_disjoint(a, c, "compare_definitions");
  require_disjoint(b, c, "compare_definitions");
  if (a.unite(b).unite(c) != Region::all(layout.site_count()))
    throw InvalidRegion("compare_definitions: regions must partition the layout");
  if (a.empty() || c.empty()) throw InvalidRegion("compare_definitions: A and C must be nonempty");

  const Region ab = a.unite(b), bc = b.unite(c);
  const ComplexMatrix bc_half = embed(mat_sqrt(marginal(rho.matrix(), layout, bc)), bc, layout);
  ComplexMatrix middle = embed(marginal(rho.matrix(), layout, ab), ab, layout);
  if (!b.empty()) {
    const ComplexMatrix b_inv_half = embed(mat_pow(marginal(rho.matrix(), layout, b), -0.5, tol), b, layout);
    middle = b_inv_half * middle * b_inv_half;
  }
  return DensityMatrix(bc_half * middle * bc_half, layout, DensityMatrix::kComputedTol);
}

ComparisonRecord compare_definitions(const DensityMatrix& rho, const Region& a, const Region& b, const Region& c,
                                     double equal_tol, const ToleranceConfig& tol) {
  ComparisonRecord rec;
  const DensityMatrix petz = rho_built_petz_state(rho, a, b, c, tol);
  rec.lhs = conditional_mutual_information(rho, a, b, c);
  const EntropyReport r = relative_entropy(rho, petz, tol);
  rec.rhs = r.value;
  rec.finite = r.finite;
  const double diff = rec.lhs - rec.rhs;
  if (!rec.finite) {
    rec.ordering = Ordering::RhsGreater;
  } else if (std::abs(diff) <= equal_tol) {
    rec.ordering = Ordering::Equal;
  } else {
    rec.ordering = diff > 0 ? Ordering::LhsGreater : Ordering::RhsGreater;
  }
  return rec;
}

ComparisonRecord compare_definitions(const DensityMatrix& rho, const Region& b, double equal_tol,
                                     const ToleranceConfig& tol) {
  const int n = rho.layout().site_count();
  if (n != 3 || b.size() != 1) throw InvalidRegion("compare_definitions: expects 3 sites and a single-site B");
  b.check(rho.layout());
  const std::vector<int> rest = b.complement().sites();
  return compare_definitions(rho, Region::single(n, rest[0]), b, Region::single(n, rest[1]), equal_tol, tol);
}

}  // namespace qfactor
