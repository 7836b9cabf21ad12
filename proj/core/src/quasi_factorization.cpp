#include "qfactor/quasi_factorization.hpp"

#include <cmath>

#include "qfactor/errors.hpp"

namespace qfactor {
namespace {

ComplexMatrix complex_power(const EigenSystem& es, Complex z) {
  return apply_function(es, [z](double l) { return std::exp(z * std::log(l)); });
}

EigenSystem full_rank_eigh(const ComplexMatrix& m, const ToleranceConfig& tol, const char* who) {
  EigenSystem es = eigh(m);
  require_full_rank(es, tol, who);
  return es;
}

ComplexMatrix identity(int d) { return ComplexMatrix::Identity(d, d); }

std::vector<DensityMatrix> single_site_marginals(const DensityMatrix& rho) {
  std::vector<DensityMatrix> out;
  const int n = rho.layout().site_count();
  for (int x = 0; x < n; ++x) out.push_back(rho.marginal(Region::single(n, x)));
  return out;
}

}  // namespace

QFResult make_qf_result(double lhs, double rhs, double error_factor) {
  QFResult r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.error_factor = error_factor;
  r.nontrivial = error_factor > 0.0;
  r.margin = rhs - error_factor * lhs;
  return r;
}

ComplexMatrix h_operator(const DensityMatrix& sigma, const Region& a, const Region& c, const ToleranceConfig& tol) {
  const HilbertLayout& layout = sigma.layout();
  a.check(layout);
  c.check(layout);
  if (!a.disjoint(c)) throw InvalidRegion("h_error_term: regions overlap");
  if (a.empty() || c.empty()) throw InvalidRegion("h_error_term: regions must be nonempty");
  const Region ac = a.unite(c);
  const DensityMatrix sigma_ac = sigma.marginal(ac);
  require_full_rank(eigh(sigma_ac.matrix()), tol, "h_error_term");
  // a and c re-expressed on the sites of ac.
  const std::vector<int> ac_sites = ac.sites();
  std::vector<int> a_local, c_local;
  for (int k = 0; k < static_cast<int>(ac_sites.size()); ++k)
    (a.contains(ac_sites[k]) ? a_local : c_local).push_back(k);
  const int n = ac.size();
  const HilbertLayout& sub = sigma_ac.layout();
  const ComplexMatrix scale = embed(mat_pow(marginal(sigma.matrix(), layout, a), -0.5, tol), Region(n, a_local), sub) *
                              embed(mat_pow(marginal(sigma.matrix(), layout, c), -0.5, tol), Region(n, c_local), sub);
  return scale * sigma_ac.matrix() * scale - identity(sigma_ac.dim());
}

double h_error_term(const DensityMatrix& sigma, const Region& a, const Region& c, const ToleranceConfig& tol) {
  return schatten_norm(h_operator(sigma, a, c, tol), kInfinity);
}

XiIntegrand::XiIntegrand(const DensityMatrix& sigma, const Region& a, const ToleranceConfig& tol)
    : layout_(sigma.layout()), a_(a), b_(a.complement()) {
  a.check(layout_);
  if (a_.empty() || b_.empty()) throw InvalidRegion("xi_error_term: a must be a proper nonempty region");
  es_ab_ = full_rank_eigh(sigma.matrix(), tol, "xi_error_term");
  es_a_ = full_rank_eigh(marginal(sigma.matrix(), layout_, a_), tol, "xi_error_term");
  es_b_ = full_rank_eigh(marginal(sigma.matrix(), layout_, b_), tol, "xi_error_term");
}

ComplexMatrix XiIntegrand::power_ab(Complex z) const { return complex_power(es_ab_, z); }
ComplexMatrix XiIntegrand::power_a(Complex z) const { return embed(complex_power(es_a_, z), a_, layout_); }
ComplexMatrix XiIntegrand::power_b(Complex z) const { return embed(complex_power(es_b_, z), b_, layout_); }

double XiIntegrand::e1(double t) const {
  const Complex z_marg(-0.5, 0.5 * t);
  const Complex z_ab(0.5, -0.5 * t);
  const ComplexMatrix s1 = power_b(z_marg) * power_ab(z_ab) * power_a(z_marg) - identity(layout_.total_dim());
  const ComplexMatrix other = power_a(-0.5) * power_ab(std::conj(z_ab)) * power_b(-0.5);
  return schatten_norm(s1, kInfinity) * schatten_norm(other, kInfinity);
}

double XiIntegrand::e2(double t) const {
  const Complex z_marg(-0.5, -0.5 * t);
  const Complex z_ab(0.5, 0.5 * t);
  const ComplexMatrix s2 = power_b(z_marg) * power_ab(z_ab) * power_a(z_marg) - identity(layout_.total_dim());
  return schatten_norm(s2, kInfinity);
}

XiTerm xi_components(const DensityMatrix& sigma, const Region& a, const QuadratureScheme& quad,
                     const ToleranceConfig& tol) {
  const XiIntegrand integrand(sigma, a, tol);
  XiTerm out;
  out.e1 = quad.integrate_beta([&](double t) { return integrand.e1(t); });
  out.e2 = quad.integrate_beta([&](double t) { return integrand.e2(t); });
  out.xi = 2.0 * (out.e1 + out.e2);
  return out;
}

double xi_error_term(const DensityMatrix& sigma, const Region& a, const QuadratureScheme& quad,
                     const ToleranceConfig& tol) {
  return xi_components(sigma, a, quad, tol).xi;
}

QFResult verify_product_qf(const DensityMatrix& rho, std::span<const DensityMatrix> sigma_factors,
                           const ToleranceConfig& tol) {
  const DensityMatrix sigma = product_state(sigma_factors);
  const int n = rho.layout().site_count();
  double rhs = 0.0;
  for (int x = 0; x < n; ++x) rhs += cond_rel_entropy(rho, sigma, Region::single(n, x), tol);
  return make_qf_result(relative_entropy_value(rho, sigma, tol), rhs, 1.0);
}

double shearer_margin(const DensityMatrix& rho) {
  const int n = rho.layout().site_count();
  double sum = 0.0;
  for (int x = 0; x < n; ++x) {
    const Region rest = Region::single(n, x).complement();
    if (!rest.empty()) sum += von_neumann(rho.marginal(rest));
  }
  return sum - (n - 1) * von_neumann(rho);
}

QFResult verify_overlap_qf(const DensityMatrix& rho, const DensityMatrix& sigma, const Region& ab, const Region& bc,
                           const ToleranceConfig& tol) {
  ab.check(rho.layout());
  bc.check(rho.layout());
  if (ab.unite(bc) != Region::all(rho.layout().site_count()))
    throw InvalidRegion("verify_overlap_qf: regions must cover the layout");
  const Region a = ab.minus(bc), c = bc.minus(ab);
  const double h = h_error_term(sigma, a, c, tol);
  const double rhs = cond_rel_entropy(rho, sigma, ab, tol) + cond_rel_entropy(rho, sigma, bc, tol);
  return make_qf_result(relative_entropy_value(rho, sigma, tol), rhs, 1.0 - 2.0 * h);
}

double superadditivity_margin(const DensityMatrix& rho, const DensityMatrix& sigma, const Region& a, const Region& c,
                              const ToleranceConfig& tol) {
  if (a.unite(c) != Region::all(rho.layout().site_count()) || !a.disjoint(c))
    throw InvalidRegion("superadditivity_margin: regions must partition the layout");
  const double h = h_error_term(sigma, a, c, tol);
  const double d = relative_entropy_value(rho, sigma, tol);
  const double d_a = relative_entropy_value(rho.marginal(a), sigma.marginal(a), tol);
  const double d_c = relative_entropy_value(rho.marginal(c), sigma.marginal(c), tol);
  return (1.0 + 2.0 * h) * d - d_a - d_c;
}

ExpectationQFResult verify_expectation_qf(const DensityMatrix& rho, const DensityMatrix& sigma, const Region& a,
                                          const QuadratureScheme& quad, const ToleranceConfig& tol) {
  const HilbertLayout& layout = rho.layout();
  a.check(layout);
  const Region b = a.complement();
  if (a.empty() || b.empty()) throw InvalidRegion("verify_expectation_qf: a must be a proper nonempty region");
  require_full_rank(eigh(rho.matrix()), tol, "verify_expectation_qf (rho)");
  const EigenSystem es = full_rank_eigh(sigma.matrix(), tol, "verify_expectation_qf (sigma)");

  ExpectationQFResult out;
  const DensityMatrix rec_a = petz_recovery(rho, sigma, a, tol);
  const DensityMatrix rec_b = petz_recovery(rho, sigma, b, tol);
  out.d_a_exp = relative_entropy_value(rho, rec_a, tol);
  out.d_b_exp = relative_entropy_value(rho, rec_b, tol);
  const double d = relative_entropy_value(rho, sigma, tol);

  const ComplexMatrix m =
      mat_exp_hermitian(-mat_log(sigma.matrix(), tol) + mat_log(rec_a.matrix(), tol) + mat_log(rec_b.matrix(), tol));
  const double tr_m = m.trace().real();
  out.log_tr_m = std::log(tr_m);
  out.step1_margin = out.d_a_exp + out.d_b_exp + out.log_tr_m - d;

  out.lieb_bound = (rec_a.matrix() * lieb_operator_beta(sigma.matrix(), rec_b.matrix(), quad, tol)).trace().real();
  out.lieb_margin = out.lieb_bound - tr_m;

  const auto t_op = [&](const Region& r) {
    const ComplexMatrix s_inv_half = mat_pow(marginal(sigma.matrix(), layout, r), -0.5, tol);
    const ComplexMatrix diff = marginal(rho.matrix(), layout, r) - marginal(sigma.matrix(), layout, r);
    return embed(s_inv_half * diff * s_inv_half, r, layout);
  };
  const ComplexMatrix t_a = t_op(a), t_b = t_op(b);
  double integral = 0.0;
  for (std::size_t k = 0; k < quad.size(); ++k) {
    const double t = quad.nodes()[k];
    const ComplexMatrix p = complex_power(es, Complex(0.5, -0.5 * t));
    const ComplexMatrix q = complex_power(es, Complex(0.5, 0.5 * t));
    integral += quad.beta_weights()[k] * (t_b * p * t_a * q).trace().real();
  }
  out.step2_integral = integral;
  out.step2_margin = integral - out.log_tr_m;

  out.xi = xi_components(sigma, a, quad, tol);
  out.step4_margin = out.xi.xi * d - integral;
  out.result = make_qf_result(d, out.d_a_exp + out.d_b_exp, 1.0 - out.xi.xi);
  return out;
}

TripartiteResult verify_tripartite_nonoverlap(const DensityMatrix& rho, std::span<const DensityMatrix> sigma_factors,
                                              const ToleranceConfig& tol) {
  if (rho.layout().site_count() != 3 || sigma_factors.size() != 3)
    throw DimensionMismatch("verify_tripartite_nonoverlap: expects three sites and three factors");
  TripartiteResult out;
  out.result = verify_product_qf(rho, sigma_factors, tol);

  const std::vector<DensityMatrix> marg = single_site_marginals(rho);
  const DensityMatrix rho_product = product_state(marg);
  double mi_sum = 0.0;
  for (int x = 0; x < 3; ++x) {
    const Region rx = Region::single(3, x);
    mi_sum += mutual_information(rho, rx, rx.complement());
  }
  out.mutual_information_margin = mi_sum - relative_entropy_value(rho, rho_product, tol);
  return out;
}

ComplexMatrix lieb_operator_beta(const ComplexMatrix& g, const ComplexMatrix& f, const QuadratureScheme& quad,
                                 const ToleranceConfig& tol) {
  if (g.rows() != f.rows() || g.cols() != f.cols()) throw DimensionMismatch("lieb_operator_beta: shape mismatch");
  const EigenSystem es = full_rank_eigh(g, tol, "lieb_operator_beta");
  ComplexMatrix acc = ComplexMatrix::Zero(f.rows(), f.cols());
  for (std::size_t k = 0; k < quad.size(); ++k) {
    const double t = quad.nodes()[k];
    acc += quad.beta_weights()[k] * complex_power(es, Complex(-0.5, -0.5 * t)) * f *
           complex_power(es, Complex(-0.5, 0.5 * t));
  }
  return acc;
}

ComplexMatrix lieb_operator_resolvent(const ComplexMatrix& g, const ComplexMatrix& f) {
  if (g.rows() != f.rows() || g.cols() != f.cols()) throw DimensionMismatch("lieb_operator_resolvent: shape mismatch");
  constexpr double kLow = -50.0, kHigh = 50.0;
  constexpr int kPanels = 100;
  const GaussLegendreRule rule = gauss_legendre(16);
  const double h = (kHigh - kLow) / kPanels;
  const int d = static_cast<int>(g.rows());
  ComplexMatrix acc = ComplexMatrix::Zero(d, d);
  for (int p = 0; p < kPanels; ++p) {
    const double mid = kLow + (p + 0.5) * h;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double s = std::exp(mid + 0.5 * h * rule.nodes[k]);
      const ComplexMatrix r = (g + s * identity(d)).partialPivLu().inverse();
      acc += (0.5 * h * rule.weights[k] * s) * (r * f * r);
    }
  }
  return acc;
}

double lieb_margin(const ComplexMatrix& f, const ComplexMatrix& g, const ComplexMatrix& h) {
  const double lhs = mat_exp_hermitian(-f + g + h).trace().real();
  const ComplexMatrix bound = mat_exp_hermitian(h) * lieb_operator_resolvent(mat_exp_hermitian(f), mat_exp_hermitian(g));
  return bound.trace().real() - lhs;
}

}  // namespace qfactor
