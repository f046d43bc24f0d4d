#include "rootfn/even_case.hpp"

#include <cmath>
#include <limits>

namespace rootfn {

namespace {
constexpr Complex kI{0.0, 1.0};

void require_even_reduced(const RootSystem& rs, const MultiplicityFunction& m) {
  if (!rs.reduced || !m.is_even())
    throw std::invalid_argument("operation requires even multiplicities on a "
                                "reduced root system");
}

void require_geometric_complex(const RootSystem& rs, const MultiplicityFunction& m) {
  if (!m.is_geometric_complex())
    throw std::invalid_argument("operation requires m == 2 on a reduced root system");
  (void)rs;
}
}  // namespace

Complex inv_c_polynomial(const RootSystem& rs, const MultiplicityFunction& m,
                         const CVec& lambda) {
  require_even_reduced(rs, m);
  const Vec rho_m = rho(rs, m);
  Complex prod = 1.0;
  for (const Vec& alpha : rs.positive_roots) {
    const int half = static_cast<int>(std::lround(m.value(alpha) / 2.0));
    const Complex la = bilinear(lambda, alpha) / alpha.squaredNorm();
    const double ra = rho_m.dot(alpha) / alpha.squaredNorm();
    for (int k = 0; k < half; ++k) prod *= (la + static_cast<double>(k)) / (ra + k);
  }
  return prod;
}

Complex pi_product(const RootSystem& rs, const CVec& lambda) {
  Complex prod = 1.0;
  for (const Vec& alpha : rs.positive_roots) prod *= bilinear(lambda, alpha);
  return prod;
}

Complex delta_half(const RootSystem& rs, const CVec& log_a) {
  Complex prod = 1.0;
  for (const Vec& alpha : rs.positive_roots) {
    const Complex u = bilinear(log_a, alpha);
    prod *= std::exp(u) - std::exp(-u);
  }
  return prod;
}

Complex ExponentialPolynomialOperator::symbol(const CVec& lambda) const {
  Complex prod = kappa;
  for (const Factor& f : factors)
    prod *= -0.5 * bilinear(lambda, f.capital_h) + f.shift;
  return prod;
}

Complex ExponentialPolynomialOperator::apply_fd(
    const std::function<Complex(const Vec&)>& g, const Vec& h, double step) const {
  // apply the factor list right to left; each factor wraps the previous
  // callable in a 4th-order central difference
  std::function<Complex(const Vec&)> cur = g;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    const Vec dir = it->capital_h;
    const double shift = it->shift;
    const double len = dir.norm();
    const Vec u = dir / len;
    std::function<Complex(const Vec&)> prev = cur;
    cur = [prev, u, len, shift, step](const Vec& x) {
      const Complex fp1 = prev(x + step * u), fm1 = prev(x - step * u);
      const Complex fp2 = prev(x + 2.0 * step * u), fm2 = prev(x - 2.0 * step * u);
      const Complex deriv = len * (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * step);
      return -0.5 * deriv + shift * prev(x);
    };
  }
  Complex val = kappa * cur(h);
  if (delta_half_prefactor) val *= delta_half(*rs, h.cast<Complex>());
  return val;
}

ExponentialPolynomialOperator build_psi_a_operator(const RootSystem& rs,
                                                   const MultiplicityFunction& m) {
  require_even_reduced(rs, m);
  const Vec rho_m = rho(rs, m);
  ExponentialPolynomialOperator op;
  op.rs = &rs;
  op.kappa = 1.0;
  for (const Vec& alpha : rs.positive_roots) {
    const int half = static_cast<int>(std::lround(m.value(alpha) / 2.0));
    const double ra = rho_m.dot(alpha) / alpha.squaredNorm();
    const Vec capital_h = 2.0 * alpha / alpha.squaredNorm();
    for (int k = 0; k < half; ++k) {
      op.factors.push_back({capital_h, static_cast<double>(k)});
      op.kappa /= (ra + k);
    }
  }
  return op;
}

ExponentialPolynomialOperator build_d_operator(const RootSystem& rs,
                                               const MultiplicityFunction& m) {
  require_geometric_complex(rs, m);
  ExponentialPolynomialOperator op = build_psi_a_operator(rs, m);
  op.delta_half_prefactor = true;
  return op;
}

namespace {

Complex phi_complex_direct(const RootSystem& rs, const WeylGroup& w, const Vec& rho_m,
                           const CVec& lambda, const TorusPoint& a) {
  const Complex c_lambda =
      pi_product(rs, rho_m.cast<Complex>()) / pi_product(rs, lambda);
  Complex alt = 0.0;
  for (int i = 0; i < w.order(); ++i)
    alt += w.signs[i] * torus_power(a, w.elements[i] * lambda);
  return c_lambda * alt / delta_half(rs, a.log_complex());
}

Vec generic_dir(int rank) {
  Vec d(rank);
  d[0] = 1.0;
  if (rank > 1) d[1] = 0.6180339887498949;
  return d / d.norm();
}

}  // namespace

Complex phi_complex(const RootSystem& rs, const MultiplicityFunction& m,
                    const SpectralParameter& lambda, const TorusPoint& a) {
  require_geometric_complex(rs, m);
  const WeylGroup w = weyl_group(rs);
  const Vec rho_m = rho(rs, m);

  const double pi_scale = [&] {
    double s = 1.0;
    for (const Vec& alpha : rs.positive_roots)
      s *= alpha.norm() * (1.0 + lambda.lambda.norm());
    return s;
  }();
  const bool lambda_singular = std::abs(pi_product(rs, lambda.lambda)) < 1e-8 * pi_scale;
  const bool a_singular =
      std::abs(delta_half(rs, a.log_complex())) < 1e-8;

  if (!lambda_singular && !a_singular)
    return phi_complex_direct(rs, w, rho_m, lambda.lambda, a);

  // removable singularity: average over symmetric perturbations of the
  // deficient variable(s)
  const double eps = 1e-5;
  const Vec d = generic_dir(rs.rank);
  std::vector<CVec> lams;
  if (lambda_singular) {
    lams.push_back(lambda.lambda + eps * d.cast<Complex>());
    lams.push_back(lambda.lambda - eps * d.cast<Complex>());
  } else {
    lams.push_back(lambda.lambda);
  }
  std::vector<TorusPoint> pts;
  if (a_singular) {
    TorusPoint ap = a, am = a;
    ap.log_real += eps * d;
    am.log_real -= eps * d;
    pts.push_back(ap);
    pts.push_back(am);
  } else {
    pts.push_back(a);
  }
  Complex acc = 0.0;
  for (const CVec& l : lams)
    for (const TorusPoint& p : pts) acc += phi_complex_direct(rs, w, rho_m, l, p);
  return acc / static_cast<double>(lams.size() * pts.size());
}

AbelInversionReport abel_inversion_check(const RootSystem& rs,
                                         const MultiplicityFunction& m,
                                         const std::function<Complex(const Vec&)>& abel,
                                         const std::function<double(const Vec&)>& f,
                                         const std::vector<Vec>& points, double fd_step,
                                         double delta_floor) {
  require_geometric_complex(rs, m);
  const WeylGroup w = weyl_group(rs);
  const ExponentialPolynomialOperator d_op = build_d_operator(rs, m);
  AbelInversionReport rep;
  std::vector<std::pair<Complex, double>> rows;  // (D(Af), |W| delta f)
  double scale = 0.0;
  for (const Vec& h : points) {
    const TorusPoint a = TorusPoint::on_A(h);
    const double delta = delta_density(rs, m, a);
    if (delta < delta_floor) continue;
    const Complex lhs = d_op.apply_fd(abel, h, fd_step);
    const double rhs = w.order() * delta * f(h);
    rows.emplace_back(lhs, rhs);
    scale = std::max(scale, std::abs(rhs));
  }
  for (const auto& [lhs, rhs] : rows) {
    const double denom = std::abs(rhs) + 0.01 * scale + 1e-300;
    rep.max_relative_residual =
        std::max(rep.max_relative_residual, std::abs(lhs - rhs) / denom);
    ++rep.points;
  }
  return rep;
}

}  // namespace rootfn
