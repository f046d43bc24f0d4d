#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "rootfn/even_case.hpp"
#include "rootfn/transform.hpp"
#include "rootfn/verify.hpp"

using namespace rootfn;

namespace {
const Complex kI{0.0, 1.0};

Vec vec1(double x) {
  Vec v(1);
  v << x;
  return v;
}
CVec cvec1(Complex z) {
  CVec v(1);
  v << z;
  return v;
}
}  // namespace

TEST_CASE("psi_A operator: factor list matches the multiplicities") {
  const RootSystem b2 = build_root_system(RootSystemType::B2);
  const MultiplicityFunction m = MultiplicityFunction::from_orbit_values(b2, {2.0, 4.0});
  const ExponentialPolynomialOperator op = build_psi_a_operator(b2, m);
  std::size_t expected = 0;
  for (const Vec& a : b2.positive_roots)
    expected += static_cast<std::size_t>(m.value(a) / 2.0);
  CHECK(op.factors.size() == expected);  // 2*1 + 2*2 = 6
  CHECK(!op.delta_half_prefactor);
}

TEST_CASE("psi_A: symbol on plane waves equals the inverse c polynomial") {
  Rng rng(13);
  for (auto [type, vals] :
       std::vector<std::pair<RootSystemType, std::vector<double>>>{
           {RootSystemType::A1, {2.0}},
           {RootSystemType::A1, {6.0}},
           {RootSystemType::A2, {2.0}},
           {RootSystemType::B2, {2.0, 4.0}}}) {
    const RootSystem rs = build_root_system(type);
    const MultiplicityFunction m = MultiplicityFunction::from_orbit_values(rs, vals);
    const ExponentialPolynomialOperator op = build_psi_a_operator(rs, m);
    for (int i = 0; i < 8; ++i) {
      CVec lam(rs.rank);
      for (int k = 0; k < rs.rank; ++k) lam[k] = rng.complex_box(-2, 2, -1.5, 1.5);
      // action on a^{i lambda} is multiplication by 1/c(-i lambda)
      const Complex sym = op.symbol(kI * lam);
      const Complex expect = inv_c_polynomial(rs, m, -kI * lam);
      CHECK(std::abs(sym - expect) <= 1e-12 * (1.0 + std::abs(expect)));
    }
  }
}

TEST_CASE("psi_A: m=2 equals the sign-weighted product of root derivatives") {
  const RootSystem a2 = build_root_system(RootSystemType::A2);
  const MultiplicityFunction m2 = MultiplicityFunction::constant(a2, 2.0);
  const ExponentialPolynomialOperator op = build_psi_a_operator(a2, m2);
  const Vec rho_m = rho(a2, m2);
  Rng rng(19);
  for (int i = 0; i < 6; ++i) {
    CVec lam(2);
    lam << rng.complex_box(-1.5, 1.5, -1, 1), rng.complex_box(-1.5, 1.5, -1, 1);
    // pi(d_a) a^{lambda} = pi(lambda) a^{lambda}
    const double sign = (a2.positive_roots.size() % 2 == 0) ? 1.0 : -1.0;
    const Complex expect =
        sign * pi_product(a2, lam) / pi_product(a2, rho_m.cast<Complex>());
    CHECK(std::abs(op.symbol(lam) - expect) <= 1e-12 * (1.0 + std::abs(expect)));
  }
}

TEST_CASE("psi_A: constant-coefficient factors commute on exponentials") {
  const RootSystem a2 = build_root_system(RootSystemType::A2);
  const MultiplicityFunction m2 = MultiplicityFunction::constant(a2, 2.0);
  ExponentialPolynomialOperator op = build_psi_a_operator(a2, m2);
  ExponentialPolynomialOperator shuffled = op;
  std::reverse(shuffled.factors.begin(), shuffled.factors.end());
  Rng rng(21);
  for (int i = 0; i < 10; ++i) {
    CVec lam(2);
    lam << rng.complex_box(-2, 2, -1, 1), rng.complex_box(-2, 2, -1, 1);
    CHECK(std::abs(op.symbol(lam) - shuffled.symbol(lam)) <=
          1e-12 * (1.0 + std::abs(op.symbol(lam))));
  }
}

TEST_CASE("psi_A: finite-difference application matches the symbol") {
  const RootSystem a1 = build_root_system(RootSystemType::A1);
  const MultiplicityFunction m4 = MultiplicityFunction::constant(a1, 4.0);
  const ExponentialPolynomialOperator op = build_psi_a_operator(a1, m4);
  const CVec lam = cvec1(Complex(0.8, 0.5));
  auto wave = [&](const Vec& h) { return std::exp(bilinear(lam, h)); };
  const Vec h = vec1(0.73);
  const Complex got = op.apply_fd(wave, h, 0.01);
  const Complex expect = op.symbol(lam) * wave(h);
  CHECK(std::abs(got - expect) <= 1e-7 * (1.0 + std::abs(expect)));
  // annihilates constants (a k = 0 factor is present)
  auto one = [](const Vec&) { return Complex(1.0, 0.0); };
  CHECK(std::abs(op.apply_fd(one, h, 0.01)) < 1e-12);
}

TEST_CASE("D operator: requires m = 2 and carries the delta^(1/2) prefactor") {
  const RootSystem a1 = build_root_system(RootSystemType::A1);
  CHECK_THROWS_AS(build_d_operator(a1, MultiplicityFunction::constant(a1, 4.0)),
                  std::invalid_argument);
  const MultiplicityFunction m2 = MultiplicityFunction::constant(a1, 2.0);
  const ExponentialPolynomialOperator d = build_d_operator(a1, m2);
  CHECK(d.delta_half_prefactor);
  auto one = [](const Vec&) { return Complex(1.0, 0.0); };
  CHECK(std::abs(d.apply_fd(one, vec1(0.9), 0.01)) < 1e-12);
}

TEST_CASE("D operator: delta phi_lambda = c(lambda) c(-lambda) D psi_lambda") {
  // exact route: D acts on each exponential of psi_lambda through its symbol
  // (spectral operands), with the delta^{1/2} prefactor multiplied afterwards;
  // the finite-difference route cross-checks the same identity as a black box
  for (auto type : {RootSystemType::A1, RootSystemType::A2}) {
    const RootSystem rs = build_root_system(type);
    const MultiplicityFunction m2 = MultiplicityFunction::constant(rs, 2.0);
    const WeylGroup w = weyl_group(rs);
    const Vec rho_m = rho(rs, m2);
    const ExponentialPolynomialOperator d = build_d_operator(rs, m2);
    Rng rng(37);
    for (int trial = 0; trial < 4; ++trial) {
      CVec lam(rs.rank);
      for (int k = 0; k < rs.rank; ++k) lam[k] = rng.complex_box(0.3, 1.4, 0.2, 0.9);
      auto psi = [&](const Vec& h) {
        Complex acc = 0.0;
        for (const Mat& e : w.elements) acc += std::exp(bilinear(CVec(e * lam), h));
        return acc;
      };
      Vec h(rs.rank);
      for (int k = 0; k < rs.rank; ++k) h[k] = rng.uniform(0.7, 1.5);
      const TorusPoint a = TorusPoint::on_A(h);

      const Complex lhs = delta_density(rs, m2, a) *
                          phi_complex(rs, m2, SpectralParameter(lam), a);
      const Complex c_p = pi_product(rs, rho_m.cast<Complex>()) / pi_product(rs, lam);
      const Complex c_m =
          pi_product(rs, rho_m.cast<Complex>()) / pi_product(rs, CVec(-lam));

      Complex d_psi_exact = 0.0;
      for (int i = 0; i < w.order(); ++i) {
        const CVec wl = w.elements[i] * lam;
        d_psi_exact += d.symbol(wl) * std::exp(bilinear(wl, h));
      }
      d_psi_exact *= delta_half(rs, h.cast<Complex>());
      const Complex rhs_exact = c_p * c_m * d_psi_exact;
      CHECK(std::abs(lhs - rhs_exact) <= 1e-10 * (1.0 + std::abs(lhs)));

      const Complex rhs_fd = c_p * c_m * d.apply_fd(psi, h, 0.005);
      CHECK(std::abs(lhs - rhs_fd) <= 5e-5 * (1.0 + std::abs(lhs)));
    }
  }
}

TEST_CASE("D on psi_lambda: alternating closed form in rank one") {
  const RootSystem a1 = build_root_system(RootSystemType::A1);
  const MultiplicityFunction m2 = MultiplicityFunction::constant(a1, 2.0);
  const WeylGroup w = weyl_group(a1);
  const Vec rho_m = rho(a1, m2);
  const ExponentialPolynomialOperator d = build_d_operator(a1, m2);
  const CVec lam = cvec1(Complex(0.9, 0.4));
  auto psi = [&](const Vec& h) {
    Complex acc = 0.0;
    for (const Mat& e : w.elements) acc += std::exp(bilinear(CVec(e * lam), h));
    return acc;
  };
  const Vec h = vec1(1.2);
  // D psi = delta^{1/2} (-1/pi(rho)) pi(lambda) sum_w sign(w) a^{w lambda}
  Complex alt = 0.0;
  for (int i = 0; i < w.order(); ++i)
    alt += w.signs[i] * std::exp(bilinear(CVec(w.elements[i] * lam), h));
  const Complex expect = delta_half(a1, h.cast<Complex>()) *
                         (-1.0 / pi_product(a1, rho_m.cast<Complex>()).real()) *
                         pi_product(a1, lam) * alt;
  CHECK(std::abs(d.apply_fd(psi, h, 0.01) - expect) <= 1e-8 * (1.0 + std::abs(expect)));
}

TEST_CASE("phi_complex: rank-one sinh form and exact Weyl symmetry") {
  const RootSystem a1 = build_root_system(RootSystemType::A1);
  const MultiplicityFunction m2 = MultiplicityFunction::constant(a1, 2.0);
  const Vec alpha = a1.positive_roots[0];
  Rng rng(43);
  for (int i = 0; i < 8; ++i) {
    const CVec lam = cvec1(rng.complex_box(0.2, 1.7, 0.15, 0.9));
    const Vec h = vec1(rng.uniform(0.3, 2.0));
    const TorusPoint a = TorusPoint::on_A(h);
    const Complex got = phi_complex(a1, m2, SpectralParameter(lam), a);
    const Complex expect = (alpha.squaredNorm() / bilinear(lam, alpha)) *
                           std::sinh(bilinear(lam, h)) / std::sinh(alpha.dot(h));
    CHECK(std::abs(got - expect) <= 1e-12 * (1.0 + std::abs(expect)));
    // lambda -> w lambda reindexes the alternating sum exactly
    const Complex swapped = phi_complex(a1, m2, SpectralParameter(CVec(-lam)), a);
    CHECK(std::abs(swapped - got) <= 1e-13 * (1.0 + std::abs(got)));
  }
}

TEST_CASE("phi_complex: removable singularities are averaged out") {
  const RootSystem a1 = build_root_system(RootSystemType::A1);
  const MultiplicityFunction m2 = MultiplicityFunction::constant(a1, 2.0);
  const Vec alpha = a1.positive_roots[0];
  const TorusPoint a = TorusPoint::on_A(vec1(0.8));

  // pi(lambda) = 0: the limit lambda -> 0 of the sinh quotient,
  // (alpha, alpha) H / (alpha_1 sinh(alpha(H)))
  const Complex at_zero = phi_complex(a1, m2, SpectralParameter(cvec1(0.0)), a);
  const double ah = alpha.dot(a.log_real);
  const double limit = alpha.squaredNorm() * 0.8 / (alpha[0] * std::sinh(ah));
  CHECK(std::abs(at_zero - limit) <= 1e-7 * std::abs(limit));

  // lambda_alpha = +-eps agree to O(eps^2)
  const double eps = 1e-4;
  const Complex plus = phi_complex(a1, m2, SpectralParameter(cvec1(eps)), a);
  const Complex minus = phi_complex(a1, m2, SpectralParameter(cvec1(-eps)), a);
  CHECK(std::abs(plus - minus) <= 1e-7 * (1.0 + std::abs(plus)));

  // delta^{1/2}(a) = 0 at the identity: phi_lambda(e) is finite
  const CVec lam = cvec1(Complex(0.7, 0.2));
  const Complex at_e = phi_complex(a1, m2, SpectralParameter(lam), TorusPoint::on_A(vec1(0.0)));
  const Complex expect_e = alpha.squaredNorm() * bilinear(lam, vec1(1.0)) /
                           (bilinear(lam, alpha) * alpha[0]);
  CHECK(std::abs(at_e - expect_e) <= 1e-6 * (1.0 + std::abs(expect_e)));
}

TEST_CASE("phi_complex agrees with the series on the positive tube (A2)") {
  const RootSystem a2 = build_root_system(RootSystemType::A2);
  const MultiplicityFunction m2 = MultiplicityFunction::constant(a2, 2.0);
  const HypergeometricEvaluator ev(a2, m2);
  Rng rng(53);
  for (int i = 0; i < 3; ++i) {
    CVec lam(2);
    lam << rng.complex_box(0.3, 1.2, 0.2, 0.8), rng.complex_box(0.3, 1.2, 0.2, 0.8);
    Vec hr(2), hi(2);
    hr << rng.uniform(0.9, 1.5), rng.uniform(1.0, 1.6);
    hi << rng.uniform(-0.15, 0.15), rng.uniform(-0.15, 0.15);
    const TorusPoint a = TorusPoint::in_tube(a2, hr, hi);
    const Complex series = ev.phi(lam, a);
    const Complex closed = phi_complex(a2, m2, SpectralParameter(lam), a);
    CHECK(std::abs(series - closed) <= 1e-10 * (1.0 + std::abs(closed)));
  }
}

TEST_CASE("abel inversion identity holds for a Gaussian (spot check)") {
  const RootSystem a1 = build_root_system(RootSystemType::A1);
  const MultiplicityFunction m2 = MultiplicityFunction::constant(a1, 2.0);
  const TransformContext ctx(a1, m2);
  const QuadratureGrid ag = tensor_grid(1, 128, 10.0);
  const QuadratureGrid lg = tensor_grid(1, 128, 10.0);
  const GridFunction f = sample(
      ag, [](const Vec& h) { return Complex(std::exp(-0.5 * h.squaredNorm()), 0.0); },
      Symmetry::WInvariant);
  const GridFunction ff = hypergeometric_fourier(ctx, f, lg);
  auto abel = [&](const Vec& x) { return abel_transform_at(ctx, ff, x); };
  auto fval = [](const Vec& h) { return std::exp(-0.5 * h.squaredNorm()); };
  std::vector<Vec> pts;
  for (double h : {0.4, 0.9, 1.6, 2.4}) pts.push_back(vec1(h));
  const AbelInversionReport rep = abel_inversion_check(a1, m2, abel, fval, pts);
  CHECK(rep.points == 4);
  CHECK(rep.max_relative_residual < 1e-5);
}
