#include "rootfn/verify.hpp"

#include <cmath>
#include <limits>

#include "rootfn/even_case.hpp"
#include "rootfn/heat.hpp"
#include "rootfn/hypergeo.hpp"
#include "rootfn/quadrature.hpp"
#include "rootfn/rootsys.hpp"
#include "rootfn/transform.hpp"

namespace rootfn {

namespace {

const Complex kI{0.0, 1.0};

Vec vec1(double x) {
  Vec v(1);
  v << x;
  return v;
}

Check make_check(std::string name, std::string ref, double lhs, double rhs,
                 double defect, double tol) {
  Check c;
  c.name = std::move(name);
  c.paper_ref = std::move(ref);
  c.lhs = lhs;
  c.rhs = rhs;
  c.defect = defect;
  c.tolerance = tol;
  c.pass = defect <= tol;
  return c;
}

GridFunction gaussian_bump(const QuadratureGrid& g, double width) {
  return sample(
      g,
      [width](const Vec& h) {
        return Complex(std::exp(-h.squaredNorm() / (2.0 * width * width)), 0.0);
      },
      Symmetry::WInvariant);
}

// growth rate of delta along its steepest ray: |sum_alpha m_alpha alpha|
double delta_growth_rate(const RootSystem& rs, const MultiplicityFunction& m) {
  Vec g = Vec::Zero(rs.rank);
  for (const Vec& a : rs.positive_roots) g += m.value(a) * a;
  return g.norm();
}

// box radius at which the Gaussian bump times delta decays to ~1e-12 of peak
double bump_box_radius(double width, double delta_rate) {
  return delta_rate * width * width + 7.5 * width;
}

// chamber sample points with min over simple roots of alpha(H) >= margin
std::vector<Vec> chamber_points(const RootSystem& rs, Rng& rng, int count,
                                double margin, double spread) {
  std::vector<Vec> out;
  int guard = 0;
  while (static_cast<int>(out.size()) < count && ++guard < 100000) {
    Vec h(rs.rank);
    for (int k = 0; k < rs.rank; ++k) h[k] = rng.uniform(0.2, spread);
    double mn = std::numeric_limits<double>::infinity();
    for (const Vec& a : rs.simple_roots) mn = std::min(mn, a.dot(h));
    if (mn >= margin) out.push_back(h);
  }
  if (static_cast<int>(out.size()) < count)
    throw std::runtime_error("could not sample enough chamber points");
  return out;
}

CVec random_lambda(const RootSystem& rs, Rng& rng, double re_lo, double re_hi,
                   double im_lo, double im_hi) {
  CVec l(rs.rank);
  for (int k = 0; k < rs.rank; ++k) l[k] = rng.complex_box(re_lo, re_hi, im_lo, im_hi);
  return l;
}

}  // namespace

bool SuiteResult::all_pass() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

// --- 1. Gamma-series closed form -----------------------------------------------

std::vector<Check> criterion_gamma_closed_form(std::uint64_t seed) {
  const RootSystem a1 = build_root_system(RootSystemType::A1);
  const MultiplicityFunction m2 = MultiplicityFunction::constant(a1, 2.0);
  const Vec alpha = a1.positive_roots[0];
  const Vec rho_m = rho(a1, m2);
  Rng rng(seed);
  double worst_closed = 0.0;
  double worst_oracle = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const Complex z = rng.complex_box(0.21, 2.81, 0.12, 1.07);
    CVec lambda(1);
    lambda << z;
    const GammaTable t = gamma_coefficients(a1, m2, SpectralParameter(lambda), 40);

    // independent direct recursion in the single cone coordinate
    std::vector<Complex> oracle(41, 0.0);
    oracle[0] = 1.0;
    const Complex la = bilinear(lambda, alpha);
    for (int n = 1; n <= 40; ++n) {
      Complex rhs = 0.0;
      for (int k = 1; n - 2 * k >= 0; ++k)
        rhs += 2.0 * oracle[n - 2 * k] *
               ((static_cast<double>(n - 2 * k) * alpha + rho_m).dot(alpha) - la);
      oracle[n] = 2.0 * rhs /
                  (n * n * alpha.squaredNorm() - 2.0 * static_cast<double>(n) * la);
    }
    for (int n = 0; n <= 40; ++n) {
      worst_oracle = std::max(worst_oracle, std::abs(t.values[n] - oracle[n]));
      if (n % 2 == 0)
        worst_closed = std::max(worst_closed, std::abs(t.values[n] - 1.0));
    }
  }
  return {make_check("gamma-closed-form-a1-m2", "harish-chandra-series-coefficients",
                     1.0, 1.0, worst_closed, 1e-12),
          make_check("gamma-recursion-vs-oracle", "harish-chandra-series-coefficients",
                     0.0, 0.0, worst_oracle, 1e-12)};
}

// --- 2. c-function normalization and closed forms --------------------------------

std::vector<Check> criterion_c_function_forms(std::uint64_t seed) {
  std::vector<Check> out;
  Rng rng(seed + 1);

  const std::vector<std::pair<RootSystemType, std::vector<std::vector<double>>>>
      cases = {{RootSystemType::A1, {{1.0}, {2.0}, {2.5}}},
               {RootSystemType::A2, {{1.0}, {2.0}, {1.5}}},
               {RootSystemType::B2, {{1.0, 1.0}, {2.0, 2.0}, {1.0, 2.5}}},
               {RootSystemType::BC1, {{1.0, 1.0}, {2.0, 2.0}, {2.0, 1.0}}}};
  double worst_rho = 0.0;
  for (const auto& [type, multiplicities] : cases) {
    const RootSystem rs = build_root_system(type);
    for (const auto& vals : multiplicities) {
      const MultiplicityFunction m = MultiplicityFunction::from_orbit_values(rs, vals);
      const Complex c = c_function(rs, m, SpectralParameter(rho(rs, m)));
      worst_rho = std::max(worst_rho, std::abs(c - 1.0));
    }
  }
  out.push_back(make_check("c-normalization-at-rho",
                           "gindikin-karpelevic-normalization", 1.0, 1.0, worst_rho,
                           1e-12));

  double worst_pi = 0.0;
  for (auto type : {RootSystemType::A1, RootSystemType::A2, RootSystemType::B2}) {
    const RootSystem rs = build_root_system(type);
    const MultiplicityFunction m2 = MultiplicityFunction::constant(rs, 2.0);
    const CFunction c(rs, m2);
    const Vec rho_m = rho(rs, m2);
    for (int i = 0; i < 50; ++i) {
      const CVec lambda = random_lambda(rs, rng, 0.25, 2.3, 0.2, 1.2);
      const Complex expect =
          pi_product(rs, rho_m.cast<Complex>()) / pi_product(rs, lambda);
      worst_pi =
          std::max(worst_pi, std::abs(c(lambda) - expect) / (1.0 + std::abs(expect)));
    }
  }
  out.push_back(make_check("c-complex-case-pi-ratio", "c-function-complex-case", 0.0,
                           0.0, worst_pi, 1e-10));

  double worst_poly = 0.0;
  for (auto [type, vals] : std::vector<std::pair<RootSystemType, std::vector<double>>>{
           {RootSystemType::A1, {2.0}},
           {RootSystemType::A1, {4.0}},
           {RootSystemType::A2, {2.0}},
           {RootSystemType::B2, {2.0, 4.0}}}) {
    const RootSystem rs = build_root_system(type);
    const MultiplicityFunction m = MultiplicityFunction::from_orbit_values(rs, vals);
    const CFunction c(rs, m);
    for (int i = 0; i < 25; ++i) {
      const CVec lambda = random_lambda(rs, rng, 0.25, 2.2, 0.2, 1.1);
      const Complex poly = inv_c_polynomial(rs, m, lambda);
      const Complex via_gamma = 1.0 / c(lambda);
      worst_poly = std::max(worst_poly,
                            std::abs(poly - via_gamma) / (1.0 + std::abs(via_gamma)));
    }
  }
  out.push_back(make_check("inverse-c-polynomial-vs-gamma-product",
                           "inverse-c-polynomial-even-case", 0.0, 0.0, worst_poly,
                           1e-10));
  return out;
}

// --- 3. Eigenvalue equation -------------------------------------------------------

std::vector<Check> criterion_eigenvalue_equation(std::uint64_t seed) {
  std::vector<Check> out;
  Rng rng(seed + 2);
  const std::vector<std::pair<RootSystemType, std::vector<double>>> cases = {
      {RootSystemType::A1, {1.0}},
      {RootSystemType::A1, {2.0}},
      {RootSystemType::A1, {3.5}},
      {RootSystemType::A2, {2.0}},
      {RootSystemType::BC1, {2.0, 1.0}}};
  for (const auto& [type, vals] : cases) {
    const RootSystem rs = build_root_system(type);
    const MultiplicityFunction m = MultiplicityFunction::from_orbit_values(rs, vals);
    const HypergeometricEvaluator ev(rs, m);
    const Vec rho_m = ev.rho_vector();
    const std::vector<Vec> points = chamber_points(rs, rng, 5, 0.7, 2.4);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const CVec lambda = random_lambda(rs, rng, -1.4, 1.4, -1.0, 1.0);
      const Complex eig = bilinear(lambda, lambda) - rho_m.squaredNorm();
      auto f = [&](const Vec& h) { return ev.phi(lambda, TorusPoint::on_A(h)); };
      for (const Vec& h : points) {
        const Complex lf = apply_L_richardson(rs, m, f, h, 0.04);
        const Complex fv = f(h);
        worst = std::max(worst, std::abs(lf - eig * fv) / std::abs(fv));
      }
    }
    std::string name = "eigenvalue-equation-" + to_string(type);
    for (double v : vals) name += "-m" + std::to_string(v).substr(0, 3);
    out.push_back(make_check(std::move(name), "hypergeometric-eigenvalue-equation",
                             0.0, 0.0, worst, 1e-6));
  }
  return out;
}

// --- 4. Series vs closed form ------------------------------------------------------

std::vector<Check> criterion_series_vs_closed_form(std::uint64_t seed) {
  std::vector<Check> out;
  Rng rng(seed + 3);
  for (auto type : {RootSystemType::A1, RootSystemType::A2}) {
    const RootSystem rs = build_root_system(type);
    const MultiplicityFunction m2 = MultiplicityFunction::constant(rs, 2.0);
    const HypergeometricEvaluator ev(rs, m2);
    double worst = 0.0;
    // 20 tube points with chamber margin 0.7 and a modest imaginary part
    std::vector<TorusPoint> pts;
    for (const Vec& hr : chamber_points(rs, rng, 20, 0.7, 2.2)) {
      Vec hi(rs.rank);
      for (int k = 0; k < rs.rank; ++k) hi[k] = rng.uniform(-0.12, 0.12);
      pts.push_back(TorusPoint::in_tube(rs, hr, hi));
    }
    for (int trial = 0; trial < 10; ++trial) {
      const CVec lambda = random_lambda(rs, rng, 0.3, 1.5, 0.2, 0.9);
      for (const TorusPoint& a : pts) {
        const Complex series = ev.phi(lambda, a);
        const Complex closed = phi_complex(rs, m2, SpectralParameter(lambda), a);
        worst = std::max(worst, std::abs(series - closed) / (1.0 + std::abs(closed)));
      }
    }
    out.push_back(make_check("series-vs-closed-form-" + to_string(type),
                             "hypergeometric-complex-case-closed-form", 0.0, 0.0,
                             worst, 1e-10));
  }
  return out;
}

// --- 5. Plancherel and inversion ---------------------------------------------------

namespace {

// smallest even node count that resolves per-axis frequencies up to
// freq * radius with the given accuracy margin (Gauss-Legendre heuristic:
// error ~ exp(-(n - 0.7 freq R)))
int resolved_nodes(double freq_times_radius, int margin) {
  const int n = static_cast<int>(std::ceil(0.7 * freq_times_radius)) + margin;
  return std::max(48, n + (n % 2));
}

Check plancherel_one(RootSystemType type, double m_value, double width, int unused) {
  (void)unused;
  const RootSystem rs = build_root_system(type);
  const MultiplicityFunction m = MultiplicityFunction::constant(rs, m_value);
  const TransformContext ctx(rs, m);
  const double ra = bump_box_radius(width, delta_growth_rate(rs, m));
  // spectral box sized to the Gaussian decay of the transform
  const double rl = 4.0 / width + 1.5;
  const int base_n = resolved_nodes(rl * ra, 18);

  double defects[2];
  for (int level = 0; level < 2; ++level) {
    const int n = level == 0 ? base_n : 2 * base_n;
    const QuadratureGrid ag = tensor_grid(rs.rank, n, ra);
    const QuadratureGrid lg = tensor_grid(rs.rank, n, rl);
    const auto [lhs, rhs] = plancherel_check(ctx, gaussian_bump(ag, width), lg);
    defects[level] = std::abs(rhs / lhs - 1.0);
  }
  const bool monotone = defects[1] <= defects[0] || defects[1] <= 1e-10;
  Check c = make_check("plancherel-" + to_string(type) + "-m" +
                           std::to_string(m_value).substr(0, 3) + "-w" +
                           std::to_string(width).substr(0, 3),
                       "plancherel-unitarity", 1.0, 1.0,
                       std::max(defects[0], defects[1]), 1e-3);
  c.pass = c.pass && monotone;
  return c;
}

}  // namespace

std::vector<Check> criterion_plancherel(std::uint64_t seed) {
  std::vector<Check> out;
  for (double w : {0.7, 1.0, 1.5}) {
    out.push_back(plancherel_one(RootSystemType::A1, 0.0, w, 0));
    out.push_back(plancherel_one(RootSystemType::A1, 2.0, w, 0));
    out.push_back(plancherel_one(RootSystemType::A2, 2.0, w, 0));
  }

  // inversion round trip, sup error over off-wall test points
  double worst = 0.0;
  for (auto [type, mval] : std::vector<std::pair<RootSystemType, double>>{
           {RootSystemType::A1, 0.0},
           {RootSystemType::A1, 2.0},
           {RootSystemType::A2, 2.0}}) {
    const RootSystem rs = build_root_system(type);
    const MultiplicityFunction m = MultiplicityFunction::constant(rs, mval);
    const TransformContext ctx(rs, m);
    const int n = rs.rank == 1 ? 128 : 96;
    const double ra = bump_box_radius(1.0, delta_growth_rate(rs, m));
    const QuadratureGrid ag = tensor_grid(rs.rank, n, ra);
    const QuadratureGrid lg = tensor_grid(rs.rank, n, 8.0);
    const GridFunction f = gaussian_bump(ag, 1.0);
    const GridFunction ff = hypergeometric_fourier(ctx, f, lg);
    std::vector<Vec> pts;
    if (rs.rank == 1) {
      for (double h : {-2.2, -0.9, 0.31, 0.8, 1.3, 2.1, 3.3}) pts.push_back(vec1(h));
    } else {
      Rng rng(seed + 4);
      for (int i = 0; i < 8; ++i) {
        Vec h(2);
        h << rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0);
        pts.push_back(h);
      }
    }
    for (const Vec& h : pts) {
      const Complex rec =
          inverse_hypergeometric_fourier_at(ctx, ff, TorusPoint::on_A(h));
      worst = std::max(worst, std::abs(rec - std::exp(-0.5 * h.squaredNorm())));
    }
  }
  out.push_back(
      make_check("inversion-round-trip", "fourier-inversion", 0.0, 0.0, worst, 1e-4));
  return out;
}

// --- 6. Spectral symbol of L(m) ----------------------------------------------------

std::vector<Check> criterion_symbol_identity(std::uint64_t seed) {
  (void)seed;
  const RootSystem a1 = build_root_system(RootSystemType::A1);
  const MultiplicityFunction m2 = MultiplicityFunction::constant(a1, 2.0);
  const TransformContext ctx(a1, m2);
  const QuadratureGrid ag = tensor_grid(1, 128, 10.0);
  auto f = [](const Vec& h) { return Complex(std::exp(-0.5 * h.squaredNorm()), 0.0); };
  GridFunction fg = sample(ag, f, Symmetry::WInvariant);
  GridFunction lf = sample_L(ctx, f, ag, 0.01);
  lf.symmetry = Symmetry::WInvariant;
  double f_l1 = 0.0;
  for (Eigen::Index i = 0; i < ag.size(); ++i)
    f_l1 += ag.weights[i] * measure_factor(1) * std::abs(fg.values[i]) *
            ctx.delta(ag.node(i));
  double worst = 0.0;
  for (int i = 0; i < 16; ++i) {
    const Vec lam = vec1(0.35 + 0.35 * i);
    const double resid = symbol_laplace_residual(ctx, fg, lf, lam);
    worst = std::max(worst, resid / ((1.0 + lam.squaredNorm()) * f_l1));
  }
  return {make_check("laplacian-symbol-identity-a1-m2", "laplacian-spectral-symbol",
                     0.0, 0.0, worst, 1e-4)};
}

// --- 7. Flat Segal-Bargmann ---------------------------------------------------------

std::vector<Check> criterion_flat_segal_bargmann(std::uint64_t seed) {
  (void)seed;
  std::vector<Check> out;
  const QuadratureGrid ag = tensor_grid(1, 128, 9.0);
  const QuadratureGrid lg = tensor_grid(1, 128, 9.0);
  const GridFunction f = gaussian_bump(ag, 1.0);
  const double analytic = 1.0 / std::sqrt(2.0);
  for (double t : {0.1, 0.5, 1.0}) {
    const FockBoxes boxes = default_fock_boxes(t, 9.0, 9.0);
    const QuadratureGrid xg = tensor_grid(1, 128, boxes.x_radius);
    const QuadratureGrid yg = tensor_grid(1, 128, boxes.y_radius);
    const auto [lhs, rhs] = euclidean_segal_bargmann_unitarity(f, t, lg, xg, yg);
    const double defect =
        std::max(std::abs(rhs / lhs - 1.0), std::abs(lhs / analytic - 1.0));
    out.push_back(make_check("flat-segal-bargmann-t" + std::to_string(t).substr(0, 4),
                             "segal-bargmann-unitarity-euclidean", lhs, rhs, defect,
                             1e-6));
  }
  return out;
}

// --- 8. Hypergeometric Fock isometry -------------------------------------------------

std::vector<Check> criterion_fock_isometry(std::uint64_t seed) {
  (void)seed;
  std::vector<Check> out;
  const RootSystem a1 = build_root_system(RootSystemType::A1);
  const TransformContext ctx(a1, MultiplicityFunction::constant(a1, 2.0));
  const double ra = 10.0;
  for (double t : {0.1, 0.5, 1.0}) {
    // spectral box follows the combined Gaussian decay of the transform and
    // the heat multiplier; the X-box couples back into the lambda resolution
    const double rl = std::sqrt(38.0 / (0.5 + t)) + 0.8;
    const FockBoxes boxes = default_fock_boxes(t, rl, ra);
    const int base_n = resolved_nodes(rl * boxes.x_radius, 16);
    double ratios[2];
    for (int level = 0; level < 2; ++level) {
      const int n = level == 0 ? base_n : 2 * base_n;
      const QuadratureGrid ag = tensor_grid(1, 2 * n, ra);
      const QuadratureGrid lg = tensor_grid(1, n, rl);
      const QuadratureGrid xg = tensor_grid(1, n, boxes.x_radius);
      const QuadratureGrid yg = tensor_grid(1, n, boxes.y_radius);
      const GridFunction f = gaussian_bump(ag, 1.0);
      const GridFunction ff = hypergeometric_fourier(ctx, f, lg);
      const double fock = fock_norm(ctx, ff, t, xg, yg);
      const double l2 = norm_sq(f, [&](const Vec& h) { return ctx.delta(h); });
      ratios[level] = fock / l2;
    }
    const double d0 = std::abs(ratios[0] - 1.0), d1 = std::abs(ratios[1] - 1.0);
    Check c = make_check("fock-isometry-t" + std::to_string(t).substr(0, 4),
                         "fock-space-isometry", 1.0, ratios[1], std::max(d0, d1),
                         1e-3);
    c.pass = c.pass && (d1 <= d0 || d1 <= 1e-10);
    out.push_back(c);
  }
  return out;
}

// --- 9. Hall-Mitchell -----------------------------------------------------------------

std::vector<Check> criterion_hall_mitchell(std::uint64_t seed) {
  std::vector<Check> out;
  const RootSystem a1 = build_root_system(RootSystemType::A1);
  const TransformContext ctx(a1, MultiplicityFunction::constant(a1, 2.0));
  const double t = 0.5;
  const QuadratureGrid ag = tensor_grid(1, 192, 10.0);
  const QuadratureGrid lg = tensor_grid(1, 128, 9.0);
  const FockBoxes boxes = default_fock_boxes(t, 9.0, 10.0);
  const QuadratureGrid xg = tensor_grid(1, 128, boxes.x_radius);
  const QuadratureGrid yg = tensor_grid(1, 128, boxes.y_radius);
  const GridFunction f = gaussian_bump(ag, 1.0);
  const auto [lhs, rhs] = hall_mitchell_check(ctx, f, t, lg, xg, yg);
  out.push_back(make_check("hall-mitchell-norm-identity", "hall-mitchell-theorem",
                           lhs, rhs, std::abs(rhs / lhs - 1.0), 1e-3));

  const GridFunction ff = hypergeometric_fourier(ctx, f, lg);
  Rng rng(seed + 9);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const Vec x = vec1(rng.uniform(-2.0, 2.0));
    const Vec y = vec1(rng.uniform(-2.5, 2.5));
    const Complex v = lambda_extension_at(ctx, ff, x, y, t);
    const Complex w = lambda_extension_at(ctx, ff, Vec(-x), Vec(-y), t);
    worst = std::max(worst, std::abs(w + v) / (1.0 + std::abs(v)));
  }
  out.push_back(make_check("hall-mitchell-tau-antisymmetry", "tau-sign-action", 0.0,
                           0.0, worst, 1e-10));
  return out;
}

// --- 10. Abel inversion ----------------------------------------------------------------

std::vector<Check> criterion_abel_inversion(std::uint64_t seed) {
  (void)seed;
  const RootSystem a1 = build_root_system(RootSystemType::A1);
  const MultiplicityFunction m2 = MultiplicityFunction::constant(a1, 2.0);
  const TransformContext ctx(a1, m2);
  const QuadratureGrid ag = tensor_grid(1, 160, 10.0);
  const QuadratureGrid lg = tensor_grid(1, 160, 10.0);
  const GridFunction f = gaussian_bump(ag, 1.0);
  const GridFunction ff = hypergeometric_fourier(ctx, f, lg);
  auto abel = [&](const Vec& x) { return abel_transform_at(ctx, ff, x); };
  auto fval = [](const Vec& h) { return std::exp(-0.5 * h.squaredNorm()); };
  std::vector<Vec> pts;
  for (int i = 0; i < 25; ++i) pts.push_back(vec1(0.05 + 0.145 * i));
  const AbelInversionReport rep = abel_inversion_check(a1, m2, abel, fval, pts);
  return {make_check("abel-inversion-a1-m2", "abel-transform-inversion", 0.0, 0.0,
                     rep.max_relative_residual, 1e-4)};
}

// --- 11. Lambda specialization -----------------------------------------------------------

std::vector<Check> criterion_lambda_specialization(std::uint64_t seed) {
  std::vector<Check> out;
  Rng rng(seed + 11);
  for (auto type : {RootSystemType::A1, RootSystemType::A2}) {
    const RootSystem rs = build_root_system(type);
    const MultiplicityFunction m2 = MultiplicityFunction::constant(rs, 2.0);
    const TransformContext ctx(rs, m2);
    const int n = rs.rank == 1 ? 128 : 96;
    const double ra = bump_box_radius(1.0, delta_growth_rate(rs, m2));
    const QuadratureGrid ag = tensor_grid(rs.rank, n, ra);
    const QuadratureGrid lg = tensor_grid(rs.rank, n, 8.0);
    const GridFunction f = gaussian_bump(ag, 1.0);
    const GridFunction lf = lambda_map(ctx, f, lg);

    double worst_point = 0.0, scale = 0.0;
    for (Eigen::Index i = 0; i < ag.size(); ++i) {
      const Complex expect = delta_half(rs, ag.node(i).cast<Complex>()) * f.values[i];
      scale = std::max(scale, std::abs(expect));
      worst_point = std::max(worst_point, std::abs(lf.values[i] - expect));
    }
    out.push_back(make_check("lambda-multiplication-form-" + to_string(type),
                             "lambda-as-delta-half-multiplication", 0.0, 0.0,
                             worst_point / (1.0 + scale), 1e-6));

    const double iso =
        norm_sq(lf) / norm_sq(f, [&](const Vec& h) { return ctx.delta(h); });
    out.push_back(make_check("lambda-isometry-" + to_string(type), "lambda-isometry",
                             1.0, iso, std::abs(iso - 1.0), 1e-3));

    // intertwining: Lambda(L(m) f) = (L_A - |rho|^2) Lambda f
    auto fc = [](const Vec& h) {
      return Complex(std::exp(-0.5 * h.squaredNorm()), 0.0);
    };
    GridFunction lmf = sample_L(ctx, fc, ag, 0.01);
    lmf.symmetry = Symmetry::WInvariant;
    const GridFunction ff_l = hypergeometric_fourier(ctx, lmf, lg, 1e-6);
    const GridFunction ff = hypergeometric_fourier(ctx, f, lg);
    auto lambda_f = [&](const Vec& x) { return lambda_map_at(ctx, ff, x); };
    double worst_int = 0.0;
    for (const Vec& h : chamber_points(rs, rng, 6, 0.5, 2.0)) {
      const Complex lhs = lambda_map_at(ctx, ff_l, h);
      Complex lap = 0.0;
      const double step = 0.02;
      for (int k = 0; k < rs.rank; ++k) {
        Vec e = Vec::Zero(rs.rank);
        e[k] = 1.0;
        lap += (-lambda_f(h + 2 * step * e) + 16.0 * lambda_f(h + step * e) -
                30.0 * lambda_f(h) + 16.0 * lambda_f(h - step * e) -
                lambda_f(h - 2 * step * e)) /
               (12.0 * step * step);
      }
      const Complex rhs = lap - ctx.rho_norm_sq() * lambda_f(h);
      worst_int = std::max(worst_int, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
    }
    out.push_back(make_check("lambda-intertwining-" + to_string(type),
                             "lambda-intertwines-the-laplacians", 0.0, 0.0, worst_int,
                             1e-4));
  }
  return out;
}

// --- 12. Heat semigroup, contraction, initial limit --------------------------------------

std::vector<Check> criterion_heat_semigroup(std::uint64_t seed) {
  (void)seed;
  std::vector<Check> out;
  const RootSystem a1 = build_root_system(RootSystemType::A1);
  const TransformContext ctx(a1, MultiplicityFunction::constant(a1, 2.0));
  const double width = 0.8;
  const double ra = bump_box_radius(width, delta_growth_rate(a1, ctx.multiplicity()));
  const QuadratureGrid ag = tensor_grid(1, 160, ra);
  const QuadratureGrid lg = tensor_grid(1, 128, 8.0);
  const GridFunction f = gaussian_bump(ag, width);
  const GridFunction ff = hypergeometric_fourier(ctx, f, lg);
  auto mu = [&](const Vec& h) { return ctx.delta(h); };

  // multiplier semigroup, exact at the symbol level and through the values
  const HeatParameters h1(0.3, ctx.rho_norm_sq()), h2(0.45, ctx.rho_norm_sq()),
      h12(0.75, ctx.rho_norm_sq());
  double worst_semi = 0.0;
  for (Eigen::Index j = 0; j < lg.size(); ++j) {
    const Vec lam = lg.node(j);
    worst_semi = std::max(worst_semi, std::abs(h1.multiplier(lam) * h2.multiplier(lam) -
                                               h12.multiplier(lam)));
  }
  GridFunction damped = ff;
  for (Eigen::Index j = 0; j < lg.size(); ++j)
    damped.values[j] *= h1.multiplier(lg.node(j));
  for (double h : {0.4, 1.2, 2.3}) {
    const TorusPoint a = TorusPoint::on_A(vec1(h));
    const Complex two_step = heat_solution_at(ctx, damped, a, 0.45);
    const Complex one_step = heat_solution_at(ctx, ff, a, 0.75);
    worst_semi = std::max(worst_semi,
                          std::abs(two_step - one_step) / (1.0 + std::abs(one_step)));
  }
  out.push_back(make_check("heat-semigroup-multiplier", "heat-semigroup-law", 0.0, 0.0,
                           worst_semi, 1e-10));

  // contraction for every tested time
  const double f_norm = std::sqrt(norm_sq(f, mu));
  double worst_contraction = 0.0;
  for (double t : {1e-4, 0.01, 0.1, 0.5, 1.0}) {
    const GridFunction u = heat_solution(ctx, ff, ag, t);
    const double u_norm = std::sqrt(norm_sq(u, mu));
    worst_contraction = std::max(worst_contraction, u_norm / f_norm - 1.0);
  }
  out.push_back(make_check("heat-contraction", "heat-contraction-bound", 0.0, 0.0,
                           std::max(worst_contraction, 0.0), 1e-12));

  // initial limit: the L^2(d mu) distance decreases as t -> 0 and is below
  // 1e-3 at t = 1e-4
  double previous = std::numeric_limits<double>::infinity();
  double final_err = 0.0;
  bool monotone = true;
  for (double t : {0.1, 0.01, 1e-3, 1e-4}) {
    const GridFunction u = heat_solution(ctx, ff, ag, t);
    GridFunction diff = u;
    diff.values -= f.values;
    const double err = std::sqrt(norm_sq(diff, mu));
    if (err >= previous) monotone = false;
    previous = err;
    final_err = err;
  }
  Check c = make_check("heat-initial-limit", "heat-initial-condition", 0.0, 0.0,
                       final_err, 1e-3);
  c.pass = c.pass && monotone;
  out.push_back(c);
  return out;
}

// --- suites ------------------------------------------------------------------------------

std::vector<std::string> suite_names() {
  return {"all", "gamma", "eigen", "plancherel", "fock", "hall_mitchell", "abel_inv"};
}

bool is_suite_name(const std::string& name) {
  for (const std::string& s : suite_names())
    if (s == name) return true;
  return false;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  if (!is_suite_name(name))
    throw std::invalid_argument("unknown verification suite: " + name);
  SuiteResult r;
  r.suite = name;
  r.seed = seed;
  auto append = [&](std::vector<Check> checks) {
    for (Check& c : checks) r.checks.push_back(std::move(c));
  };
  const bool all = name == "all";
  if (all || name == "gamma") {
    append(criterion_gamma_closed_form(seed));
    append(criterion_c_function_forms(seed));
  }
  if (all || name == "eigen") {
    append(criterion_eigenvalue_equation(seed));
    append(criterion_series_vs_closed_form(seed));
  }
  if (all || name == "plancherel") {
    append(criterion_plancherel(seed));
    append(criterion_symbol_identity(seed));
    append(criterion_lambda_specialization(seed));
  }
  if (all || name == "fock") {
    append(criterion_flat_segal_bargmann(seed));
    append(criterion_fock_isometry(seed));
    append(criterion_heat_semigroup(seed));
  }
  if (all || name == "hall_mitchell") append(criterion_hall_mitchell(seed));
  if (all || name == "abel_inv") append(criterion_abel_inversion(seed));
  return r;
}

nlohmann::ordered_json suite_to_json(const SuiteResult& result) {
  nlohmann::ordered_json j;
  j["suite"] = result.suite;
  j["seed"] = result.seed;
  j["pass"] = result.all_pass();
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const Check& c : result.checks) {
    nlohmann::ordered_json row;
    row["name"] = c.name;
    row["paper_ref"] = c.paper_ref;
    row["lhs"] = c.lhs;
    row["rhs"] = c.rhs;
    row["defect"] = c.defect;
    row["tolerance"] = c.tolerance;
    row["pass"] = c.pass;
    checks.push_back(row);
  }
  j["checks"] = checks;
  return j;
}

}  // namespace rootfn
