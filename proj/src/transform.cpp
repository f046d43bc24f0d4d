#include "rootfn/transform.hpp"

#include <cmath>
#include <limits>
#include <unordered_map>

#include "rootfn/even_case.hpp"

namespace rootfn {

namespace {

constexpr Complex kI{0.0, 1.0};

// out[p] = sum_j coeffs[j] * exp(sgn * i * <dst_p, src_j>), factorized over the
// tensor axes into dense matrix products.
CVec oscillatory_sum(const QuadratureGrid& src, const CVec& coeffs,
                     const QuadratureGrid& dst, double sgn) {
  const Eigen::Index ns = src.size(), nd = dst.size();
  if (src.rank == 1) {
    CMat e(nd, ns);
    for (Eigen::Index p = 0; p < nd; ++p)
      for (Eigen::Index j = 0; j < ns; ++j)
        e(p, j) = std::exp(kI * sgn * dst.axes[0].nodes[p] * src.axes[0].nodes[j]);
    return e * coeffs;
  }
  const int nsa = src.n_per_axis, nda = dst.n_per_axis;
  CMat c(nsa, nsa);
  for (int j = 0; j < nsa; ++j)
    for (int k = 0; k < nsa; ++k) c(j, k) = coeffs[static_cast<Eigen::Index>(j) * nsa + k];
  CMat e1(nda, nsa), e2(nda, nsa);
  for (int p = 0; p < nda; ++p)
    for (int j = 0; j < nsa; ++j) {
      e1(p, j) = std::exp(kI * sgn * dst.axes[0].nodes[p] * src.axes[0].nodes[j]);
      e2(p, j) = std::exp(kI * sgn * dst.axes[1].nodes[p] * src.axes[1].nodes[j]);
    }
  CMat t = e1 * c * e2.transpose();  // (p, q)
  CVec out(nd);
  for (int p = 0; p < nda; ++p)
    for (int q = 0; q < nda; ++q) out[static_cast<Eigen::Index>(p) * nda + q] = t(p, q);
  return out;
}

}  // namespace

GridFunction apply_multiplier(const SpectralMultiplier& m, const GridFunction& f) {
  GridFunction out = f;
  for (Eigen::Index i = 0; i < f.grid.size(); ++i)
    out.values[i] = m.symbol(f.grid.node(i)) * f.values[i];
  return out;
}

TransformContext::TransformContext(RootSystem rs, MultiplicityFunction m)
    : rs_(std::move(rs)),
      m_(std::move(m)),
      w_(weyl_group(rs_)),
      rho_(rho(rs_, m_)),
      c_(rs_, m_) {
  if (m_.is_zero())
    mode_ = PhiMode::Flat;
  else if (m_.is_geometric_complex())
    mode_ = PhiMode::GeometricComplex;
  else
    mode_ = PhiMode::Series;
  if (mode_ == PhiMode::Series)
    series_ = std::make_shared<HypergeometricEvaluator>(rs_, m_);
}

Complex TransformContext::phi(const CVec& lambda, const TorusPoint& a) const {
  switch (mode_) {
    case PhiMode::Flat: {
      Complex acc = 0.0;
      for (const Mat& e : w_.elements) acc += torus_power(a, e * lambda);
      return acc;
    }
    case PhiMode::GeometricComplex:
      return phi_complex(rs_, m_, SpectralParameter(lambda), a);
    case PhiMode::Series:
      return series_->phi(lambda, a);
  }
  return 0.0;
}

Complex TransformContext::inv_c(const CVec& mu) const {
  if (m_.is_even()) return inv_c_polynomial(rs_, m_, mu);
  const Complex c = c_(mu);
  if (!std::isfinite(std::abs(c)) || std::abs(c) == 0.0)
    throw PoleEncountered("1/c requested at a zero or pole of the c-function");
  return 1.0 / c;
}

double TransformContext::plancherel(const Vec& lambda) const {
  return plancherel_density(rs_, m_, lambda);
}

double TransformContext::delta(const Vec& h) const {
  return delta_density(rs_, m_, TorusPoint::on_A(h));
}

// --- Euclidean transforms -----------------------------------------------------

Complex euclidean_fourier_at(const GridFunction& f, const Vec& lambda) {
  const double mf = measure_factor(f.grid.rank);
  Complex acc = 0.0;
  for (Eigen::Index j = 0; j < f.grid.size(); ++j)
    acc += f.grid.weights[j] * f.values[j] *
           std::exp(-kI * f.grid.node(j).dot(lambda));
  return mf * acc;
}

GridFunction euclidean_fourier(const GridFunction& f, const QuadratureGrid& lambda_grid) {
  require_decay(f);
  const double mf = measure_factor(f.grid.rank);
  CVec coeffs = f.grid.weights.cast<Complex>().cwiseProduct(f.values);
  GridFunction out;
  out.grid = lambda_grid;
  out.values = mf * oscillatory_sum(f.grid, coeffs, lambda_grid, -1.0);
  out.symmetry = Symmetry::None;
  return out;
}

Complex euclidean_inverse_fourier_at(const GridFunction& F, const Vec& x) {
  const double mf = measure_factor(F.grid.rank);
  Complex acc = 0.0;
  for (Eigen::Index j = 0; j < F.grid.size(); ++j)
    acc += F.grid.weights[j] * F.values[j] * std::exp(kI * F.grid.node(j).dot(x));
  return mf * acc;
}

GridFunction euclidean_inverse_fourier(const GridFunction& F,
                                       const QuadratureGrid& x_grid) {
  const double mf = measure_factor(F.grid.rank);
  CVec coeffs = F.grid.weights.cast<Complex>().cwiseProduct(F.values);
  GridFunction out;
  out.grid = x_grid;
  out.values = mf * oscillatory_sum(F.grid, coeffs, x_grid, 1.0);
  out.symmetry = Symmetry::None;
  return out;
}

// --- Hypergeometric transforms --------------------------------------------------

namespace {

// weighted samples of f * delta^{1/2} (m == 2 fast path)
CVec weighted_delta_half_samples(const TransformContext& ctx, const GridFunction& f) {
  const RootSystem& rs = ctx.root_system();
  CVec coeffs(f.grid.size());
  for (Eigen::Index j = 0; j < f.grid.size(); ++j)
    coeffs[j] = f.grid.weights[j] * f.values[j] *
                delta_half(rs, f.grid.node(j).cast<Complex>());
  return coeffs;
}

Complex c_minus_ilambda_complex_case(const TransformContext& ctx, const Vec& lambda) {
  // c(-i lambda) = pi(rho)/pi(-i lambda) for m == 2
  const RootSystem& rs = ctx.root_system();
  return pi_product(rs, ctx.rho_vector().cast<Complex>()) /
         pi_product(rs, -kI * lambda.cast<Complex>());
}

void require_w_invariant_tag(const GridFunction& f, const char* what) {
  if (f.symmetry != Symmetry::WInvariant)
    throw std::invalid_argument(std::string(what) +
                                " requires a W-invariant grid function");
}

}  // namespace

Complex hypergeometric_fourier_at(const TransformContext& ctx, const GridFunction& f,
                                  const Vec& lambda) {
  const double mf = measure_factor(f.grid.rank);
  const CVec milambda = -kI * lambda.cast<Complex>();
  switch (ctx.phi_mode()) {
    case TransformContext::PhiMode::GeometricComplex: {
      // integrand f * phi_{-i lambda} * delta = c(-i lambda) * f * delta^{1/2}
      //   * sum_w sign(w) a^{-i w lambda}; no wall singularities
      const WeylGroup& w = ctx.weyl();
      Complex acc = 0.0;
      for (Eigen::Index j = 0; j < f.grid.size(); ++j) {
        const Vec h = f.grid.node(j);
        Complex alt = 0.0;
        for (int i = 0; i < w.order(); ++i)
          alt += w.signs[i] * std::exp(-kI * (w.elements[i] * lambda).dot(h));
        acc += f.grid.weights[j] * f.values[j] *
               delta_half(ctx.root_system(), h.cast<Complex>()) * alt;
      }
      return mf * c_minus_ilambda_complex_case(ctx, lambda) * acc;
    }
    default: {
      double peak = 0.0;
      for (Eigen::Index j = 0; j < f.grid.size(); ++j)
        peak = std::max(peak, std::abs(f.values[j]) * ctx.delta(f.grid.node(j)));
      Complex acc = 0.0;
      for (Eigen::Index j = 0; j < f.grid.size(); ++j) {
        const Vec h = f.grid.node(j);
        const double dens = ctx.delta(h);
        const double mass = std::abs(f.values[j]) * dens;
        if (mass < 1e-15 * peak) continue;  // negligible node; keeps the series
                                            // evaluator away from the walls
        acc += f.grid.weights[j] * f.values[j] * dens *
               ctx.phi(milambda, TorusPoint::on_A(h));
      }
      return mf * acc;
    }
  }
}

GridFunction hypergeometric_fourier(const TransformContext& ctx, const GridFunction& f,
                                    const QuadratureGrid& lambda_grid,
                                    double decay_threshold) {
  require_w_invariant_tag(f, "hypergeometric Fourier transform");
  {
    // the integrand carries the density delta, which grows exponentially;
    // decay is required of f * delta, not of f alone
    GridFunction weighted = f;
    for (Eigen::Index j = 0; j < f.grid.size(); ++j)
      weighted.values[j] *= ctx.delta(f.grid.node(j));
    require_decay(weighted, decay_threshold);
  }
  GridFunction out;
  out.grid = lambda_grid;
  out.symmetry = Symmetry::WInvariant;
  const double mf = measure_factor(f.grid.rank);
  switch (ctx.phi_mode()) {
    case TransformContext::PhiMode::Flat: {
      CVec coeffs = f.grid.weights.cast<Complex>().cwiseProduct(f.values);
      out.values = (mf * ctx.weyl().order()) *
                   oscillatory_sum(f.grid, coeffs, lambda_grid, -1.0);
      break;
    }
    case TransformContext::PhiMode::GeometricComplex: {
      const CVec coeffs = weighted_delta_half_samples(ctx, f);
      CVec base = oscillatory_sum(f.grid, coeffs, lambda_grid, -1.0);
      out.values.resize(lambda_grid.size());
      for (Eigen::Index p = 0; p < lambda_grid.size(); ++p)
        out.values[p] = mf * ctx.weyl().order() *
                        c_minus_ilambda_complex_case(ctx, lambda_grid.node(p)) * base[p];
      break;
    }
    case TransformContext::PhiMode::Series: {
      out.values.resize(lambda_grid.size());
      for (Eigen::Index p = 0; p < lambda_grid.size(); ++p)
        out.values[p] = hypergeometric_fourier_at(ctx, f, lambda_grid.node(p));
      break;
    }
  }
  return out;
}

namespace {
// the inversion integrand carries the Plancherel density; decay is required
// of F times that density
void require_spectral_decay(const TransformContext& ctx, const GridFunction& Ff,
                            double threshold = 1e-6) {
  GridFunction weighted = Ff;
  for (Eigen::Index j = 0; j < Ff.grid.size(); ++j)
    weighted.values[j] *= ctx.plancherel(Ff.grid.node(j));
  require_decay(weighted, threshold);
}
}  // namespace

Complex inverse_hypergeometric_fourier_at(const TransformContext& ctx,
                                          const GridFunction& Ff, const TorusPoint& a) {
  require_spectral_decay(ctx, Ff);
  const double mf = measure_factor(Ff.grid.rank);
  const int worder = ctx.weyl().order();
  switch (ctx.phi_mode()) {
    case TransformContext::PhiMode::GeometricComplex: {
      // (1/|W|) delta^{-1/2}(a) Int [Ff(lambda)/c(-i lambda)] a^{i lambda} dlambda
      const Complex dh = delta_half(ctx.root_system(), a.log_complex());
      if (std::abs(dh) < 1e-10) {
        // removable zero on a wall: symmetric average in the space variable
        Vec d = Vec::Zero(a.log_real.size());
        d[0] = 1.0;
        if (d.size() > 1) d[1] = 0.6180339887498949;
        d /= d.norm();
        TorusPoint ap = a, am = a;
        ap.log_real += 1e-5 * d;
        am.log_real -= 1e-5 * d;
        return 0.5 * (inverse_hypergeometric_fourier_at(ctx, Ff, ap) +
                      inverse_hypergeometric_fourier_at(ctx, Ff, am));
      }
      Complex acc = 0.0;
      for (Eigen::Index j = 0; j < Ff.grid.size(); ++j) {
        const Vec lam = Ff.grid.node(j);
        acc += Ff.grid.weights[j] * Ff.values[j] *
               ctx.inv_c(-kI * lam.cast<Complex>()) *
               torus_power(a, kI * lam.cast<Complex>());
      }
      return mf * acc / (static_cast<double>(worder) * dh);
    }
    default: {
      Complex acc = 0.0;
      for (Eigen::Index j = 0; j < Ff.grid.size(); ++j) {
        const Vec lam = Ff.grid.node(j);
        acc += Ff.grid.weights[j] * Ff.values[j] * ctx.plancherel(lam) *
               ctx.phi(kI * lam.cast<Complex>(), a);
      }
      return mf * acc / static_cast<double>(worder * worder);
    }
  }
}

GridFunction inverse_hypergeometric_fourier(const TransformContext& ctx,
                                            const GridFunction& Ff,
                                            const QuadratureGrid& a_grid) {
  require_spectral_decay(ctx, Ff);
  GridFunction out;
  out.grid = a_grid;
  out.symmetry = Symmetry::WInvariant;
  out.values.resize(a_grid.size());
  const double mf = measure_factor(Ff.grid.rank);
  const int worder = ctx.weyl().order();
  switch (ctx.phi_mode()) {
    case TransformContext::PhiMode::Flat: {
      require_w_invariant_tag(Ff, "inverse hypergeometric Fourier transform");
      CVec coeffs = Ff.grid.weights.cast<Complex>().cwiseProduct(Ff.values);
      out.values =
          (mf / worder) * oscillatory_sum(Ff.grid, coeffs, a_grid, 1.0);
      break;
    }
    case TransformContext::PhiMode::GeometricComplex: {
      CVec coeffs(Ff.grid.size());
      for (Eigen::Index j = 0; j < Ff.grid.size(); ++j)
        coeffs[j] = Ff.grid.weights[j] * Ff.values[j] *
                    ctx.inv_c(-kI * Ff.grid.node(j).cast<Complex>());
      CVec base = oscillatory_sum(Ff.grid, coeffs, a_grid, 1.0);
      for (Eigen::Index p = 0; p < a_grid.size(); ++p) {
        const Complex dh =
            delta_half(ctx.root_system(), a_grid.node(p).cast<Complex>());
        out.values[p] = mf * base[p] / (static_cast<double>(worder) * dh);
      }
      break;
    }
    case TransformContext::PhiMode::Series: {
      for (Eigen::Index p = 0; p < a_grid.size(); ++p)
        out.values[p] = inverse_hypergeometric_fourier_at(
            ctx, Ff, TorusPoint::on_A(a_grid.node(p)));
      break;
    }
  }
  return out;
}

std::pair<double, double> plancherel_check(const TransformContext& ctx,
                                           const GridFunction& f,
                                           const QuadratureGrid& lambda_grid) {
  const GridFunction Ff = hypergeometric_fourier(ctx, f, lambda_grid);
  const double lhs = norm_sq(f, [&](const Vec& h) { return ctx.delta(h); });
  const double worder = ctx.weyl().order();
  const double rhs =
      norm_sq(Ff, [&](const Vec& l) { return ctx.plancherel(l); }) / (worder * worder);
  return {lhs, rhs};
}

GridFunction sample_L(const TransformContext& ctx,
                      const std::function<Complex(const Vec&)>& f,
                      const QuadratureGrid& a_grid, double step) {
  const RootSystem& rs = ctx.root_system();
  GridFunction out;
  out.grid = a_grid;
  out.symmetry = Symmetry::None;
  out.values.resize(a_grid.size());
  for (Eigen::Index i = 0; i < a_grid.size(); ++i) {
    const Vec h = a_grid.node(i);
    double wall = std::numeric_limits<double>::infinity();
    for (const Vec& alpha : rs.positive_roots)
      wall = std::min(wall, std::abs(alpha.dot(h)) / alpha.norm());
    const double eff = std::min(step, 0.35 * wall);
    if (eff < 1e-6) {
      // essentially on a wall; W-invariant test data vanishes to first order
      // there, so the singular first-order term contributes nothing
      out.values[i] = 0.0;
      continue;
    }
    out.values[i] = apply_L(rs, ctx.multiplicity(), f, h, eff);
  }
  return out;
}

double symbol_laplace_residual(const TransformContext& ctx, const GridFunction& f,
                               const GridFunction& lf, const Vec& lambda) {
  const Complex lhs = hypergeometric_fourier_at(ctx, lf, lambda);
  const Complex rhs = hypergeometric_fourier_at(ctx, f, lambda);
  const double factor = lambda.squaredNorm() + ctx.rho_norm_sq();
  return std::abs(lhs + factor * rhs);
}

Complex abel_transform_at(const TransformContext& ctx, const GridFunction& Ff,
                          const Vec& x) {
  (void)ctx;
  return euclidean_inverse_fourier_at(Ff, x);
}

GridFunction abel_transform(const TransformContext& ctx, const GridFunction& f,
                            const QuadratureGrid& lambda_grid) {
  const GridFunction Ff = hypergeometric_fourier(ctx, f, lambda_grid);
  GridFunction out = euclidean_inverse_fourier(Ff, f.grid);
  out.symmetry = Symmetry::WInvariant;
  return out;
}

Complex lambda_map_at(const TransformContext& ctx, const GridFunction& Ff, const Vec& x) {
  const double mf = measure_factor(Ff.grid.rank);
  Complex acc = 0.0;
  for (Eigen::Index j = 0; j < Ff.grid.size(); ++j) {
    const Vec lam = Ff.grid.node(j);
    acc += Ff.grid.weights[j] * Ff.values[j] *
           ctx.inv_c(-kI * lam.cast<Complex>()) *
           std::exp(kI * lam.dot(x));
  }
  return mf * acc / static_cast<double>(ctx.weyl().order());
}

GridFunction lambda_map(const TransformContext& ctx, const GridFunction& f,
                        const QuadratureGrid& lambda_grid,
                        double decay_threshold) {
  const GridFunction Ff = hypergeometric_fourier(ctx, f, lambda_grid, decay_threshold);
  CVec coeffs(Ff.grid.size());
  for (Eigen::Index j = 0; j < Ff.grid.size(); ++j)
    coeffs[j] = Ff.grid.weights[j] * Ff.values[j] *
                ctx.inv_c(-kI * Ff.grid.node(j).cast<Complex>());
  GridFunction out;
  out.grid = f.grid;
  out.symmetry = Symmetry::TauWInvariant;
  out.values = (measure_factor(Ff.grid.rank) / ctx.weyl().order()) *
               oscillatory_sum(Ff.grid, coeffs, f.grid, 1.0);
  return out;
}

namespace {
long long quantize_node(const Vec& v, double cell) {
  long long key = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    key = key * 2000003 + static_cast<long long>(std::llround(v[i] / cell));
  return key;
}
}  // namespace

CVec tau_action_points(const TransformContext& ctx, const Mat& s,
                       const std::vector<Vec>& nodes, const CVec& values) {
  const double cell = 1e-7;
  std::unordered_map<long long, int> lookup;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    lookup[quantize_node(nodes[i], cell)] = static_cast<int>(i);
  const CFunction c(ctx.root_system(), ctx.multiplicity());
  CVec out(values.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Vec pre = s.transpose() * nodes[i];
    const auto it = lookup.find(quantize_node(pre, cell));
    if (it == lookup.end())
      throw std::invalid_argument("tau action: node set is not closed under W");
    Complex cse;
    if (ctx.multiplicity().is_even()) {
      const Complex num = ctx.inv_c(kI * nodes[i].cast<Complex>());
      const Complex den = ctx.inv_c(kI * pre.cast<Complex>());
      if (std::abs(den) == 0.0)
        throw PoleEncountered("tau action: cocycle undefined on a wall");
      cse = num / den;
    } else {
      cse = c_ratio(ctx.root_system(), ctx.multiplicity(), s,
                    Mat::Identity(s.rows(), s.cols()), nodes[i]);
    }
    out[static_cast<Eigen::Index>(i)] = cse * values[it->second];
  }
  return out;
}

double symmetry_defect(const WeylGroup& w, const GridFunction& f) {
  const double cell = 1e-7;
  std::unordered_map<long long, int> lookup;
  for (Eigen::Index i = 0; i < f.grid.size(); ++i)
    lookup[quantize_node(f.grid.node(i), cell)] = static_cast<int>(i);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < f.grid.size(); ++i)
    for (const Mat& e : w.elements) {
      const auto it = lookup.find(quantize_node(Vec(e * f.grid.node(i)), cell));
      if (it == lookup.end()) continue;
      worst = std::max(worst, std::abs(f.values[i] - f.values[it->second]));
    }
  return worst;
}

GridFunction tau_action(const TransformContext& ctx, const Mat& s, const GridFunction& F) {
  std::vector<Vec> nodes;
  nodes.reserve(F.grid.size());
  for (Eigen::Index i = 0; i < F.grid.size(); ++i) nodes.push_back(F.grid.node(i));
  GridFunction out = F;
  out.values = tau_action_points(ctx, s, nodes, F.values);
  out.symmetry = Symmetry::None;
  return out;
}

}  // namespace rootfn
