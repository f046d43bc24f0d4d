#include "rootfn/heat.hpp"

#include <cmath>
#include <limits>

namespace rootfn {

namespace {
constexpr Complex kI{0.0, 1.0};
}

FockBoxes default_fock_boxes(double t, double lambda_radius, double a_radius) {
  FockBoxes b;
  b.y_radius = 2.0 * t * lambda_radius + 6.0 * std::sqrt(2.0 * t);
  b.x_radius = a_radius + 6.0 * std::sqrt(2.0 * t);
  return b;
}

Complex euclidean_heat_at(const GridFunction& fhat, const Vec& x, const Vec& y,
                          double t) {
  if (!(t > 0.0)) throw std::invalid_argument("heat time must be positive");
  const double mf = measure_factor(fhat.grid.rank);
  Complex acc = 0.0;
  for (Eigen::Index j = 0; j < fhat.grid.size(); ++j) {
    const Vec lam = fhat.grid.node(j);
    acc += fhat.grid.weights[j] * fhat.values[j] *
           std::exp(-t * lam.squaredNorm()) *
           std::exp(Complex(-lam.dot(y), lam.dot(x)));
  }
  return mf * acc;
}

namespace {

// values[ (X node), (Y node) ] of sum_j q_j e^{i lambda_j X} e^{-lambda_j . Y}
CMat complex_box_sum(const QuadratureGrid& lambda_grid, const CVec& q,
                     const QuadratureGrid& x_grid, const QuadratureGrid& y_grid) {
  CMat out(x_grid.size(), y_grid.size());
  for (Eigen::Index iy = 0; iy < y_grid.size(); ++iy) {
    const Vec y = y_grid.node(iy);
    CVec qy(q.size());
    for (Eigen::Index j = 0; j < lambda_grid.size(); ++j)
      qy[j] = q[j] * std::exp(-lambda_grid.node(j).dot(y));
    for (Eigen::Index ix = 0; ix < x_grid.size(); ++ix) {
      const Vec x = x_grid.node(ix);
      Complex acc = 0.0;
      for (Eigen::Index j = 0; j < lambda_grid.size(); ++j)
        acc += qy[j] * std::exp(kI * lambda_grid.node(j).dot(x));
      out(ix, iy) = acc;
    }
  }
  return out;
}

}  // namespace

HolomorphicGridFunction euclidean_heat_grid(const GridFunction& fhat, double t,
                                            const QuadratureGrid& x_grid,
                                            const QuadratureGrid& y_grid) {
  if (!(t > 0.0)) throw std::invalid_argument("heat time must be positive");
  const double mf = measure_factor(fhat.grid.rank);
  CVec q(fhat.grid.size());
  for (Eigen::Index j = 0; j < fhat.grid.size(); ++j)
    q[j] = fhat.grid.weights[j] * mf * fhat.values[j] *
           std::exp(-t * fhat.grid.node(j).squaredNorm());
  HolomorphicGridFunction h;
  h.x_grid = x_grid;
  h.y_grid = y_grid;
  h.provenance = HolomorphicProvenance::EuclideanSB;
  h.values = complex_box_sum(fhat.grid, q, x_grid, y_grid);
  return h;
}

std::pair<double, double> euclidean_segal_bargmann_unitarity(
    const GridFunction& f, double t, const QuadratureGrid& lambda_grid,
    const QuadratureGrid& x_grid, const QuadratureGrid& y_grid) {
  const double lhs = norm_sq(f);
  const GridFunction fhat = euclidean_fourier(f, lambda_grid);
  const int rank = f.grid.rank;
  const double mf = measure_factor(rank);
  const CMat& u = euclidean_heat_grid(fhat, t, x_grid, y_grid).values;

  const FockWeight w{t, rank, 0.0};
  double rhs = 0.0, edge = 0.0, peak = 0.0;
  for (Eigen::Index ix = 0; ix < x_grid.size(); ++ix)
    for (Eigen::Index iy = 0; iy < y_grid.size(); ++iy) {
      const double cell = x_grid.weights[ix] * y_grid.weights[iy] * mf *
                          w(y_grid.node(iy)) * std::norm(u(ix, iy));
      rhs += cell;
      peak = std::max(peak, std::abs(cell));
      const bool on_edge = ix == 0 || ix + 1 == x_grid.size() || iy == 0 ||
                           iy + 1 == y_grid.size();
      if (on_edge) edge = std::max(edge, std::abs(cell));
    }
  if (peak > 0.0 && edge / peak > 1e-6)
    throw InsufficientDecay("Segal-Bargmann quadrature box too small: boundary "
                            "cells still carry mass");
  return {lhs, rhs};
}

namespace {
SpectralMultiplier heat_multiplier(const TransformContext& ctx, double t) {
  const HeatParameters hp(t, ctx.rho_norm_sq());
  return SpectralMultiplier{"heat",
                            [hp](const Vec& lam) { return Complex(hp.multiplier(lam), 0.0); }};
}
}  // namespace

Complex heat_solution_at(const TransformContext& ctx, const GridFunction& Ff,
                         const TorusPoint& a, double t) {
  if (!in_domain(tube_domain(ctx.root_system(), DomainKind::Omega), a.log_imag))
    throw DomainError("heat solution requested outside the tube A(Omega)");
  return inverse_hypergeometric_fourier_at(ctx, apply_multiplier(heat_multiplier(ctx, t), Ff),
                                           a);
}

GridFunction heat_solution(const TransformContext& ctx, const GridFunction& Ff,
                           const QuadratureGrid& a_grid, double t) {
  return inverse_hypergeometric_fourier(ctx, apply_multiplier(heat_multiplier(ctx, t), Ff),
                                        a_grid);
}

std::pair<double, double> image_membership(const TransformContext& ctx,
                                           const GridFunction& f_on_a, double t,
                                           const QuadratureGrid& lambda_grid) {
  const double cond1 = norm_sq(f_on_a, [&](const Vec& h) { return ctx.delta(h); });
  // numerically restricted data carries delta-amplified roundoff at the box
  // edge; the loose gate still rejects genuinely non-decaying input
  const GridFunction g = hypergeometric_fourier(ctx, f_on_a, lambda_grid, 1e-3);
  const double mf = measure_factor(lambda_grid.rank);
  double cond2 = 0.0;
  bool overflow = false;
  for (Eigen::Index j = 0; j < g.grid.size(); ++j) {
    const Vec lam = g.grid.node(j);
    const double amp =
        std::exp(2.0 * t * (lam.squaredNorm() + ctx.rho_norm_sq()));
    const double term =
        g.grid.weights[j] * mf * amp * std::norm(g.values[j]) * ctx.plancherel(lam);
    if (!std::isfinite(term) || term > 1e250) {
      overflow = true;
      break;
    }
    cond2 += term;
  }
  if (overflow) cond2 = std::numeric_limits<double>::infinity();
  return {cond1, cond2};
}

namespace {

CVec lambda_extension_coeffs(const TransformContext& ctx, const GridFunction& Ff,
                             double t) {
  const HeatParameters hp(t, ctx.rho_norm_sq());
  const double mf = measure_factor(Ff.grid.rank);
  CVec q(Ff.grid.size());
  for (Eigen::Index j = 0; j < Ff.grid.size(); ++j) {
    const Vec lam = Ff.grid.node(j);
    q[j] = Ff.grid.weights[j] * mf * hp.multiplier(lam) * Ff.values[j] *
           ctx.inv_c(-kI * lam.cast<Complex>()) /
           static_cast<double>(ctx.weyl().order());
  }
  return q;
}

}  // namespace

Complex lambda_extension_at(const TransformContext& ctx, const GridFunction& Ff,
                            const Vec& x, const Vec& y, double t) {
  const CVec q = lambda_extension_coeffs(ctx, Ff, t);
  Complex acc = 0.0;
  for (Eigen::Index j = 0; j < Ff.grid.size(); ++j) {
    const Vec lam = Ff.grid.node(j);
    acc += q[j] * std::exp(Complex(-lam.dot(y), lam.dot(x)));
  }
  return acc;
}

HolomorphicGridFunction lambda_extension_grid(const TransformContext& ctx,
                                              const GridFunction& Ff, double t,
                                              const QuadratureGrid& x_grid,
                                              const QuadratureGrid& y_grid) {
  HolomorphicGridFunction h;
  h.x_grid = x_grid;
  h.y_grid = y_grid;
  h.provenance = HolomorphicProvenance::LambdaExtension;
  h.values = complex_box_sum(Ff.grid, lambda_extension_coeffs(ctx, Ff, t), x_grid, y_grid);
  return h;
}

double fock_norm(const TransformContext& ctx, const GridFunction& Ff, double t,
                 const QuadratureGrid& x_grid, const QuadratureGrid& y_grid) {
  const HolomorphicGridFunction h = lambda_extension_grid(ctx, Ff, t, x_grid, y_grid);
  const FockWeight w{t, x_grid.rank, ctx.rho_norm_sq()};
  const double mf = measure_factor(x_grid.rank);
  double acc = 0.0, edge = 0.0, peak = 0.0;
  for (Eigen::Index ix = 0; ix < x_grid.size(); ++ix)
    for (Eigen::Index iy = 0; iy < y_grid.size(); ++iy) {
      const double cell = x_grid.weights[ix] * y_grid.weights[iy] * mf *
                          w(y_grid.node(iy)) * std::norm(h.values(ix, iy));
      acc += cell;
      peak = std::max(peak, cell);
      if (ix == 0 || ix + 1 == x_grid.size()) edge = std::max(edge, cell);
    }
  if (peak > 0.0 && edge / peak > 1e-6)
    throw InsufficientDecay("Fock quadrature X box too small: boundary cells "
                            "still carry mass");
  return acc;
}

std::pair<double, double> hall_mitchell_check(const TransformContext& ctx,
                                              const GridFunction& f, double t,
                                              const QuadratureGrid& lambda_grid,
                                              const QuadratureGrid& x_grid,
                                              const QuadratureGrid& y_grid) {
  if (!ctx.multiplicity().is_geometric_complex())
    throw std::invalid_argument("Hall-Mitchell identity requires m == 2 on a "
                                "reduced system");
  const double lhs = norm_sq(f, [&](const Vec& h) { return ctx.delta(h); });
  const GridFunction Ff = hypergeometric_fourier(ctx, f, lambda_grid);
  const double rhs = fock_norm(ctx, Ff, t, x_grid, y_grid);
  return {lhs, rhs};
}

double cauchy_riemann_residual(const std::function<Complex(const Vec&, const Vec&)>& f,
                               const std::vector<std::pair<Vec, Vec>>& points,
                               double step) {
  double worst = 0.0;
  for (const auto& [x, y] : points) {
    const int r = static_cast<int>(x.size());
    const double scale = std::abs(f(x, y)) + 1e-300;
    for (int k = 0; k < r; ++k) {
      Vec e = Vec::Zero(r);
      e[k] = 1.0;
      auto dx = [&](double s) { return f(x + s * e, y); };
      auto dy = [&](double s) { return f(x, y + s * e); };
      const Complex ddx =
          (-dx(2 * step) + 8.0 * dx(step) - 8.0 * dx(-step) + dx(-2 * step)) /
          (12.0 * step);
      const Complex ddy =
          (-dy(2 * step) + 8.0 * dy(step) - 8.0 * dy(-step) + dy(-2 * step)) /
          (12.0 * step);
      const Complex dbar = 0.5 * (ddx + kI * ddy);
      worst = std::max(worst, std::abs(dbar) / scale);
    }
  }
  return worst;
}

}  // namespace rootfn
