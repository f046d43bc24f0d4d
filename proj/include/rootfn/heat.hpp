#ifndef ROOTFN_HEAT_HPP
#define ROOTFN_HEAT_HPP

#include <functional>
#include <utility>

#include "rootfn/quadrature.hpp"
#include "rootfn/transform.hpp"
#include "rootfn/types.hpp"

namespace rootfn {

struct HeatParameters {
  double t = 0.0;
  double rho_norm_sq = 0.0;
  HeatParameters(double time, double rho2) : t(time), rho_norm_sq(rho2) {
    if (!(t > 0.0)) throw std::invalid_argument("heat time must be positive");
    if (rho2 < 0.0) throw std::invalid_argument("rho norm squared must be >= 0");
  }
  /// spectral symbol exp(-t (|lambda|^2 + |rho|^2))
  double multiplier(const Vec& lambda) const {
    return std::exp(-t * (lambda.squaredNorm() + rho_norm_sq));
  }
};

/// Gaussian weight on the complexified space; independent of the real part.
struct FockWeight {
  double t = 0.0;
  int rank = 1;
  double rho_norm_sq = 0.0;
  double operator()(const Vec& y) const {
    return std::pow(2.0 * kPi * t, -0.5 * rank) *
           std::exp(2.0 * t * rho_norm_sq - y.squaredNorm() / (2.0 * t));
  }
};

struct FockBoxes {
  double x_radius = 0.0;
  double y_radius = 0.0;
};

/// Box sizes capturing the Fock-norm mass: the Y box must reach 2t times the
/// spectral radius (the integrand in Y tracks the spectral density at
/// lambda = Y/2t) plus a Gaussian margin.
FockBoxes default_fock_boxes(double t, double lambda_radius, double a_radius);

// --- Euclidean case -------------------------------------------------------------

/// Holomorphically extended heat solution from spectral samples:
/// u(X + iY, t) = Int exp(-t |lambda|^2) fhat(lambda) e^{i lambda (X + iY)} dlambda.
Complex euclidean_heat_at(const GridFunction& fhat, const Vec& x, const Vec& y, double t);

/// (||f||^2, Fock norm of the heat extension); unitarity of the flat
/// Segal-Bargmann transform makes the two agree.
std::pair<double, double> euclidean_segal_bargmann_unitarity(
    const GridFunction& f, double t, const QuadratureGrid& lambda_grid,
    const QuadratureGrid& x_grid, const QuadratureGrid& y_grid);

// --- Hypergeometric case ---------------------------------------------------------

/// u(a, t) = (1/|W|^2) Int e^{-t(|lambda|^2+|rho|^2)} Ff(lambda)
///           phi_{i lambda}(a) dnu(lambda);  a must lie in the tube A(Omega).
Complex heat_solution_at(const TransformContext& ctx, const GridFunction& Ff,
                         const TorusPoint& a, double t);

GridFunction heat_solution(const TransformContext& ctx, const GridFunction& Ff,
                           const QuadratureGrid& a_grid, double t);

/// Membership data for the image of the heat transform at time t:
/// first = ||F|_A||^2 in L^2(d mu), second = the truncated norm
/// ||e^{(|.|^2+|rho|^2) t} F(m; F|_A)||^2 in L^2(d nu) (infinity on overflow).
std::pair<double, double> image_membership(const TransformContext& ctx,
                                           const GridFunction& f_on_a, double t,
                                           const QuadratureGrid& lambda_grid);

/// Holomorphic extension of Lambda(F|_A) evaluated spectrally:
/// (1/|W|) Int e^{-t(|lambda|^2+|rho|^2)} [Ff(lambda)/c(-i lambda)]
///          e^{i lambda (X+iY)} dlambda.
Complex lambda_extension_at(const TransformContext& ctx, const GridFunction& Ff,
                            const Vec& x, const Vec& y, double t);

/// Double quadrature of |Lambda F|^2 against the Fock weight.
double fock_norm(const TransformContext& ctx, const GridFunction& Ff, double t,
                 const QuadratureGrid& x_grid, const QuadratureGrid& y_grid);

/// (||f||^2 in L^2(d mu), Fock-weighted norm of delta^{1/2} U); requires
/// m == 2 on a reduced system.
std::pair<double, double> hall_mitchell_check(const TransformContext& ctx,
                                              const GridFunction& f, double t,
                                              const QuadratureGrid& lambda_grid,
                                              const QuadratureGrid& x_grid,
                                              const QuadratureGrid& y_grid);

// --- Holomorphy diagnostics ------------------------------------------------------

enum class HolomorphicProvenance { EuclideanSB, LambdaExtension, DirectTube };

/// Samples over a complex box, stored as (X index, Y index).
struct HolomorphicGridFunction {
  QuadratureGrid x_grid;
  QuadratureGrid y_grid;
  CMat values;
  HolomorphicProvenance provenance = HolomorphicProvenance::LambdaExtension;
};

HolomorphicGridFunction lambda_extension_grid(const TransformContext& ctx,
                                              const GridFunction& Ff, double t,
                                              const QuadratureGrid& x_grid,
                                              const QuadratureGrid& y_grid);

/// Heat extension of flat spectral data over a complex box.
HolomorphicGridFunction euclidean_heat_grid(const GridFunction& fhat, double t,
                                            const QuadratureGrid& x_grid,
                                            const QuadratureGrid& y_grid);

/// Max over sample points of |dbar F| / (local scale), with dbar estimated by
/// fourth-order central differences per complex coordinate.
double cauchy_riemann_residual(const std::function<Complex(const Vec&, const Vec&)>& f,
                               const std::vector<std::pair<Vec, Vec>>& points,
                               double step);

}  // namespace rootfn

#endif
