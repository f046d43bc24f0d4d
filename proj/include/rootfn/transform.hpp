#ifndef ROOTFN_TRANSFORM_HPP
#define ROOTFN_TRANSFORM_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "rootfn/hypergeo.hpp"
#include "rootfn/quadrature.hpp"
#include "rootfn/rootsys.hpp"
#include "rootfn/types.hpp"

namespace rootfn {

/// Named symbol acting by multiplication on spectral grid functions.
struct SpectralMultiplier {
  std::string name;
  std::function<Complex(const Vec&)> symbol;
};

GridFunction apply_multiplier(const SpectralMultiplier& m, const GridFunction& f);

/// Shared state for the transforms attached to one (root system, multiplicity)
/// pair. The hypergeometric kernel is routed through exact closed forms when
/// they exist (m == 0: sum of plane waves; m == 2 reduced: alternating-sum
/// form) and through the series otherwise.
class TransformContext {
 public:
  TransformContext(RootSystem rs, MultiplicityFunction m);

  const RootSystem& root_system() const { return rs_; }
  const MultiplicityFunction& multiplicity() const { return m_; }
  const WeylGroup& weyl() const { return w_; }
  const Vec& rho_vector() const { return rho_; }
  double rho_norm_sq() const { return rho_.squaredNorm(); }

  enum class PhiMode { Flat, GeometricComplex, Series };
  PhiMode phi_mode() const { return mode_; }

  Complex phi(const CVec& lambda, const TorusPoint& a) const;
  /// 1/c(m; mu); the polynomial form for even multiplicities.
  Complex inv_c(const CVec& mu) const;
  double plancherel(const Vec& lambda) const;
  double delta(const Vec& h) const;

 private:
  RootSystem rs_;
  MultiplicityFunction m_;
  WeylGroup w_;
  Vec rho_;
  CFunction c_;
  std::shared_ptr<HypergeometricEvaluator> series_;
  PhiMode mode_;
};

// --- Euclidean Fourier transform, regularly normalized -----------------------

Complex euclidean_fourier_at(const GridFunction& f, const Vec& lambda);
GridFunction euclidean_fourier(const GridFunction& f, const QuadratureGrid& lambda_grid);
Complex euclidean_inverse_fourier_at(const GridFunction& F, const Vec& x);
GridFunction euclidean_inverse_fourier(const GridFunction& F, const QuadratureGrid& x_grid);

// --- Hypergeometric Fourier transform ----------------------------------------

Complex hypergeometric_fourier_at(const TransformContext& ctx, const GridFunction& f,
                                  const Vec& lambda);
/// decay_threshold gates the boundary decay of f * delta; diagnostics that
/// re-transform numerically produced data (heat restrictions) may loosen it.
GridFunction hypergeometric_fourier(const TransformContext& ctx, const GridFunction& f,
                                    const QuadratureGrid& lambda_grid,
                                    double decay_threshold = 1e-10);

Complex inverse_hypergeometric_fourier_at(const TransformContext& ctx,
                                          const GridFunction& Ff, const TorusPoint& a);
GridFunction inverse_hypergeometric_fourier(const TransformContext& ctx,
                                            const GridFunction& Ff,
                                            const QuadratureGrid& a_grid);

/// (||f||^2 in L^2(d mu), ||(1/|W|) F f||^2 in L^2(d nu)); the caller asserts
/// closeness.
std::pair<double, double> plancherel_check(const TransformContext& ctx,
                                           const GridFunction& f,
                                           const QuadratureGrid& lambda_grid);

/// Samples of L(m) f over the grid, by finite differences; the step shrinks
/// automatically near chamber walls so that W-invariant test functions can be
/// sampled on full boxes.
GridFunction sample_L(const TransformContext& ctx,
                      const std::function<Complex(const Vec&)>& f,
                      const QuadratureGrid& a_grid, double step);

/// Residual |F(m; L f)(lambda) + (|lambda|^2 + |rho|^2) F(m; f)(lambda)|.
double symbol_laplace_residual(const TransformContext& ctx, const GridFunction& f,
                               const GridFunction& lf, const Vec& lambda);

// --- Abel transform and the unitary map Lambda --------------------------------

Complex abel_transform_at(const TransformContext& ctx, const GridFunction& Ff,
                          const Vec& x);
/// A = F_A^{-1} o F(m), returned on the grid of f.
GridFunction abel_transform(const TransformContext& ctx, const GridFunction& f,
                            const QuadratureGrid& lambda_grid);

Complex lambda_map_at(const TransformContext& ctx, const GridFunction& Ff, const Vec& x);
/// Lambda = (1/|W|) F_A^{-1} o (1/c(m; -i.)) o F(m), on the grid of f.
GridFunction lambda_map(const TransformContext& ctx, const GridFunction& f,
                        const QuadratureGrid& lambda_grid,
                        double decay_threshold = 1e-10);

/// tau_s F(lambda) = c_{s,e}(m; lambda) F(s^{-1} lambda); the node set must be
/// closed under the Weyl action.
GridFunction tau_action(const TransformContext& ctx, const Mat& s, const GridFunction& F);

/// Point-cloud variant for node sets built with weyl_orbit_points.
CVec tau_action_points(const TransformContext& ctx, const Mat& s,
                       const std::vector<Vec>& nodes, const CVec& values);

/// Largest |f(w x) - f(x)| over grid nodes whose Weyl images are themselves
/// nodes; realizes the W-invariance contract of tagged grid functions.
double symmetry_defect(const WeylGroup& w, const GridFunction& f);

}  // namespace rootfn

#endif
