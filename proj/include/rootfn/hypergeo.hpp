#ifndef ROOTFN_HYPERGEO_HPP
#define ROOTFN_HYPERGEO_HPP

#include <functional>
#include <vector>

#include "rootfn/rootsys.hpp"
#include "rootfn/types.hpp"

namespace rootfn {

/// Complex linear functional on the ambient space, in the orthonormal frame.
struct SpectralParameter {
  CVec lambda;

  SpectralParameter() = default;
  explicit SpectralParameter(CVec l) : lambda(std::move(l)) {}
  explicit SpectralParameter(const Vec& l) : lambda(l.cast<Complex>()) {}

  /// lambda_alpha = (lambda, alpha) / (alpha, alpha).
  Complex component(const Vec& alpha) const {
    return bilinear(lambda, alpha) / alpha.squaredNorm();
  }
};

enum class TorusTag { A, A_Omega, A_plus_2Omega };

/// Point of the complexified torus, stored by its logarithm H_R + i H_I.
struct TorusPoint {
  Vec log_real;
  Vec log_imag;
  TorusTag tag = TorusTag::A;

  static TorusPoint on_A(const Vec& h);
  /// tag A_Omega; validates H_I in Omega.
  static TorusPoint in_tube(const RootSystem& rs, const Vec& hr, const Vec& hi);
  /// tag A_plus_2Omega; validates H_R in the open chamber and H_I in 2*Omega.
  static TorusPoint in_positive_tube(const RootSystem& rs, const Vec& hr, const Vec& hi);

  CVec log_complex() const;
};

/// a^lambda = exp(lambda(H_R + i H_I)); single-valued via the stored logarithm.
Complex torus_power(const TorusPoint& a, const CVec& lambda);

/// Coefficients of the exponential series, indexed by the lattice shell.
struct GammaTable {
  LatticeShell shell;
  CVec lambda;
  std::vector<Complex> values;
  bool singular_flag = false;
};

/// Fill the coefficient table in graded order from the two-term recursion
/// Gamma_0 = 1,
/// (mu, mu - 2 lambda) Gamma_mu
///     = 2 sum_{alpha > 0} m_alpha sum_{k >= 1, mu - 2 k alpha in the cone}
///       Gamma_{mu - 2 k alpha} (mu + rho - 2 k alpha - lambda, alpha).
/// The side condition (mu, mu - 2 lambda) != 0 is required for every nonzero
/// mu of the truncated cone; a near-vanishing denominator raises
/// SingularParameter (the caller is expected to perturb lambda).
GammaTable gamma_coefficients(const RootSystem& rs, const MultiplicityFunction& m,
                              const SpectralParameter& lambda, int cap);

/// Gindikin-Karpelevic product over the indivisible positive roots, normalized
/// by a cached constant so that the value at rho(m) is exactly 1. Factors with
/// m_alpha = m_{2 alpha} = 0 collapse to a lambda-independent constant (by the
/// duplication formula) and are evaluated in that form.
class CFunction {
 public:
  CFunction(const RootSystem& rs, const MultiplicityFunction& m);

  Complex operator()(const CVec& lambda) const;
  Complex unnormalized(const CVec& lambda) const;
  double kappa0() const { return kappa0_; }

 private:
  struct Term {
    Vec alpha;
    double m1 = 0.0;  // m_alpha
    double m2 = 0.0;  // m_{2 alpha}
    bool constant = false;
  };
  std::vector<Term> terms_;
  double kappa0_ = 1.0;
};

Complex c_function(const RootSystem& rs, const MultiplicityFunction& m,
                   const SpectralParameter& lambda);

/// c_{s,t}(m; lambda) = c(m; s^{-1} i lambda) / c(m; t^{-1} i lambda),
/// unimodular for real lambda.
Complex c_ratio(const RootSystem& rs, const MultiplicityFunction& m, const Mat& s,
                const Mat& t, const Vec& lambda);

struct SeriesInfo {
  int cap_used = 0;
  double last_shell = 0.0;  // magnitude of the last graded shell
  bool converged = false;
};

/// Shared per-(root system, multiplicity) state for series evaluation:
/// Weyl group, rho, c-function and the lattice cone.
class HypergeometricEvaluator {
 public:
  HypergeometricEvaluator(RootSystem rs, MultiplicityFunction m, int hard_cap = 64);

  /// Exponential series a^{lambda - rho} sum Gamma_mu a^{-mu} on the positive
  /// tube. cap <= 0 selects the adaptive rule: extend shells until the last
  /// one contributes < 1e-12 relative, up to the hard cap; failure to
  /// converge (a too close to a chamber wall) raises DomainError.
  Complex series(const CVec& lambda, const TorusPoint& a, int cap = -1,
                 SeriesInfo* info = nullptr) const;

  /// Weyl-symmetrized sum  sum_w c(w lambda) * series(w lambda, a).
  /// The space variable is first moved into the closed positive chamber by
  /// the Weyl action; singular lambda is perturbed symmetrically and averaged.
  Complex phi(const CVec& lambda, const TorusPoint& a, int cap = -1) const;

  const RootSystem& root_system() const { return rs_; }
  const MultiplicityFunction& multiplicity() const { return m_; }
  const WeylGroup& weyl() const { return w_; }
  const Vec& rho_vector() const { return rho_; }
  const CFunction& c() const { return c_; }
  int hard_cap() const { return hard_cap_; }

 private:
  Complex phi_direct(const CVec& lambda, const TorusPoint& a, int cap) const;
  bool lambda_is_singular(const CVec& lambda) const;

  RootSystem rs_;
  MultiplicityFunction m_;
  WeylGroup w_;
  Vec rho_;
  CFunction c_;
  int hard_cap_;
};

Complex harish_chandra_series(const RootSystem& rs, const MultiplicityFunction& m,
                              const SpectralParameter& lambda, const TorusPoint& a,
                              int cap = -1, SeriesInfo* info = nullptr);

Complex hypergeometric_function(const RootSystem& rs, const MultiplicityFunction& m,
                                const SpectralParameter& lambda, const TorusPoint& a,
                                int cap = -1);

/// delta(m; a) = prod over positive roots of |a^alpha - a^{-alpha}|^{m_alpha};
/// requires H_I = 0.
double delta_density(const RootSystem& rs, const MultiplicityFunction& m,
                     const TorusPoint& a);

/// |c(m; i lambda)|^{-2} for real lambda. Even multiplicities are evaluated
/// through the polynomial form of 1/c, which has no singularities.
double plancherel_density(const RootSystem& rs, const MultiplicityFunction& m,
                          const Vec& lambda);

/// Numerical application of
///   L(m) = sum_j d(H_j)^2
///        + sum_{alpha > 0} m_alpha (1+e^{-2 alpha})/(1-e^{-2 alpha}) d(h_alpha)
/// by fourth-order central differences with the given step. Raises
/// DomainError when the stencil would reach within step distance of a wall.
Complex apply_L(const RootSystem& rs, const MultiplicityFunction& m,
                const std::function<Complex(const Vec&)>& f, const Vec& h, double step);

/// Richardson extrapolation of apply_L over steps h and h/2 (6th order).
Complex apply_L_richardson(const RootSystem& rs, const MultiplicityFunction& m,
                           const std::function<Complex(const Vec&)>& f, const Vec& h,
                           double step);

struct GrowthBoundReport {
  double max_ratio = 0.0;
  double min_ratio = 0.0;
  double fitted_constant = 0.0;  // = max_ratio
  int samples = 0;
};

/// Compares |phi_lambda| on the samples against the exponential bound
/// exp(-min_w Im(w lambda)(H_I) + max_w (w rho)(H_I) + max_w Re(w lambda)(H_R))
/// and reports the ratio statistics (the fitted constant is the max ratio).
GrowthBoundReport growth_bound_check(const RootSystem& rs, const MultiplicityFunction& m,
                                     const SpectralParameter& lambda,
                                     const std::vector<TorusPoint>& samples);

}  // namespace rootfn

#endif
