#ifndef ROOTFN_EVEN_CASE_HPP
#define ROOTFN_EVEN_CASE_HPP

#include <functional>
#include <vector>

#include "rootfn/hypergeo.hpp"
#include "rootfn/rootsys.hpp"
#include "rootfn/types.hpp"

namespace rootfn {

/// Polynomial form of the reciprocal c-function for even multiplicities on a
/// reduced system:
///   1/c(m; lambda) = prod_{alpha > 0} prod_{k=0}^{m_alpha/2 - 1}
///                    (lambda_alpha + k) / (rho(m)_alpha + k).
/// Entire in lambda; agrees with the Gamma-product reciprocal wherever both
/// are defined.
Complex inv_c_polynomial(const RootSystem& rs, const MultiplicityFunction& m,
                         const CVec& lambda);

/// pi(lambda) = prod over positive roots of (alpha, lambda).
Complex pi_product(const RootSystem& rs, const CVec& lambda);

/// prod over positive roots of (a^alpha - a^{-alpha}), as an entire function
/// of the logarithm (no absolute values); the square root of delta for m == 2.
Complex delta_half(const RootSystem& rs, const CVec& log_a);

/// Constant-coefficient operator written as a product of affine factors
/// (-1/2 d(H_alpha) + k), an overall scalar, and an optional multiplication
/// by delta^{1/2} in front.
struct ExponentialPolynomialOperator {
  struct Factor {
    Vec capital_h;  // H_alpha = 2 alpha / (alpha, alpha)
    double shift = 0.0;
  };
  std::vector<Factor> factors;
  double kappa = 1.0;
  bool delta_half_prefactor = false;
  const RootSystem* rs = nullptr;

  /// Eigenvalue of the constant-coefficient part on a^lambda, i.e.
  /// kappa * prod (-lambda_alpha + k); the delta^{1/2} prefactor is excluded.
  Complex symbol(const CVec& lambda) const;

  /// Apply to a black-box function by nested central differences (4th order
  /// per factor), including the delta^{1/2} prefactor when set.
  Complex apply_fd(const std::function<Complex(const Vec&)>& g, const Vec& h,
                   double step) const;
};

/// Psi_A for even multiplicities on a reduced system:
/// kappa(m) prod_{alpha>0} prod_{k=0}^{m_alpha/2-1} (-1/2 d(H_alpha) + k),
/// whose action on a^{i lambda} is multiplication by 1/c(m; -i lambda).
ExponentialPolynomialOperator build_psi_a_operator(const RootSystem& rs,
                                                   const MultiplicityFunction& m);

/// D = delta^{1/2} Psi_A, defined for m == 2 on a reduced system.
ExponentialPolynomialOperator build_d_operator(const RootSystem& rs,
                                               const MultiplicityFunction& m);

/// Closed form of the hypergeometric function for m == 2 on a reduced system:
///   phi_lambda(a) = c(lambda) delta(a)^{-1/2} sum_w sign(w) a^{w lambda},
/// with c(lambda) = pi(rho)/pi(lambda). Points where pi(lambda) or
/// delta^{1/2}(a) nearly vanish are removable and handled by a four-point
/// symmetric perturbation average (O(eps^2), eps = 1e-5).
Complex phi_complex(const RootSystem& rs, const MultiplicityFunction& m,
                    const SpectralParameter& lambda, const TorusPoint& a);

struct AbelInversionReport {
  double max_relative_residual = 0.0;
  int points = 0;
};

/// Pointwise residual of  D(Af) - |W| delta f  over real chamber points with
/// delta above the floor, with A evaluated spectrally from the transform
/// values and D applied by finite differences.
/// `abel` must evaluate (Af)(exp H) at arbitrary real H.
AbelInversionReport abel_inversion_check(const RootSystem& rs,
                                         const MultiplicityFunction& m,
                                         const std::function<Complex(const Vec&)>& abel,
                                         const std::function<double(const Vec&)>& f,
                                         const std::vector<Vec>& points,
                                         double fd_step = 0.01,
                                         double delta_floor = 0.01);

}  // namespace rootfn

#endif
