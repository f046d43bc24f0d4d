#include "rootfn/hypergeo.hpp"

#include <algorithm>
#include <cmath>

#include "rootfn/even_case.hpp"
#include "rootfn/gamma.hpp"

namespace rootfn {

namespace {
constexpr Complex kI{0.0, 1.0};

// fixed generic direction for symmetric perturbations
Vec generic_direction(int rank) {
  Vec d(rank);
  d[0] = 1.0;
  if (rank > 1) d[1] = 0.6180339887498949;
  return d / d.norm();
}
}  // namespace

TorusPoint TorusPoint::on_A(const Vec& h) {
  return TorusPoint{h, Vec::Zero(h.size()), TorusTag::A};
}

TorusPoint TorusPoint::in_tube(const RootSystem& rs, const Vec& hr, const Vec& hi) {
  if (!in_domain(tube_domain(rs, DomainKind::Omega), hi))
    throw DomainError("imaginary part of the logarithm is not in Omega");
  return TorusPoint{hr, hi, TorusTag::A_Omega};
}

TorusPoint TorusPoint::in_positive_tube(const RootSystem& rs, const Vec& hr, const Vec& hi) {
  if (!in_domain(tube_domain(rs, DomainKind::PositiveChamber), hr))
    throw DomainError("real part of the logarithm is not in the positive chamber");
  if (!in_domain(tube_domain(rs, DomainKind::TwoOmega), hi))
    throw DomainError("imaginary part of the logarithm is not in 2*Omega");
  return TorusPoint{hr, hi, TorusTag::A_plus_2Omega};
}

CVec TorusPoint::log_complex() const {
  return log_real.cast<Complex>() + kI * log_imag.cast<Complex>();
}

Complex torus_power(const TorusPoint& a, const CVec& lambda) {
  return std::exp(bilinear(lambda, a.log_real) + kI * bilinear(lambda, a.log_imag));
}


namespace {

// per-root data shared by the recursion loops
struct RecursionData {
  std::vector<Complex> lambda_dot_alpha;
  std::vector<double> m_alpha;
};

RecursionData recursion_data(const RootSystem& rs, const MultiplicityFunction& m,
                             const CVec& lambda) {
  const int np = static_cast<int>(rs.positive_roots.size());
  RecursionData d;
  d.lambda_dot_alpha.resize(np);
  d.m_alpha.resize(np);
  for (int ai = 0; ai < np; ++ai) {
    d.lambda_dot_alpha[ai] = bilinear(lambda, rs.positive_roots[ai]);
    d.m_alpha[ai] = m.value(rs.positive_roots[ai]);
  }
  return d;
}

// one step of
//   (mu, mu - 2 lambda) Gamma_mu = 2 sum_alpha m_alpha sum_k
//       Gamma_{mu - 2 k alpha} (mu + rho - 2 k alpha - lambda, alpha)
// with values[0..i) already filled in graded order
Complex gamma_step(const RootSystem& rs, const Vec& rho_m, const RecursionData& d,
                   const LatticeShell& shell, const CVec& lambda, int i,
                   const std::vector<Complex>& values) {
  const Vec& mu = shell.points[i];
  const Complex denom = mu.squaredNorm() - 2.0 * bilinear(lambda, mu);
  const double denom_scale = 1.0 + mu.squaredNorm() + 2.0 * mu.norm() * lambda.norm();
  if (std::abs(denom) < 1e-10 * denom_scale)
    throw SingularParameter("vanishing recursion denominator at a cone point; "
                            "perturb lambda");
  Complex rhs = 0.0;
  for (std::size_t ai = 0; ai < rs.positive_roots.size(); ++ai) {
    if (d.m_alpha[ai] == 0.0) continue;
    const Vec& alpha = rs.positive_roots[ai];
    const Eigen::VectorXi& ca = rs.positive_in_simple[ai];
    Complex inner_sum = 0.0;
    for (int k = 1;; ++k) {
      const Eigen::VectorXi e = shell.exponents[i] - 2 * k * ca;
      const int j = shell.index_of(e);
      if (j < 0) break;  // left the cone; smaller k already covered
      const Complex weight =
          (mu + rho_m - 2.0 * k * alpha).dot(alpha) - d.lambda_dot_alpha[ai];
      inner_sum += values[j] * weight;
    }
    rhs += d.m_alpha[ai] * inner_sum;
  }
  return 2.0 * rhs / denom;
}

}  // namespace

GammaTable gamma_coefficients(const RootSystem& rs, const MultiplicityFunction& m,
                              const SpectralParameter& lambda, int cap) {
  GammaTable t;
  t.shell = lattice_shell(rs, cap);
  t.lambda = lambda.lambda;
  const Vec rho_m = rho(rs, m);
  const int n = static_cast<int>(t.shell.points.size());
  t.values.assign(n, Complex(0.0, 0.0));
  t.values[0] = 1.0;
  const RecursionData data = recursion_data(rs, m, lambda.lambda);
  for (int i = 1; i < n; ++i) {
    try {
      t.values[i] = gamma_step(rs, rho_m, data, t.shell, lambda.lambda, i, t.values);
    } catch (const SingularParameter&) {
      t.singular_flag = true;
      throw;
    }
  }
  return t;
}

CFunction::CFunction(const RootSystem& rs, const MultiplicityFunction& m) {
  for (const Vec& alpha : rs.indivisible_positive) {
    Term term;
    term.alpha = alpha;
    term.m1 = m.value(alpha);
    term.m2 = rs.is_root(2.0 * alpha) ? m.value(2.0 * alpha) : 0.0;
    term.constant = (term.m1 == 0.0 && term.m2 == 0.0);
    terms_.push_back(std::move(term));
  }
  const Vec rho_m = rho(rs, m);
  const Complex at_rho = unnormalized(rho_m.cast<Complex>());
  if (!std::isfinite(std::abs(at_rho)) || std::abs(at_rho) == 0.0)
    throw PoleEncountered("c-function normalization point is singular");
  kappa0_ = 1.0 / at_rho.real();
}

Complex CFunction::unnormalized(const CVec& lambda) const {
  Complex prod = 1.0;
  for (const Term& t : terms_) {
    if (t.constant) {
      // duplication formula collapses the factor to 1/(2 sqrt(pi))
      prod *= 1.0 / (2.0 * std::sqrt(kPi));
      continue;
    }
    const Complex la = bilinear(lambda, t.alpha) / t.alpha.squaredNorm();
    const Complex x = 0.5 * (la + 0.5 * t.m1 + 1.0);
    const Complex y = 0.5 * (la + 0.5 * t.m1 + t.m2);
    const bool num_pole = near_gamma_pole(la);
    const bool den_pole = near_gamma_pole(x) || near_gamma_pole(y);
    if (num_pole && !den_pole)
      throw PoleEncountered("lambda_alpha at a Gamma pole with no cancellation");
    if (num_pole && den_pole)
      throw PoleEncountered("lambda_alpha at a pole/pole point; perturb lambda");
    if (den_pole) {
      prod *= 0.0;  // 1/Gamma vanishes
      continue;
    }
    prod *= std::exp(-la * std::log(2.0)) * cgamma(la) / (cgamma(x) * cgamma(y));
  }
  return prod;
}

Complex CFunction::operator()(const CVec& lambda) const {
  return kappa0_ * unnormalized(lambda);
}

Complex c_function(const RootSystem& rs, const MultiplicityFunction& m,
                   const SpectralParameter& lambda) {
  return CFunction(rs, m)(lambda.lambda);
}

Complex c_ratio(const RootSystem& rs, const MultiplicityFunction& m, const Mat& s,
                const Mat& t, const Vec& lambda) {
  const CFunction c(rs, m);
  const CVec il = kI * lambda.cast<Complex>();
  const Complex num = c(s.transpose() * il);
  const Complex den = c(t.transpose() * il);
  if (std::abs(den) == 0.0 || !std::isfinite(std::abs(den)))
    throw PoleEncountered("c-ratio denominator vanishes");
  return num / den;
}

HypergeometricEvaluator::HypergeometricEvaluator(RootSystem rs, MultiplicityFunction m,
                                                 int hard_cap)
    : rs_(std::move(rs)),
      m_(std::move(m)),
      w_(weyl_group(rs_)),
      rho_(rho(rs_, m_)),
      c_(rs_, m_),
      hard_cap_(hard_cap) {}

Complex HypergeometricEvaluator::series(const CVec& lambda, const TorusPoint& a, int cap,
                                        SeriesInfo* info) const {
  for (const Vec& alpha : rs_.simple_roots)
    if (!(alpha.dot(a.log_real) > 0.0))
      throw DomainError("series point is outside the positive tube");
  if (!in_domain(tube_domain(rs_, DomainKind::TwoOmega), a.log_imag))
    throw DomainError("series point is outside the positive tube");

  const bool adaptive = cap < 0;
  const int max_degree = adaptive ? hard_cap_ : std::min(cap, hard_cap_);
  const LatticeShell shell = lattice_shell(rs_, max_degree);
  const int n = static_cast<int>(shell.points.size());
  const RecursionData data = recursion_data(rs_, m_, lambda);

  std::vector<Complex> gamma(n, Complex(0.0, 0.0));
  gamma[0] = 1.0;
  Complex partial = 1.0;  // mu = 0 term, a^0
  double shell_mag = 0.0;
  int degree_done = 0;
  bool converged = !adaptive;
  int consecutive_small = 0;
  const double tail_tol = 1e-12;

  for (int d = 1; d <= max_degree; ++d) {
    Complex shell_sum = 0.0;
    shell_mag = 0.0;
    for (int i = shell.shell_begin[d]; i < shell.shell_begin[d + 1]; ++i) {
      const Vec& mu = shell.points[i];
      gamma[i] = gamma_step(rs_, rho_, data, shell, lambda, i, gamma);
      // a^{-mu} = exp(-mu(H_R) - i mu(H_I))
      const Complex apow =
          std::exp(Complex(-mu.dot(a.log_real), -mu.dot(a.log_imag)));
      const Complex term = gamma[i] * apow;
      shell_sum += term;
      shell_mag += std::abs(term);
    }
    partial += shell_sum;
    degree_done = d;
    if (adaptive) {
      if (shell_mag < tail_tol * (std::abs(partial) + 1e-300)) {
        if (++consecutive_small >= 2) {
          converged = true;
          break;
        }
      } else {
        consecutive_small = 0;
      }
    }
  }
  if (adaptive && !converged)
    throw DomainError("series did not converge within the hard cap; the point is "
                      "too close to a chamber wall");

  const Complex prefactor = torus_power(a, lambda - rho_.cast<Complex>());
  if (info) {
    info->cap_used = degree_done;
    info->last_shell = shell_mag * std::abs(prefactor);
    info->converged = converged;
  }
  return prefactor * partial;
}

bool HypergeometricEvaluator::lambda_is_singular(const CVec& lambda) const {
  for (const Vec& alpha : rs_.positive_roots) {
    const Complex la = bilinear(lambda, alpha) / alpha.squaredNorm();
    const double nearest = std::round(la.real());
    if (std::abs(la.real() - nearest) < 1e-8 && std::abs(la.imag()) < 1e-8) return true;
  }
  return false;
}

Complex HypergeometricEvaluator::phi_direct(const CVec& lambda, const TorusPoint& a,
                                            int cap) const {
  Complex sum = 0.0;
  for (const Mat& w : w_.elements) {
    const CVec wl = w * lambda;
    sum += c_(wl) * series(wl, a, cap, nullptr);
  }
  return sum;
}

Complex HypergeometricEvaluator::phi(const CVec& lambda, const TorusPoint& a,
                                     int cap) const {
  // move the real part of the logarithm into the closed positive chamber
  int best = 0;
  double best_min = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < w_.order(); ++i) {
    const Vec hr = w_.elements[i] * a.log_real;
    double mn = std::numeric_limits<double>::infinity();
    for (const Vec& alpha : rs_.simple_roots) mn = std::min(mn, alpha.dot(hr));
    if (mn > best_min) {
      best_min = mn;
      best = i;
    }
  }
  TorusPoint b = a;
  b.log_real = w_.elements[best] * a.log_real;
  b.log_imag = w_.elements[best] * a.log_imag;

  if (best_min <= 1e-12) {
    // on a chamber wall: symmetric perturbation in the space variable
    const Vec d = generic_direction(rs_.rank);
    const double eps = 1e-5 * (1.0 + b.log_real.norm());
    TorusPoint bp = b, bm = b;
    bp.log_real += eps * d;
    bm.log_real -= eps * d;
    return 0.5 * (phi(lambda, bp, cap) + phi(lambda, bm, cap));
  }

  if (!lambda_is_singular(lambda)) {
    try {
      return phi_direct(lambda, b, cap);
    } catch (const SingularParameter&) {
    } catch (const PoleEncountered&) {
    }
  }
  // symmetric perturbation in lambda; the symmetrized sum is holomorphic, so
  // the averaged value has O(eps^2) error
  const Vec d = generic_direction(rs_.rank);
  for (double scale : {1.0, 10.0, 100.0}) {
    const double eps = scale * 1e-5 * (1.0 + lambda.norm());
    try {
      const Complex plus = phi_direct(lambda + eps * d.cast<Complex>(), b, cap);
      const Complex minus = phi_direct(lambda - eps * d.cast<Complex>(), b, cap);
      return 0.5 * (plus + minus);
    } catch (const SingularParameter&) {
    } catch (const PoleEncountered&) {
    }
  }
  throw SingularParameter("hypergeometric function: perturbation retries exhausted");
}

Complex harish_chandra_series(const RootSystem& rs, const MultiplicityFunction& m,
                              const SpectralParameter& lambda, const TorusPoint& a,
                              int cap, SeriesInfo* info) {
  return HypergeometricEvaluator(rs, m).series(lambda.lambda, a, cap, info);
}

Complex hypergeometric_function(const RootSystem& rs, const MultiplicityFunction& m,
                                const SpectralParameter& lambda, const TorusPoint& a,
                                int cap) {
  return HypergeometricEvaluator(rs, m).phi(lambda.lambda, a, cap);
}

double delta_density(const RootSystem& rs, const MultiplicityFunction& m,
                     const TorusPoint& a) {
  if (a.log_imag.size() > 0 && a.log_imag.norm() > 0.0)
    throw DomainError("delta density is defined on the real torus");
  double prod = 1.0;
  for (const Vec& alpha : rs.positive_roots) {
    const double ma = m.value(alpha);
    if (ma == 0.0) continue;
    prod *= std::pow(std::abs(2.0 * std::sinh(alpha.dot(a.log_real))), ma);
  }
  return prod;
}

double plancherel_density(const RootSystem& rs, const MultiplicityFunction& m,
                          const Vec& lambda) {
  if (m.is_even()) {
    const Complex invc = inv_c_polynomial(rs, m, kI * lambda.cast<Complex>());
    return std::norm(invc);
  }
  const CFunction c(rs, m);
  const Complex val = c(kI * lambda.cast<Complex>());
  const double a2 = std::norm(val);
  if (!std::isfinite(a2) || a2 < 1e-300)
    throw DomainError("Plancherel density is singular at a zero of the c-function");
  return 1.0 / a2;
}

Complex apply_L(const RootSystem& rs, const MultiplicityFunction& m,
                const std::function<Complex(const Vec&)>& f, const Vec& h, double step) {
  for (const Vec& alpha : rs.positive_roots)
    if (std::abs(alpha.dot(h)) <= 2.0 * step * alpha.norm())
      throw DomainError("apply_L: point within step distance of a wall");

  const int r = rs.rank;
  Complex lap = 0.0;
  for (int j = 0; j < r; ++j) {
    Vec e = Vec::Zero(r);
    e[j] = 1.0;
    const Complex f0 = f(h);
    const Complex fp1 = f(h + step * e), fm1 = f(h - step * e);
    const Complex fp2 = f(h + 2.0 * step * e), fm2 = f(h - 2.0 * step * e);
    lap += (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * step * step);
  }
  Complex first = 0.0;
  for (const Vec& alpha : rs.positive_roots) {
    const double ma = m.value(alpha);
    if (ma == 0.0) continue;
    const Vec u = alpha / alpha.norm();
    const Complex fp1 = f(h + step * u), fm1 = f(h - step * u);
    const Complex fp2 = f(h + 2.0 * step * u), fm2 = f(h - 2.0 * step * u);
    const Complex deriv =
        alpha.norm() * (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * step);
    const double u2 = std::exp(-2.0 * alpha.dot(h));
    first += ma * ((1.0 + u2) / (1.0 - u2)) * deriv;
  }
  return lap + first;
}

Complex apply_L_richardson(const RootSystem& rs, const MultiplicityFunction& m,
                           const std::function<Complex(const Vec&)>& f, const Vec& h,
                           double step) {
  const Complex coarse = apply_L(rs, m, f, h, step);
  const Complex fine = apply_L(rs, m, f, h, step / 2.0);
  return (16.0 * fine - coarse) / 15.0;
}

GrowthBoundReport growth_bound_check(const RootSystem& rs, const MultiplicityFunction& m,
                                     const SpectralParameter& lambda,
                                     const std::vector<TorusPoint>& samples) {
  const HypergeometricEvaluator ev(rs, m);
  const WeylGroup& w = ev.weyl();
  const Vec rho_m = ev.rho_vector();
  GrowthBoundReport rep;
  rep.min_ratio = std::numeric_limits<double>::infinity();
  for (const TorusPoint& a : samples) {
    double min_im = std::numeric_limits<double>::infinity();
    double max_rho = -std::numeric_limits<double>::infinity();
    double max_re = -std::numeric_limits<double>::infinity();
    for (const Mat& e : w.elements) {
      const CVec wl = e * lambda.lambda;
      min_im = std::min(min_im, bilinear(wl, a.log_imag).imag());
      max_rho = std::max(max_rho, (e * rho_m).dot(a.log_imag));
      max_re = std::max(max_re, bilinear(wl, a.log_real).real());
    }
    const double bound = std::exp(-min_im + max_rho + max_re);
    const double ratio = std::abs(ev.phi(lambda.lambda, a)) / bound;
    rep.max_ratio = std::max(rep.max_ratio, ratio);
    rep.min_ratio = std::min(rep.min_ratio, ratio);
    ++rep.samples;
  }
  rep.fitted_constant = rep.max_ratio;
  return rep;
}

}  // namespace rootfn
