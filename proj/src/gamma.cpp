#include "rootfn/gamma.hpp"

#include <cmath>

namespace rootfn {

namespace {
const double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
}

Complex cgamma(Complex z) {
  if (z.real() < 0.5) {
    // reflection formula; sin(pi z) is finite at desk scale (|Im z| << 700/pi)
    return kPi / (std::sin(kPi * z) * cgamma(1.0 - z));
  }
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

bool near_gamma_pole(Complex z, double tol) {
  if (z.real() > 0.5) return false;
  const double n = std::round(z.real());
  return n <= 0.0 && std::abs(z.real() - n) < tol && std::abs(z.imag()) < tol;
}

}  // namespace rootfn
