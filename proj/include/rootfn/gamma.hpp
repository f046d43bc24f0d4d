#ifndef ROOTFN_GAMMA_HPP
#define ROOTFN_GAMMA_HPP

#include "rootfn/types.hpp"

namespace rootfn {

/// Gamma function on the complex plane (Lanczos approximation, g = 7 with 9
/// coefficients, reflection formula for Re z < 1/2). Relative accuracy is
/// about 1e-13 away from the poles.
Complex cgamma(Complex z);

/// True if z lies within tol of a pole of the Gamma function.
bool near_gamma_pole(Complex z, double tol = 1e-9);

}  // namespace rootfn

#endif
