#ifndef ROOTFN_TYPES_HPP
#define ROOTFN_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace rootfn {

using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Normalization of da and dlambda: Lebesgue measure scaled so that the
/// Euclidean Fourier transform is unitary with constant 1 in both directions.
inline double measure_factor(int rank) { return std::pow(2.0 * kPi, -0.5 * rank); }

// Error taxonomy used across the library.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};
struct SingularParameter : std::runtime_error {
  explicit SingularParameter(const std::string& what) : std::runtime_error(what) {}
};
struct PoleEncountered : std::runtime_error {
  explicit PoleEncountered(const std::string& what) : std::runtime_error(what) {}
};
struct InsufficientDecay : std::runtime_error {
  explicit InsufficientDecay(const std::string& what) : std::runtime_error(what) {}
};
struct SchemaMismatch : std::runtime_error {
  explicit SchemaMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Complex bilinear extension of the Euclidean inner product (no conjugation).
inline Complex bilinear(const CVec& a, const CVec& b) {
  Complex s = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline Complex bilinear(const CVec& a, const Vec& b) {
  Complex s = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace rootfn

#endif
