#ifndef ROOTFN_ROOTSYS_HPP
#define ROOTFN_ROOTSYS_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "rootfn/types.hpp"

namespace rootfn {

enum class RootSystemType { A1, A2, B2, BC1, A1xA1 };

std::string to_string(RootSystemType t);
RootSystemType root_system_type_from_string(const std::string& s);

/// A crystallographic root system of rank <= 2 realized in an orthonormal
/// coordinate frame for the ambient space, so that the Gram matrix of the
/// frame is the identity and inner products are plain dot products.
struct RootSystem {
  RootSystemType type{};
  int rank = 0;
  double scale = 1.0;
  std::vector<Vec> roots;                 // all of Delta
  std::vector<Vec> positive_roots;        // Delta^+
  std::vector<Vec> simple_roots;          // Pi, the first `rank` positives
  std::vector<Vec> indivisible_positive;  // alpha in Delta^+ with alpha/2 not a root
  Mat gram;                               // identity in the orthonormal frame
  bool reduced = true;
  // expansion of each positive root in the simple-root basis (nonnegative ints)
  std::vector<Eigen::VectorXi> positive_in_simple;

  bool is_root(const Vec& v, double tol = 1e-9) const;
  /// Reflection in the hyperplane orthogonal to alpha, as a matrix on the frame.
  Mat reflection(const Vec& alpha) const;
};

/// Build one of the supported systems; `scale` multiplies every root vector.
RootSystem build_root_system(RootSystemType type, double scale = 1.0);

struct WeylGroup {
  std::vector<Mat> elements;  // elements[0] is the identity
  std::vector<double> signs;  // det(w), exactly +-1
  int order() const { return static_cast<int>(elements.size()); }
};

/// Enumerate the full group generated by the root reflections. Throws if
/// closure is not reached within a safety bound (malformed input).
WeylGroup weyl_group(const RootSystem& rs);

/// W-invariant assignment of a nonnegative multiplicity to every root,
/// stored per Weyl orbit.
class MultiplicityFunction {
 public:
  MultiplicityFunction(const RootSystem& rs, const WeylGroup& w,
                       std::vector<double> orbit_values);
  static MultiplicityFunction constant(const RootSystem& rs, double m);
  /// Orbit values listed in order of first appearance along positive_roots.
  static MultiplicityFunction from_orbit_values(const RootSystem& rs,
                                                std::vector<double> values);

  double value(const Vec& root) const;  // m_alpha; throws for non-roots
  int orbit_count() const { return static_cast<int>(orbit_values_.size()); }
  const std::vector<double>& orbit_values() const { return orbit_values_; }
  bool is_zero() const;
  bool is_even() const;               // all m in 2Z>=0 and the system reduced
  bool is_geometric_complex() const;  // all m == 2 and the system reduced

 private:
  std::vector<Vec> positive_roots_;
  std::vector<int> orbit_of_positive_;
  std::vector<double> orbit_values_;
  bool reduced_ = true;
};

/// rho(m) = (1/2) sum over positive roots of m_alpha * alpha.
Vec rho(const RootSystem& rs, const MultiplicityFunction& m);

/// The cone of nonnegative integer combinations of the simple roots,
/// enumerated completely up to total degree `degree_cap` in graded order
/// (degree first, then lexicographic in the exponents).
struct LatticeShell {
  int degree_cap = 0;
  std::vector<Eigen::VectorXi> exponents;
  std::vector<Vec> points;  // sum n_j alpha_j
  std::vector<int> degrees;
  std::vector<int> shell_begin;  // index of the first entry of each degree

  int index_of(const Eigen::VectorXi& e) const;  // -1 if absent

 private:
  friend LatticeShell lattice_shell(const RootSystem&, int);
  std::unordered_map<long long, int> index_;
};

LatticeShell lattice_shell(const RootSystem& rs, int degree_cap);

enum class DomainKind { Omega, TwoOmega, PositiveChamber };

struct TubeDomain {
  DomainKind kind{};
  std::vector<Vec> test_roots;  // positive roots of the underlying system
};

TubeDomain tube_domain(const RootSystem& rs, DomainKind kind);
/// Strict-inequality membership test.
bool in_domain(const TubeDomain& d, const Vec& h);

/// Union of the W-orbits of `base_points`, deduplicated; node sets built this
/// way are exactly closed under the Weyl action.
std::vector<Vec> weyl_orbit_points(const WeylGroup& w, const std::vector<Vec>& base_points,
                                   double tol = 1e-10);

}  // namespace rootfn

#endif
