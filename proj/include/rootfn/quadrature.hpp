#ifndef ROOTFN_QUADRATURE_HPP
#define ROOTFN_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "rootfn/types.hpp"

namespace rootfn {

enum class Scheme { Trapezoid, GaussLegendre };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);

/// Nodes and weights for one axis of a tensor-product rule on [-R, R].
struct Axis {
  Vec nodes;
  Vec weights;
};

/// Gauss-Legendre nodes/weights on [-1, 1], symmetrized exactly about 0.
Axis gauss_legendre(int n);

/// Tensor-product quadrature over the box [-radius, radius]^rank. Weights are
/// plain Lebesgue weights, so they sum to the box volume.
struct QuadratureGrid {
  int rank = 0;
  int n_per_axis = 0;
  double radius = 0.0;
  Scheme scheme = Scheme::GaussLegendre;
  std::vector<Axis> axes;
  Mat nodes;    // N x rank, row-major over the tensor index
  Vec weights;  // N

  Eigen::Index size() const { return nodes.rows(); }
  Vec node(Eigen::Index i) const { return nodes.row(i).transpose(); }
  bool tensor_compatible(const QuadratureGrid& other) const {
    return rank == other.rank;
  }
};

QuadratureGrid tensor_grid(int rank, int n_per_axis, double radius,
                           Scheme scheme = Scheme::GaussLegendre);

enum class Symmetry { None, WInvariant, TauWInvariant };

std::string to_string(Symmetry s);
Symmetry symmetry_from_string(const std::string& s);

/// Sampled complex function with the quadrature data it lives on.
struct GridFunction {
  QuadratureGrid grid;
  CVec values;
  Symmetry symmetry = Symmetry::None;
};

GridFunction sample(const QuadratureGrid& grid,
                    const std::function<Complex(const Vec&)>& f,
                    Symmetry symmetry = Symmetry::None);

/// Integral of values against the regularly normalized measure, with an
/// optional extra density. Deterministic summation order.
Complex integrate(const GridFunction& f,
                  const std::function<double(const Vec&)>& density = nullptr);

/// L^2 norm squared against the regularly normalized measure times `density`.
double norm_sq(const GridFunction& f,
               const std::function<double(const Vec&)>& density = nullptr);

/// Largest |value| over nodes of the outermost tensor shell, relative to the
/// overall max; used for decay preconditions.
double boundary_mass_ratio(const GridFunction& f);

void require_decay(const GridFunction& f, double threshold = 1e-10);

}  // namespace rootfn

#endif
