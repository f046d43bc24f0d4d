#include "rootfn/quadrature.hpp"

#include <cmath>

namespace rootfn {

std::string to_string(Scheme s) {
  return s == Scheme::Trapezoid ? "trapezoid" : "gauss_legendre";
}

Scheme scheme_from_string(const std::string& s) {
  if (s == "trapezoid") return Scheme::Trapezoid;
  if (s == "gauss_legendre") return Scheme::GaussLegendre;
  throw std::invalid_argument("unknown quadrature scheme: " + s);
}

std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::None: return "none";
    case Symmetry::WInvariant: return "W_invariant";
    case Symmetry::TauWInvariant: return "tau_W_invariant";
  }
  return "none";
}

Symmetry symmetry_from_string(const std::string& s) {
  if (s == "none") return Symmetry::None;
  if (s == "W_invariant") return Symmetry::WInvariant;
  if (s == "tau_W_invariant") return Symmetry::TauWInvariant;
  throw std::invalid_argument("unknown symmetry tag: " + s);
}

Axis gauss_legendre(int n) {
  Axis ax;
  ax.nodes = Vec::Zero(n);
  ax.weights = Vec::Zero(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration from the Chebyshev-like initial guess
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    ax.nodes[i] = -x;
    ax.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    ax.weights[i] = w;
    ax.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) ax.nodes[n / 2] = 0.0;
  return ax;
}

namespace {
Axis trapezoid_axis(int n, double radius) {
  Axis ax;
  ax.nodes = Vec::LinSpaced(n, -radius, radius);
  const double h = 2.0 * radius / (n - 1);
  ax.weights = Vec::Constant(n, h);
  ax.weights[0] = 0.5 * h;
  ax.weights[n - 1] = 0.5 * h;
  return ax;
}
}  // namespace

QuadratureGrid tensor_grid(int rank, int n_per_axis, double radius, Scheme scheme) {
  if (rank < 1 || rank > 2) throw std::invalid_argument("rank must be 1 or 2");
  if (n_per_axis < 16) throw std::invalid_argument("need at least 16 nodes per axis");
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");

  QuadratureGrid g;
  g.rank = rank;
  g.n_per_axis = n_per_axis;
  g.radius = radius;
  g.scheme = scheme;
  Axis ax;
  if (scheme == Scheme::GaussLegendre) {
    ax = gauss_legendre(n_per_axis);
    ax.nodes *= radius;
    ax.weights *= radius;
  } else {
    ax = trapezoid_axis(n_per_axis, radius);
  }
  for (int d = 0; d < rank; ++d) g.axes.push_back(ax);

  const Eigen::Index total = rank == 1
                                 ? n_per_axis
                                 : static_cast<Eigen::Index>(n_per_axis) * n_per_axis;
  g.nodes.resize(total, rank);
  g.weights.resize(total);
  if (rank == 1) {
    g.nodes.col(0) = ax.nodes;
    g.weights = ax.weights;
  } else {
    Eigen::Index idx = 0;
    for (int i = 0; i < n_per_axis; ++i)
      for (int j = 0; j < n_per_axis; ++j, ++idx) {
        g.nodes(idx, 0) = ax.nodes[i];
        g.nodes(idx, 1) = ax.nodes[j];
        g.weights[idx] = ax.weights[i] * ax.weights[j];
      }
  }
  return g;
}

GridFunction sample(const QuadratureGrid& grid,
                    const std::function<Complex(const Vec&)>& f, Symmetry symmetry) {
  GridFunction gf;
  gf.grid = grid;
  gf.symmetry = symmetry;
  gf.values.resize(grid.size());
  for (Eigen::Index i = 0; i < grid.size(); ++i) gf.values[i] = f(grid.node(i));
  return gf;
}

Complex integrate(const GridFunction& f, const std::function<double(const Vec&)>& density) {
  const double mf = measure_factor(f.grid.rank);
  Complex acc = 0.0;
  for (Eigen::Index i = 0; i < f.grid.size(); ++i) {
    const double d = density ? density(f.grid.node(i)) : 1.0;
    acc += f.grid.weights[i] * d * f.values[i];
  }
  return mf * acc;
}

double norm_sq(const GridFunction& f, const std::function<double(const Vec&)>& density) {
  const double mf = measure_factor(f.grid.rank);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < f.grid.size(); ++i) {
    const double d = density ? density(f.grid.node(i)) : 1.0;
    acc += f.grid.weights[i] * d * std::norm(f.values[i]);
  }
  return mf * acc;
}

double boundary_mass_ratio(const GridFunction& f) {
  const int n = f.grid.n_per_axis;
  double peak = 0.0, edge = 0.0;
  for (Eigen::Index i = 0; i < f.grid.size(); ++i)
    peak = std::max(peak, std::abs(f.values[i]));
  if (peak == 0.0) return 0.0;
  auto is_edge_index = [&](Eigen::Index flat) {
    if (f.grid.rank == 1) return flat == 0 || flat == n - 1;
    const Eigen::Index i = flat / n, j = flat % n;
    return i == 0 || i == n - 1 || j == 0 || j == n - 1;
  };
  for (Eigen::Index i = 0; i < f.grid.size(); ++i)
    if (is_edge_index(i)) edge = std::max(edge, std::abs(f.values[i]));
  return edge / peak;
}

void require_decay(const GridFunction& f, double threshold) {
  if (boundary_mass_ratio(f) >= threshold)
    throw InsufficientDecay("function does not decay below the threshold at the "
                            "quadrature box boundary");
}

}  // namespace rootfn
