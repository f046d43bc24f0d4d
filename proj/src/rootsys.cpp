#include "rootfn/rootsys.hpp"

#include <algorithm>
#include <cmath>

namespace rootfn {

std::string to_string(RootSystemType t) {
  switch (t) {
    case RootSystemType::A1: return "A1";
    case RootSystemType::A2: return "A2";
    case RootSystemType::B2: return "B2";
    case RootSystemType::BC1: return "BC1";
    case RootSystemType::A1xA1: return "A1xA1";
  }
  throw std::invalid_argument("unknown root system type");
}

RootSystemType root_system_type_from_string(const std::string& s) {
  if (s == "A1") return RootSystemType::A1;
  if (s == "A2") return RootSystemType::A2;
  if (s == "B2") return RootSystemType::B2;
  if (s == "BC1") return RootSystemType::BC1;
  if (s == "A1xA1") return RootSystemType::A1xA1;
  throw std::invalid_argument("unsupported root system type: " + s);
}

bool RootSystem::is_root(const Vec& v, double tol) const {
  for (const Vec& r : roots)
    if ((r - v).norm() < tol * std::max(1.0, r.norm())) return true;
  return false;
}

Mat RootSystem::reflection(const Vec& alpha) const {
  const double n2 = alpha.squaredNorm();
  return Mat::Identity(rank, rank) - (2.0 / n2) * (alpha * alpha.transpose());
}

namespace {

Vec v1(double x) {
  Vec v(1);
  v << x;
  return v;
}
Vec v2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

// Expand a positive root in the simple-root basis; coefficients must come out
// as nonnegative integers.
Eigen::VectorXi expand_in_simple(const RootSystem& rs, const Vec& beta) {
  Mat s(rs.rank, rs.rank);
  for (int j = 0; j < rs.rank; ++j) s.col(j) = rs.simple_roots[j];
  Vec c = s.colPivHouseholderQr().solve(beta);
  Eigen::VectorXi out(rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    const double r = std::round(c[j]);
    if (std::abs(c[j] - r) > 1e-8 || r < -1e-9)
      throw std::invalid_argument("positive root is not a nonnegative integer "
                                  "combination of the simple roots");
    out[j] = static_cast<int>(r);
  }
  return out;
}

void validate_closure(const RootSystem& rs) {
  for (const Vec& a : rs.roots) {
    const Mat refl = rs.reflection(a);
    for (const Vec& b : rs.roots)
      if (!rs.is_root(refl * b))
        throw std::invalid_argument("root system is not closed under its reflections");
  }
}

}  // namespace

RootSystem build_root_system(RootSystemType type, double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");
  RootSystem rs;
  rs.type = type;
  rs.scale = scale;
  const double s2 = std::sqrt(2.0);
  switch (type) {
    case RootSystemType::A1:
      rs.rank = 1;
      rs.positive_roots = {v1(s2)};
      rs.reduced = true;
      break;
    case RootSystemType::A2:
      rs.rank = 2;
      // simple roots at 120 degrees, |alpha|^2 = 2
      rs.positive_roots = {v2(s2, 0.0), v2(-s2 / 2.0, std::sqrt(6.0) / 2.0),
                           v2(s2 / 2.0, std::sqrt(6.0) / 2.0)};
      rs.reduced = true;
      break;
    case RootSystemType::B2:
      rs.rank = 2;
      // simple: long e1-e2, short e2
      rs.positive_roots = {v2(1.0, -1.0), v2(0.0, 1.0), v2(1.0, 0.0), v2(1.0, 1.0)};
      rs.reduced = true;
      break;
    case RootSystemType::BC1:
      rs.rank = 1;
      rs.positive_roots = {v1(1.0), v1(2.0)};
      rs.reduced = false;
      break;
    case RootSystemType::A1xA1:
      rs.rank = 2;
      rs.positive_roots = {v2(s2, 0.0), v2(0.0, s2)};
      rs.reduced = true;
      break;
  }
  for (Vec& r : rs.positive_roots) r *= scale;
  rs.simple_roots.assign(rs.positive_roots.begin(), rs.positive_roots.begin() + rs.rank);
  rs.roots = rs.positive_roots;
  for (const Vec& r : rs.positive_roots) rs.roots.push_back(-r);
  rs.gram = Mat::Identity(rs.rank, rs.rank);
  for (const Vec& a : rs.positive_roots) {
    if (rs.is_root(0.5 * a)) continue;  // divisible: skip
    rs.indivisible_positive.push_back(a);
  }
  for (const Vec& a : rs.positive_roots)
    rs.positive_in_simple.push_back(expand_in_simple(rs, a));
  validate_closure(rs);
  return rs;
}

WeylGroup weyl_group(const RootSystem& rs) {
  const double tol = 1e-9;
  std::vector<Mat> gens;
  for (const Vec& a : rs.simple_roots) gens.push_back(rs.reflection(a));

  WeylGroup w;
  w.elements.push_back(Mat::Identity(rs.rank, rs.rank));
  auto contains = [&](const Mat& m) {
    for (const Mat& e : w.elements)
      if ((e - m).cwiseAbs().maxCoeff() < tol) return true;
    return false;
  };
  std::size_t frontier = 0;
  const std::size_t safety_bound = 1000;
  while (frontier < w.elements.size()) {
    const Mat cur = w.elements[frontier++];
    for (const Mat& g : gens) {
      Mat next = g * cur;
      if (!contains(next)) w.elements.push_back(std::move(next));
    }
    if (w.elements.size() > safety_bound)
      throw std::runtime_error("Weyl group closure not reached within safety bound");
  }
  // canonical deterministic order: identity first, then by matrix entries
  std::sort(w.elements.begin() + 1, w.elements.end(), [](const Mat& a, const Mat& b) {
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) {
        if (std::abs(a(i, j) - b(i, j)) > 1e-12) return a(i, j) < b(i, j);
      }
    return false;
  });
  for (const Mat& e : w.elements) w.signs.push_back(std::round(e.determinant()));

  // every element must permute the roots
  for (const Mat& e : w.elements)
    for (const Vec& r : rs.roots)
      if (!rs.is_root(e * r))
        throw std::runtime_error("Weyl element does not permute the roots");
  return w;
}

namespace {
// Orbit index per positive root under the W-action (with m_{-a} = m_a).
std::pair<std::vector<int>, int> positive_orbits(const RootSystem& rs, const WeylGroup& w) {
  const int np = static_cast<int>(rs.positive_roots.size());
  std::vector<int> orbit(np, -1);
  int norb = 0;
  auto find_positive = [&](const Vec& v) {
    for (int i = 0; i < np; ++i) {
      if ((rs.positive_roots[i] - v).norm() < 1e-9) return i;
      if ((rs.positive_roots[i] + v).norm() < 1e-9) return i;
    }
    return -1;
  };
  for (int i = 0; i < np; ++i) {
    if (orbit[i] >= 0) continue;
    const int cur = norb++;
    for (const Mat& e : w.elements) {
      const int j = find_positive(e * rs.positive_roots[i]);
      if (j >= 0 && orbit[j] < 0) orbit[j] = cur;
    }
    orbit[i] = cur;
  }
  return {orbit, norb};
}
}  // namespace

MultiplicityFunction::MultiplicityFunction(const RootSystem& rs, const WeylGroup& w,
                                           std::vector<double> orbit_values) {
  positive_roots_ = rs.positive_roots;
  reduced_ = rs.reduced;
  auto [orbit, norb] = positive_orbits(rs, w);
  orbit_of_positive_ = std::move(orbit);
  if (static_cast<int>(orbit_values.size()) != norb)
    throw std::invalid_argument("expected " + std::to_string(norb) +
                                " orbit multiplicity values, got " +
                                std::to_string(orbit_values.size()));
  for (double v : orbit_values)
    if (v < 0.0) throw std::invalid_argument("multiplicities must be nonnegative");
  orbit_values_ = std::move(orbit_values);
}

MultiplicityFunction MultiplicityFunction::constant(const RootSystem& rs, double m) {
  const WeylGroup w = weyl_group(rs);
  const auto [orbit, norb] = positive_orbits(rs, w);
  (void)orbit;
  return MultiplicityFunction(rs, w, std::vector<double>(norb, m));
}

MultiplicityFunction MultiplicityFunction::from_orbit_values(const RootSystem& rs,
                                                             std::vector<double> values) {
  const WeylGroup w = weyl_group(rs);
  return MultiplicityFunction(rs, w, std::move(values));
}

double MultiplicityFunction::value(const Vec& root) const {
  for (std::size_t i = 0; i < positive_roots_.size(); ++i) {
    if ((positive_roots_[i] - root).norm() < 1e-9 ||
        (positive_roots_[i] + root).norm() < 1e-9)
      return orbit_values_[orbit_of_positive_[i]];
  }
  throw std::invalid_argument("multiplicity requested for a vector that is not a root");
}

bool MultiplicityFunction::is_zero() const {
  for (double v : orbit_values_)
    if (v != 0.0) return false;
  return true;
}

bool MultiplicityFunction::is_even() const {
  if (!reduced_) return false;
  for (double v : orbit_values_) {
    const double half = v / 2.0;
    if (std::abs(half - std::round(half)) > 1e-12) return false;
  }
  return true;
}

bool MultiplicityFunction::is_geometric_complex() const {
  if (!reduced_) return false;
  for (double v : orbit_values_)
    if (std::abs(v - 2.0) > 1e-12) return false;
  return true;
}

Vec rho(const RootSystem& rs, const MultiplicityFunction& m) {
  Vec r = Vec::Zero(rs.rank);
  for (const Vec& a : rs.positive_roots) r += m.value(a) * a;
  return 0.5 * r;
}

namespace {
long long pack_exponents(const Eigen::VectorXi& e) {
  long long key = 0;
  for (Eigen::Index j = 0; j < e.size(); ++j) key = key * 100000 + e[j];
  return key;
}
}  // namespace

int LatticeShell::index_of(const Eigen::VectorXi& e) const {
  for (Eigen::Index j = 0; j < e.size(); ++j)
    if (e[j] < 0) return -1;
  const auto it = index_.find(pack_exponents(e));
  return it == index_.end() ? -1 : it->second;
}

LatticeShell lattice_shell(const RootSystem& rs, int degree_cap) {
  if (degree_cap < 0) throw std::invalid_argument("degree_cap must be >= 0");
  LatticeShell sh;
  sh.degree_cap = degree_cap;
  const int r = rs.rank;
  for (int d = 0; d <= degree_cap; ++d) {
    sh.shell_begin.push_back(static_cast<int>(sh.exponents.size()));
    // lexicographic enumeration of exponents with sum d
    Eigen::VectorXi e = Eigen::VectorXi::Zero(r);
    if (r == 1) {
      e[0] = d;
      sh.exponents.push_back(e);
    } else {
      for (int n1 = 0; n1 <= d; ++n1) {
        e[0] = n1;
        e[1] = d - n1;
        sh.exponents.push_back(e);
      }
    }
    while (static_cast<int>(sh.degrees.size()) < static_cast<int>(sh.exponents.size()))
      sh.degrees.push_back(d);
  }
  sh.shell_begin.push_back(static_cast<int>(sh.exponents.size()));
  for (std::size_t i = 0; i < sh.exponents.size(); ++i) {
    Vec p = Vec::Zero(r);
    for (int j = 0; j < r; ++j) p += static_cast<double>(sh.exponents[i][j]) * rs.simple_roots[j];
    sh.points.push_back(std::move(p));
    sh.index_[pack_exponents(sh.exponents[i])] = static_cast<int>(i);
  }
  return sh;
}

TubeDomain tube_domain(const RootSystem& rs, DomainKind kind) {
  return TubeDomain{kind, rs.positive_roots};
}

bool in_domain(const TubeDomain& d, const Vec& h) {
  for (const Vec& a : d.test_roots) {
    const double ah = a.dot(h);
    switch (d.kind) {
      case DomainKind::Omega:
        if (!(std::abs(ah) < kPi / 2.0)) return false;
        break;
      case DomainKind::TwoOmega:
        if (!(std::abs(ah) < kPi)) return false;
        break;
      case DomainKind::PositiveChamber:
        if (!(ah > 0.0)) return false;
        break;
    }
  }
  return true;
}

std::vector<Vec> weyl_orbit_points(const WeylGroup& w, const std::vector<Vec>& base_points,
                                   double tol) {
  std::vector<Vec> out;
  auto seen = [&](const Vec& v) {
    for (const Vec& u : out)
      if ((u - v).norm() < tol) return true;
    return false;
  };
  for (const Vec& p : base_points)
    for (const Mat& e : w.elements) {
      Vec q = e * p;
      if (!seen(q)) out.push_back(std::move(q));
    }
  return out;
}

}  // namespace rootfn
