#include "rootfn/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace rootfn {

int RunConfig::effective_grid_n(int rank) const {
  return grid_n > 0 ? grid_n : (rank == 1 ? 128 : 64);
}
double RunConfig::effective_grid_radius(int rank) const {
  return grid_radius > 0.0 ? grid_radius : (rank == 1 ? 10.0 : 9.0);
}
int RunConfig::effective_spectral_n(int rank) const {
  return spectral_n > 0 ? spectral_n : effective_grid_n(rank);
}
double RunConfig::effective_spectral_radius(int rank) const {
  return spectral_radius > 0.0 ? spectral_radius : effective_grid_radius(rank);
}

RunConfig run_config_from_json(const Json& j) {
  RunConfig c;
  if (j.contains("root_system")) {
    const auto& r = j.at("root_system");
    c.type = root_system_type_from_string(r.value("type", "A1"));
    c.scale = r.value("scale", 1.0);
  }
  if (j.contains("multiplicity"))
    c.multiplicity = j.at("multiplicity").get<std::vector<double>>();
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    c.grid_n = g.value("n", 0);
    c.grid_radius = g.value("radius", 0.0);
    c.scheme = scheme_from_string(g.value("scheme", "gauss_legendre"));
  }
  if (j.contains("spectral_grid")) {
    const auto& g = j.at("spectral_grid");
    c.spectral_n = g.value("n", 0);
    c.spectral_radius = g.value("radius", 0.0);
  }
  if (j.contains("times")) c.times = j.at("times").get<std::vector<double>>();
  if (j.contains("bump")) {
    c.bump_kind = j.at("bump").value("kind", "gaussian");
    c.bump_width = j.at("bump").value("width", 1.0);
  }
  c.seed = j.value("seed", c.seed);
  c.out_dir = j.value("out", c.out_dir);
  if (j.contains("tolerance_overrides"))
    for (const auto& [k, v] : j.at("tolerance_overrides").items()) {
      const double tol = v.get<double>();
      if (!(tol > 0.0)) throw SchemaMismatch("tolerances must be positive");
      c.tolerance_overrides[k] = tol;
    }
  for (double t : c.times)
    if (!(t > 0.0)) throw SchemaMismatch("times must be positive");
  if (j.contains("lambda")) {
    for (const auto& row : j.at("lambda")) {
      CVec l(row.size());
      Eigen::Index i = 0;
      for (const auto& comp : row) {
        l[i++] = Complex(comp.at(0).get<double>(), comp.at(1).get<double>());
      }
      c.lambda_list.push_back(std::move(l));
    }
  }
  return c;
}

Json run_config_to_json(const RunConfig& c) {
  Json j;
  j["root_system"] = {{"type", to_string(c.type)}, {"scale", c.scale}};
  j["multiplicity"] = c.multiplicity;
  j["grid"] = {{"n", c.grid_n}, {"radius", c.grid_radius}, {"scheme", to_string(c.scheme)}};
  j["spectral_grid"] = {{"n", c.spectral_n}, {"radius", c.spectral_radius}};
  j["times"] = c.times;
  j["bump"] = {{"kind", c.bump_kind}, {"width", c.bump_width}};
  j["seed"] = c.seed;
  j["out"] = c.out_dir;
  if (!c.tolerance_overrides.empty()) j["tolerance_overrides"] = c.tolerance_overrides;
  if (!c.lambda_list.empty()) {
    Json rows = Json::array();
    for (const CVec& l : c.lambda_list) {
      Json row = Json::array();
      for (Eigen::Index i = 0; i < l.size(); ++i)
        row.push_back({l[i].real(), l[i].imag()});
      rows.push_back(row);
    }
    j["lambda"] = rows;
  }
  return j;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaMismatch("cannot open config file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw SchemaMismatch(std::string("config parse error: ") + e.what());
  }
  return run_config_from_json(j);
}

Json root_system_to_json(const RootSystem& rs) {
  Json j;
  j["type"] = to_string(rs.type);
  j["rank"] = rs.rank;
  j["scale"] = rs.scale;
  auto vecs = [](const std::vector<Vec>& vs) {
    Json arr = Json::array();
    for (const Vec& v : vs) {
      Json row = Json::array();
      for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(v[i]);
      arr.push_back(row);
    }
    return arr;
  };
  j["roots"] = vecs(rs.roots);
  j["positive_roots"] = vecs(rs.positive_roots);
  j["simple_roots"] = vecs(rs.simple_roots);
  return j;
}

RootSystem root_system_from_json(const Json& j) {
  const RootSystem rs = build_root_system(
      root_system_type_from_string(j.at("type").get<std::string>()),
      j.value("scale", 1.0));
  if (j.contains("rank") && j.at("rank").get<int>() != rs.rank)
    throw SchemaMismatch("root system descriptor rank mismatch");
  if (j.contains("roots") &&
      j.at("roots").size() != rs.roots.size())
    throw SchemaMismatch("root system descriptor root count mismatch");
  return rs;
}

Json operator_to_json(const ExponentialPolynomialOperator& op) {
  Json j;
  j["kappa"] = op.kappa;
  j["delta_half_prefactor"] = op.delta_half_prefactor;
  Json factors = Json::array();
  for (const auto& f : op.factors) {
    Json row;
    Json h = Json::array();
    for (Eigen::Index i = 0; i < f.capital_h.size(); ++i) h.push_back(f.capital_h[i]);
    row["capital_h"] = h;
    row["shift"] = f.shift;
    factors.push_back(row);
  }
  j["factors"] = factors;
  return j;
}

Json torus_point_to_json(const TorusPoint& a) {
  Json j;
  Json hr = Json::array(), hi = Json::array();
  for (Eigen::Index i = 0; i < a.log_real.size(); ++i) hr.push_back(a.log_real[i]);
  for (Eigen::Index i = 0; i < a.log_imag.size(); ++i) hi.push_back(a.log_imag[i]);
  j["log_real"] = hr;
  j["log_imag"] = hi;
  switch (a.tag) {
    case TorusTag::A: j["tag"] = "A"; break;
    case TorusTag::A_Omega: j["tag"] = "A_Omega"; break;
    case TorusTag::A_plus_2Omega: j["tag"] = "A_plus_2Omega"; break;
  }
  return j;
}

TorusPoint torus_point_from_json(const Json& j) {
  const auto hr = j.at("log_real").get<std::vector<double>>();
  const auto hi = j.at("log_imag").get<std::vector<double>>();
  if (hr.size() != hi.size()) throw SchemaMismatch("torus point rank mismatch");
  TorusPoint a;
  a.log_real = Eigen::Map<const Vec>(hr.data(), hr.size());
  a.log_imag = Eigen::Map<const Vec>(hi.data(), hi.size());
  const std::string tag = j.value("tag", "A");
  if (tag == "A") a.tag = TorusTag::A;
  else if (tag == "A_Omega") a.tag = TorusTag::A_Omega;
  else if (tag == "A_plus_2Omega") a.tag = TorusTag::A_plus_2Omega;
  else throw SchemaMismatch("unknown torus tag: " + tag);
  return a;
}

Json evaluation_record_to_json(const CVec& lambda, const TorusPoint& a, Complex value) {
  Json j;
  Json lj = Json::array();
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    lj.push_back({lambda[i].real(), lambda[i].imag()});
  j["lambda"] = lj;
  j["a"] = torus_point_to_json(a);
  j["value"] = {value.real(), value.imag()};
  return j;
}

namespace {
std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
}  // namespace

void save_grid_function(const GridFunction& f, const std::string& base_path) {
  namespace fs = std::filesystem;
  const fs::path base(base_path);
  if (base.has_parent_path()) fs::create_directories(base.parent_path());

  Json meta;
  meta["rank"] = f.grid.rank;
  meta["n_per_axis"] = f.grid.n_per_axis;
  meta["radius"] = f.grid.radius;
  meta["scheme"] = to_string(f.grid.scheme);
  meta["symmetry"] = to_string(f.symmetry);
  std::ofstream mj(base_path + ".json");
  mj << meta.dump(2) << "\n";

  std::ofstream csv(base_path + ".csv");
  for (int d = 0; d < f.grid.rank; ++d) csv << "x" << (d + 1) << ",";
  csv << "re,im\n";
  for (Eigen::Index i = 0; i < f.grid.size(); ++i) {
    for (int d = 0; d < f.grid.rank; ++d) csv << format_double(f.grid.nodes(i, d)) << ",";
    csv << format_double(f.values[i].real()) << "," << format_double(f.values[i].imag())
        << "\n";
  }
}

GridFunction load_grid_function(const std::string& base_path) {
  std::ifstream mj(base_path + ".json");
  if (!mj) throw SchemaMismatch("missing grid function header: " + base_path + ".json");
  Json meta;
  try {
    mj >> meta;
  } catch (const std::exception& e) {
    throw SchemaMismatch(std::string("grid header parse error: ") + e.what());
  }
  GridFunction f;
  f.grid = tensor_grid(meta.at("rank").get<int>(), meta.at("n_per_axis").get<int>(),
                       meta.at("radius").get<double>(),
                       scheme_from_string(meta.at("scheme").get<std::string>()));
  f.symmetry = symmetry_from_string(meta.value("symmetry", "none"));
  f.values.resize(f.grid.size());

  std::ifstream csv(base_path + ".csv");
  if (!csv) throw SchemaMismatch("missing grid function data: " + base_path + ".csv");
  std::string line;
  std::getline(csv, line);  // header
  Eigen::Index row = 0;
  const int rank = f.grid.rank;
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    if (row >= f.grid.size()) throw SchemaMismatch("grid data has extra rows");
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> cols;
    while (std::getline(ss, cell, ',')) cols.push_back(std::stod(cell));
    if (static_cast<int>(cols.size()) != rank + 2)
      throw SchemaMismatch("grid data column count mismatch");
    for (int d = 0; d < rank; ++d)
      if (std::abs(cols[d] - f.grid.nodes(row, d)) > 1e-9 * (1.0 + f.grid.radius))
        throw SchemaMismatch("grid data node coordinates do not match the header");
    f.values[row] = Complex(cols[rank], cols[rank + 1]);
    ++row;
  }
  if (row != f.grid.size()) throw SchemaMismatch("grid data has missing rows");
  return f;
}

void write_text_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(path);
  out << content;
}

}  // namespace rootfn
