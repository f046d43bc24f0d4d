#ifndef ROOTFN_IO_HPP
#define ROOTFN_IO_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootfn/even_case.hpp"
#include "rootfn/quadrature.hpp"
#include "rootfn/rootsys.hpp"

namespace rootfn {

using Json = nlohmann::ordered_json;

/// Everything a CLI run needs; grid sizes of 0 select the rank defaults
/// (128 nodes per axis in rank 1, 64 in rank 2).
struct RunConfig {
  RootSystemType type = RootSystemType::A1;
  double scale = 1.0;
  std::vector<double> multiplicity = {2.0};  // per W-orbit
  int grid_n = 0;
  double grid_radius = 0.0;
  Scheme scheme = Scheme::GaussLegendre;
  int spectral_n = 0;
  double spectral_radius = 0.0;
  std::vector<double> times = {0.1, 0.5, 1.0};
  std::string bump_kind = "gaussian";
  double bump_width = 1.0;
  std::uint64_t seed = 20260808ULL;
  std::string out_dir = "out";
  std::map<std::string, double> tolerance_overrides;
  std::vector<CVec> lambda_list;  // explicit spectral parameters for eval

  int effective_grid_n(int rank) const;
  double effective_grid_radius(int rank) const;
  int effective_spectral_n(int rank) const;
  double effective_spectral_radius(int rank) const;
};

RunConfig run_config_from_json(const Json& j);
Json run_config_to_json(const RunConfig& c);
RunConfig load_run_config(const std::string& path);

Json root_system_to_json(const RootSystem& rs);
RootSystem root_system_from_json(const Json& j);

Json operator_to_json(const ExponentialPolynomialOperator& op);

Json torus_point_to_json(const TorusPoint& a);
TorusPoint torus_point_from_json(const Json& j);

/// One evaluation record: lambda as complex coordinate pairs, the torus point
/// by its logarithm, and the value as (re, im).
Json evaluation_record_to_json(const CVec& lambda, const TorusPoint& a, Complex value);

/// Grid functions are stored as a CSV of (coordinates..., re, im) next to a
/// JSON header carrying the grid metadata and symmetry tag.
void save_grid_function(const GridFunction& f, const std::string& base_path);
GridFunction load_grid_function(const std::string& base_path);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace rootfn

#endif
