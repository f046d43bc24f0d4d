// Command-line front end: evaluate the special functions, run transforms and
// heat flows, execute the verification suites, and emit CSV/JSON artifacts.
//
// Exit codes: 0 success / all checks within tolerance, 1 verification or
// runtime failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "rootfn/even_case.hpp"
#include "rootfn/heat.hpp"
#include "rootfn/io.hpp"
#include "rootfn/transform.hpp"
#include "rootfn/verify.hpp"

namespace fs = std::filesystem;
using namespace rootfn;

namespace {

struct CommonOptions {
  std::string config_path;
  std::string out_dir;
  int grid_n = 0;
  double grid_radius = 0.0;
  std::string scheme;
  double t = 0.0;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--config", opt.config_path, "JSON run configuration");
  cmd->add_option("--out", opt.out_dir, "output directory");
  cmd->add_option("--grid-n", opt.grid_n, "nodes per grid axis");
  cmd->add_option("--grid-radius", opt.grid_radius, "half-width of the grid box");
  cmd->add_option("--scheme", opt.scheme, "quadrature scheme (gauss_legendre|trapezoid)");
  cmd->add_option("--t", opt.t, "heat time");
  cmd->add_option("--tolerance", opt.tolerance, "tolerance override");
  cmd->add_option("--seed", opt.seed, "random seed for test parameters");
}

RunConfig resolve_config(const CommonOptions& opt) {
  RunConfig cfg;
  if (!opt.config_path.empty()) cfg = load_run_config(opt.config_path);
  if (!opt.out_dir.empty()) cfg.out_dir = opt.out_dir;
  if (opt.grid_n > 0) cfg.grid_n = opt.grid_n;
  if (opt.grid_radius > 0.0) cfg.grid_radius = opt.grid_radius;
  if (!opt.scheme.empty()) cfg.scheme = scheme_from_string(opt.scheme);
  if (opt.t > 0.0) cfg.times = {opt.t};
  if (opt.seed != 0) cfg.seed = opt.seed;
  return cfg;
}

struct Session {
  RunConfig cfg;
  RootSystem rs;
  MultiplicityFunction m;
  TransformContext ctx;

  explicit Session(RunConfig config)
      : cfg(std::move(config)),
        rs(build_root_system(cfg.type, cfg.scale)),
        m(MultiplicityFunction::from_orbit_values(rs, cfg.multiplicity)),
        ctx(rs, m) {}

  QuadratureGrid a_grid() const {
    return tensor_grid(rs.rank, cfg.effective_grid_n(rs.rank),
                       cfg.effective_grid_radius(rs.rank), cfg.scheme);
  }
  QuadratureGrid lambda_grid() const {
    return tensor_grid(rs.rank, cfg.effective_spectral_n(rs.rank),
                       cfg.effective_spectral_radius(rs.rank), cfg.scheme);
  }
  GridFunction builtin_bump(const QuadratureGrid& g) const {
    const double w = cfg.bump_width;
    if (cfg.bump_kind == "gaussian")
      return sample(
          g,
          [w](const Vec& h) {
            return Complex(std::exp(-h.squaredNorm() / (2.0 * w * w)), 0.0);
          },
          Symmetry::WInvariant);
    if (cfg.bump_kind == "compact")
      return sample(
          g,
          [w](const Vec& h) {
            const double u = h.norm() / (3.0 * w);
            return u < 1.0 ? Complex(std::exp(-1.0 / (1.0 - u * u)), 0.0)
                           : Complex(0.0, 0.0);
          },
          Symmetry::WInvariant);
    throw std::invalid_argument("unknown bump kind: " + cfg.bump_kind);
  }
  std::vector<CVec> lambda_list() const {
    if (!cfg.lambda_list.empty()) return cfg.lambda_list;
    // default spectral parameters: rho and a generic complex offset of it
    const Vec r = rho(rs, m);
    CVec base = r.cast<Complex>();
    CVec offset = base;
    for (Eigen::Index i = 0; i < offset.size(); ++i)
      offset[i] += Complex(0.31 + 0.17 * static_cast<double>(i), 0.23);
    return {base, offset};
  }
};

void write_json(const std::string& path, const Json& j) {
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

std::string csv_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// --- eval ------------------------------------------------------------------------

int cmd_eval(const CommonOptions& opt, const std::string& target) {
  const Session s(resolve_config(opt));
  const fs::path out(s.cfg.out_dir);
  fs::create_directories(out);
  Json meta;
  meta["target"] = target;
  meta["root_system"] = root_system_to_json(s.rs);
  meta["multiplicity"] = s.cfg.multiplicity;
  meta["seed"] = s.cfg.seed;

  const std::string csv_path = (out / ("eval_" + target + ".csv")).string();
  std::ofstream csv(csv_path);

  if (target == "phi") {
    const QuadratureGrid g = s.a_grid();
    const double margin = 0.1;
    int skipped = 0;
    for (int d = 0; d < s.rs.rank; ++d) csv << "x" << (d + 1) << ",";
    csv << "lambda_index,re,im\n";
    const auto lambdas = s.lambda_list();
    for (std::size_t li = 0; li < lambdas.size(); ++li) {
      for (Eigen::Index i = 0; i < g.size(); ++i) {
        const Vec h = g.node(i);
        double wall = std::numeric_limits<double>::infinity();
        for (const Vec& a : s.rs.positive_roots)
          wall = std::min(wall, std::abs(a.dot(h)) / a.norm());
        if (wall < margin &&
            s.ctx.phi_mode() == TransformContext::PhiMode::Series) {
          ++skipped;  // the series cannot reach near-wall nodes; closed-form
                      // systems evaluate everywhere
          continue;
        }
        const Complex v = s.ctx.phi(lambdas[li], TorusPoint::on_A(h));
        for (int d = 0; d < s.rs.rank; ++d) csv << csv_double(h[d]) << ",";
        csv << li << "," << csv_double(v.real()) << "," << csv_double(v.imag())
            << "\n";
      }
    }
    meta["wall_margin"] = margin;
    meta["skipped_nodes"] = skipped;
    Json lj = Json::array();
    for (const CVec& l : lambdas) {
      Json row = Json::array();
      for (Eigen::Index i = 0; i < l.size(); ++i)
        row.push_back({l[i].real(), l[i].imag()});
      lj.push_back(row);
    }
    meta["lambda"] = lj;
  } else if (target == "c") {
    csv << "lambda_index,re,im\n";
    const auto lambdas = s.lambda_list();
    const CFunction c(s.rs, s.m);
    for (std::size_t li = 0; li < lambdas.size(); ++li) {
      const Complex v = c(lambdas[li]);
      csv << li << "," << csv_double(v.real()) << "," << csv_double(v.imag()) << "\n";
    }
    meta["kappa0"] = c.kappa0();
  } else if (target == "gamma") {
    const int cap = 24;
    const auto lambdas = s.lambda_list();
    const GammaTable t =
        gamma_coefficients(s.rs, s.m, SpectralParameter(lambdas.back()), cap);
    for (int d = 0; d < s.rs.rank; ++d) csv << "n" << (d + 1) << ",";
    csv << "re,im\n";
    for (std::size_t i = 0; i < t.values.size(); ++i) {
      for (int d = 0; d < s.rs.rank; ++d) csv << t.shell.exponents[i][d] << ",";
      csv << csv_double(t.values[i].real()) << "," << csv_double(t.values[i].imag())
          << "\n";
    }
    meta["degree_cap"] = cap;
    meta["singular_flag"] = t.singular_flag;
  } else if (target == "delta") {
    const QuadratureGrid g = s.a_grid();
    for (int d = 0; d < s.rs.rank; ++d) csv << "x" << (d + 1) << ",";
    csv << "value\n";
    for (Eigen::Index i = 0; i < g.size(); ++i) {
      const Vec h = g.node(i);
      for (int d = 0; d < s.rs.rank; ++d) csv << csv_double(h[d]) << ",";
      csv << csv_double(delta_density(s.rs, s.m, TorusPoint::on_A(h))) << "\n";
    }
  } else if (target == "plancherel_density") {
    const QuadratureGrid g = s.lambda_grid();
    for (int d = 0; d < s.rs.rank; ++d) csv << "l" << (d + 1) << ",";
    csv << "value\n";
    for (Eigen::Index i = 0; i < g.size(); ++i) {
      const Vec l = g.node(i);
      for (int d = 0; d < s.rs.rank; ++d) csv << csv_double(l[d]) << ",";
      csv << csv_double(plancherel_density(s.rs, s.m, l)) << "\n";
    }
  } else {
    std::cerr << "unknown eval target: " << target << "\n";
    return 2;
  }
  write_json((out / ("eval_" + target + ".json")).string(), meta);
  std::cout << "wrote " << csv_path << "\n";
  return 0;
}

// --- transform --------------------------------------------------------------------

int cmd_transform(const CommonOptions& opt, const std::string& direction,
                  const std::string& input) {
  const Session s(resolve_config(opt));
  const fs::path out(s.cfg.out_dir);
  fs::create_directories(out);
  const QuadratureGrid lg = s.lambda_grid();

  GridFunction f = input.empty() ? s.builtin_bump(s.a_grid())
                                 : load_grid_function(input);
  Json report;
  report["direction"] = direction;
  report["root_system"] = to_string(s.cfg.type);
  report["multiplicity"] = s.cfg.multiplicity;

  GridFunction result;
  if (direction == "forward") {
    result = hypergeometric_fourier(s.ctx, f, lg);
    const auto [lhs, rhs] = plancherel_check(s.ctx, f, lg);
    report["norm_input_sq"] = lhs;
    report["norm_output_scaled_sq"] = rhs;
    report["plancherel_defect"] = std::abs(rhs / lhs - 1.0);
  } else if (direction == "inverse") {
    // the input is spectral data; reconstruct on the real grid
    result = inverse_hypergeometric_fourier(s.ctx, f, s.a_grid());
    report["norm_output_sq"] =
        norm_sq(result, [&](const Vec& h) { return s.ctx.delta(h); });
  } else if (direction == "abel") {
    result = abel_transform(s.ctx, f, lg);
    report["norm_output_sq"] = norm_sq(result);
  } else if (direction == "lambda") {
    result = lambda_map(s.ctx, f, lg);
    const double in_norm = norm_sq(f, [&](const Vec& h) { return s.ctx.delta(h); });
    const double out_norm = norm_sq(result);
    report["norm_input_sq"] = in_norm;
    report["norm_output_sq"] = out_norm;
    report["isometry_defect"] = std::abs(out_norm / in_norm - 1.0);
  } else {
    std::cerr << "unknown transform direction: " << direction << "\n";
    return 2;
  }
  const std::string base = (out / ("transform_" + direction)).string();
  save_grid_function(result, base);
  write_json(base + "_report.json", report);
  std::cout << "wrote " << base << ".csv\n";
  if (opt.tolerance > 0.0 && report.contains("plancherel_defect") &&
      report["plancherel_defect"].get<double>() > opt.tolerance)
    return 1;
  if (opt.tolerance > 0.0 && report.contains("isometry_defect") &&
      report["isometry_defect"].get<double>() > opt.tolerance)
    return 1;
  return 0;
}

// --- heat --------------------------------------------------------------------------

int cmd_heat(const CommonOptions& opt, const std::string& input, bool complex_grid) {
  const Session s(resolve_config(opt));
  const fs::path out(s.cfg.out_dir);
  fs::create_directories(out);
  const QuadratureGrid ag = s.a_grid();
  const QuadratureGrid lg = s.lambda_grid();
  GridFunction f = input.empty() ? s.builtin_bump(ag) : load_grid_function(input);
  const GridFunction ff = hypergeometric_fourier(s.ctx, f, lg);
  const double f_norm = norm_sq(f, [&](const Vec& h) { return s.ctx.delta(h); });

  Json report;
  report["root_system"] = to_string(s.cfg.type);
  report["multiplicity"] = s.cfg.multiplicity;
  report["norm_f_sq"] = f_norm;
  Json per_time = Json::array();

  for (double t : s.cfg.times) {
    const GridFunction u = heat_solution(s.ctx, ff, ag, t);
    const double u_norm = norm_sq(u, [&](const Vec& h) { return s.ctx.delta(h); });
    Json row;
    row["t"] = t;
    row["norm_u_sq"] = u_norm;
    row["contraction_ok"] = u_norm <= f_norm * (1.0 + 1e-12);
    const std::string base = (out / ("heat_t" + std::to_string(t))).string();
    save_grid_function(u, base);

    if (complex_grid) {
      const double rl = s.cfg.effective_spectral_radius(s.rs.rank);
      const FockBoxes boxes =
          default_fock_boxes(t, rl, s.cfg.effective_grid_radius(s.rs.rank));
      const int n = s.cfg.effective_grid_n(s.rs.rank);
      const QuadratureGrid xg = tensor_grid(s.rs.rank, n, boxes.x_radius);
      const QuadratureGrid yg = tensor_grid(s.rs.rank, n, boxes.y_radius);
      const HolomorphicGridFunction ext = lambda_extension_grid(s.ctx, ff, t, xg, yg);
      const double fock = fock_norm(s.ctx, ff, t, xg, yg);
      row["fock_norm_sq"] = fock;
      row["fock_defect"] = std::abs(fock / f_norm - 1.0);
      // (X, Y, re, im, weight) rows over the complex box
      std::ofstream csv(base + "_complex.csv");
      csv << "X,Y,re,im,weight\n";
      const FockWeight wgt{t, s.rs.rank, s.ctx.rho_norm_sq()};
      for (Eigen::Index ix = 0; ix < xg.size(); ++ix)
        for (Eigen::Index iy = 0; iy < yg.size(); ++iy)
          csv << csv_double(xg.nodes(ix, 0)) << "," << csv_double(yg.nodes(iy, 0))
              << "," << csv_double(ext.values(ix, iy).real()) << ","
              << csv_double(ext.values(ix, iy).imag()) << ","
              << csv_double(xg.weights[ix] * yg.weights[iy] * wgt(yg.node(iy)))
              << "\n";
    }
    per_time.push_back(row);
  }
  report["times"] = per_time;
  write_json((out / "heat_report.json").string(), report);
  std::cout << "wrote " << (out / "heat_report.json").string() << "\n";
  for (const auto& row : per_time) {
    if (!row.value("contraction_ok", true)) return 1;
    if (opt.tolerance > 0.0 && row.contains("fock_defect") &&
        row["fock_defect"].get<double>() > opt.tolerance)
      return 1;
  }
  return 0;
}

// --- verify ------------------------------------------------------------------------

int cmd_verify(const CommonOptions& opt, const std::string& suite) {
  if (!is_suite_name(suite)) {
    std::cerr << "unknown verification suite: " << suite << "\n";
    return 2;
  }
  const RunConfig cfg = resolve_config(opt);
  const SuiteResult result = run_suite(suite, cfg.seed);
  const Json j = suite_to_json(result);
  const fs::path out(cfg.out_dir);
  fs::create_directories(out);
  write_json((out / ("verify_" + suite + ".json")).string(), j);
  for (const Check& c : result.checks)
    std::printf("[%s] %-40s defect %.3e tol %.0e\n", c.pass ? "PASS" : "FAIL",
                c.name.c_str(), c.defect, c.tolerance);
  if (!result.all_pass()) {
    std::cout << "verification failed\n";
    return 1;
  }
  std::cout << "all checks passed\n";
  return 0;
}

// --- describe-operator ---------------------------------------------------------------

int cmd_describe_operator(const CommonOptions& opt) {
  const Session s(resolve_config(opt));
  Json j;
  j["root_system"] = root_system_to_json(s.rs);
  j["multiplicity"] = s.cfg.multiplicity;
  if (s.rs.reduced && s.m.is_even()) {
    j["psi_a"] = operator_to_json(build_psi_a_operator(s.rs, s.m));
    if (s.m.is_geometric_complex())
      j["d"] = operator_to_json(build_d_operator(s.rs, s.m));
  } else {
    std::cerr << "operator factorizations require even multiplicities on a "
                 "reduced system\n";
    return 2;
  }
  const fs::path out(s.cfg.out_dir);
  fs::create_directories(out);
  write_json((out / "operators.json").string(), j);
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heckman-Opdam hypergeometric functions, hypergeometric Fourier "
               "analysis, and the heat/Segal-Bargmann transform on small-rank "
               "root systems"};
  app.require_subcommand(1);

  CommonOptions eval_opt, tr_opt, heat_opt, ver_opt, desc_opt;
  std::string eval_target, tr_direction = "forward", tr_input, heat_input,
                           suite = "all";
  bool heat_complex = false;

  CLI::App* eval = app.add_subcommand("eval", "evaluate a function over a grid");
  eval->add_option("--target", eval_target, "phi|c|gamma|delta|plancherel_density")
      ->required();
  add_common(eval, eval_opt);

  CLI::App* tr = app.add_subcommand("transform", "run a transform");
  tr->add_option("--direction", tr_direction, "forward|inverse|abel|lambda");
  tr->add_option("--input", tr_input, "input grid function (base path)");
  add_common(tr, tr_opt);

  CLI::App* heat = app.add_subcommand("heat", "solve the heat equation");
  heat->add_option("--input", heat_input, "input grid function (base path)");
  heat->add_flag("--complex-grid", heat_complex,
                 "also emit the holomorphic extension over the complex box");
  add_common(heat, heat_opt);

  CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", suite,
                  "all|gamma|eigen|plancherel|fock|hall_mitchell|abel_inv");
  add_common(ver, ver_opt);

  CLI::App* desc =
      app.add_subcommand("describe-operator", "emit the operator factorizations");
  add_common(desc, desc_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(eval_opt, eval_target);
    if (tr->parsed()) return cmd_transform(tr_opt, tr_direction, tr_input);
    if (heat->parsed()) return cmd_heat(heat_opt, heat_input, heat_complex);
    if (ver->parsed()) return cmd_verify(ver_opt, suite);
    if (desc->parsed()) return cmd_describe_operator(desc_opt);
  } catch (const SchemaMismatch& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
