#include "syvol/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "syvol/io.hpp"
#include "syvol/verify.hpp"

namespace syvol::cli {

namespace {

using io::Json;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void add_options(CLI::App& app, RunConfig& c) {
  app.add_option("--n", c.n, "submanifold dimension");
  app.add_option("--k", c.k, "codimension");
  app.add_option("--model", c.model, "model name")->check(CLI::IsMember(geometry::model_names()));
  app.add_option("--surface", c.surface, "surface grid file (overrides --model for energy)");
  app.add_option("--grid", c.grid, "surface grid resolution");
  app.add_option("--a", c.a, "tube radius of the torus of revolution");
  app.add_option("--c", c.c, "core radius of the torus of revolution");
  app.add_option("--eps", c.eps, "perturbation size");
  app.add_option("--order", c.order, "expansion order (default: n + 1, 2 for surfaces)");
  app.add_option("--point", c.point, "grid point used by expand on a surface model");
  app.add_option("--allow-log", c.allow_log, "record log terms instead of failing at an obstruction");
  app.add_option("--eps-min", c.eps_min, "smallest tube radius sampled");
  app.add_option("--eps-max", c.eps_max, "largest tube radius sampled");
  app.add_option("--samples", c.samples, "number of tube radii");
  app.add_option("--corrections", c.corrections, "extra eps^m terms in the volume fit");
  app.add_option("--quad-tol", c.quad_tol, "relative tolerance of the tail quadrature");
  app.add_option("--max-condition", c.max_condition, "largest accepted fit condition number");
  app.add_option("--omega", c.omega, "radial conformal factor coefficients omega_0, omega_1, ...")->delimiter(',');
  app.add_flag("--table", c.table, "classify: print exceptional sets for n = 2..nmax");
  app.add_option("--nmax", c.nmax, "largest n for --table");
  app.add_option("--seed", c.seed, "seed for randomized models and checks");
  app.add_option("--out", c.out, "write JSON here instead of stdout");
  app.add_option("--csv", c.csv, "write plot data (CSV) here");
}

geometry::ModelParams model_params(const RunConfig& c) {
  geometry::ModelParams p;
  p.n = c.n;
  p.k = c.k;
  p.grid = c.grid;
  p.a = c.a;
  p.c = c.c;
  p.eps = c.eps;
  p.seed = c.seed;
  return p;
}

geometry::WarpedProfile profile(const RunConfig& c) {
  auto bundle = geometry::model_catalog(c.model, model_params(c));
  if (auto* p = std::get_if<geometry::WarpedProfile>(&bundle)) return *p;
  throw std::invalid_argument("model '" + c.model + "' is a surface; this command needs a profile model");
}

geometry::SurfaceGrid surface(const RunConfig& c) {
  if (!c.surface.empty()) return io::read_surface_grid_file(c.surface);
  auto bundle = geometry::model_catalog(c.model, model_params(c));
  if (auto* s = std::get_if<geometry::SurfaceGrid>(&bundle)) return *s;
  throw std::invalid_argument("model '" + c.model + "' is a profile; this command needs a surface model");
}

bool is_surface_model(const RunConfig& c) {
  return !c.surface.empty() ||
         std::holds_alternative<geometry::SurfaceGrid>(geometry::model_catalog(c.model, model_params(c)));
}

template <class Writer>
void write_csv(const std::string& path, Writer w) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  w(f);
}

Json cmd_classify(const RunConfig& c) {
  if (!c.table) return io::to_json(indicial::classify(c.n, c.k));
  Json rows = Json::array();
  for (int n = 2; n <= c.nmax; ++n) {
    const auto [e, o] = indicial::exceptional_sets(n);
    rows.push_back({{"n", n}, {"E", e}, {"O", o}});
  }
  return {{"table", rows}};
}

Json cmd_expand(const RunConfig& c) {
  if (is_surface_model(c)) {
    const auto pts = geometry::surface_invariants(surface(c));
    if (c.point < 0 || c.point >= static_cast<int>(pts.size())) throw std::invalid_argument("--point out of range");
    Json j = io::to_json(expansion::expand_n2(pts[static_cast<std::size_t>(c.point)]));
    j["point"] = c.point;
    return j;
  }
  const auto p = profile(c);
  expansion::SymmetricOptions opt;
  opt.allow_log = c.allow_log;
  const auto s = expansion::expand_symmetric(p, c.order < 0 ? p.n + 1 : c.order, opt);
  const auto rc = expansion::residual_slope(p, s);
  Json j = io::to_json(s);
  j["classification"] = indicial::classification_name(indicial::classify(p.n, p.k).classification);
  j["residual_check"] = {{"slope", io::round12(rc.slope)}, {"exact", rc.exact}, {"ok", rc.ok}};
  return j;
}

Json cmd_energy(const RunConfig& c) {
  const auto grid = surface(c);
  const auto pts = geometry::surface_invariants(grid);
  write_csv(c.csv, [&](std::ostream& f) { io::write_invariants_csv(f, pts); });
  const int k = grid.codimension;
  Json j{{"k", k}, {"points", pts.size()}, {"area", io::round12(geometry::surface_area(pts))}};
  if (k == 1) {
    j["energy"] = io::round12(renorm::energy_codim1(pts));
    j["energy_theta"] = io::round12(renorm::energy_n2_theta(pts, 1));
  } else if (k == 4) {
    const auto field = renorm::anomaly_k4(pts);
    double lo = field.front(), hi = lo;
    for (double x : field) lo = std::min(lo, x), hi = std::max(hi, x);
    j["anomaly_integral"] = io::round12(geometry::integrate(pts, field));
    j["anomaly_range"] = {io::round12(lo), io::round12(hi)};
  } else {
    j["energy"] = io::round12(renorm::energy_n2(pts, k));
    j["energy_theta"] = io::round12(renorm::energy_n2_theta(pts, k));
  }
  return j;
}

Json cmd_volume(const RunConfig& c) {
  const auto p = profile(c);
  std::unique_ptr<expansion::JetSeries> series;
  if (p.name != "equatorial" && p.name != "flat") {
    expansion::SymmetricOptions opt;
    opt.allow_log = true;
    series = std::make_unique<expansion::JetSeries>(expansion::expand_symmetric(p, p.n + 1, opt));
  }
  const auto u = renorm::defining_function(p, series.get());
  renorm::TailOptions topt;
  topt.tol = c.quad_tol;
  const auto samples = renorm::volume_samples(p, u, c.eps_min, c.eps_max, c.samples, topt);
  write_csv(c.csv, [&](std::ostream& f) { io::write_samples_csv(f, samples); });
  renorm::FitOptions fopt;
  fopt.corrections = c.corrections;
  fopt.max_condition = c.max_condition;
  auto fit = renorm::fit_expansion(samples, p.n, fopt);
  fit.k = p.k;
  fit.formal_only = p.n % 2 == 1 && p.k >= p.n + 2;
  Json j = io::to_json(fit);
  j["model"] = p.name;
  if (p.name == "equatorial") {
    const auto cf = renorm::closed_form_equatorial(p.n, p.k);
    j["closed_form"] = {{cf.is_energy ? "energy" : "V", io::round12(cf.value)}};
  }
  return j;
}

Json cmd_eikonal(const RunConfig& c) {
  std::vector<fiber::FiberFunction> om;
  for (double w : c.omega) om.push_back(fiber::FiberFunction::constant(c.k, w));
  const int N = c.order < 0 ? std::min<int>(expansion::kEikonalOrderCap, static_cast<int>(c.omega.size())) : c.order;
  return io::to_json(expansion::eikonal_expand(om, N));
}

int cmd_verify(const RunConfig& c, std::ostream& out, Json& result) {
  verify::VerifyOptions opt;
  opt.seed = c.seed;
  bool all = true;
  Json rows = Json::array();
  for (const auto& crit : verify::all_criteria()) {
    const auto r = crit(opt);
    out << verify::summary_line(r) << std::endl;
    all = all && r.passed;
    rows.push_back({{"id", r.id},
                    {"title", r.title},
                    {"passed", r.passed},
                    {"measured", io::round12(r.measured)},
                    {"tolerance", r.tolerance},
                    {"seconds", io::round12(r.seconds)},
                    {"detail", r.detail}});
  }
  result = {{"seed", c.seed}, {"passed", all}, {"criteria", rows}};
  return all ? 0 : 2;
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.n < 1 || c.k < 1) throw std::invalid_argument("n and k must be positive");
  if (!(c.eps_min > 0.0 && c.eps_min < c.eps_max)) throw std::invalid_argument("need 0 < eps-min < eps-max");
  if (!(c.quad_tol > 0.0) || !(c.max_condition > 0.0)) throw std::invalid_argument("tolerances must be positive");
  if (c.samples < 2) throw std::invalid_argument("need at least two samples");
  if (c.corrections < 0) throw std::invalid_argument("corrections must be non-negative");
  if (c.grid < 4) throw std::invalid_argument("grid must be at least 4");
  if (c.nmax < 2) throw std::invalid_argument("nmax must be at least 2");
  if (c.omega.empty()) throw std::invalid_argument("omega needs at least one coefficient");
}

std::string to_config_text(const RunConfig& c) {
  std::ostringstream s;
  auto str = [](const std::string& v) { return "\"" + v + "\""; };
  s << "n = " << c.n << "\nk = " << c.k << "\nmodel = " << str(c.model) << "\nsurface = " << str(c.surface)
    << "\ngrid = " << c.grid << "\na = " << num(c.a) << "\nc = " << num(c.c) << "\neps = " << num(c.eps)
    << "\norder = " << c.order << "\npoint = " << c.point << "\nallow-log = " << (c.allow_log ? "true" : "false")
    << "\neps-min = " << num(c.eps_min) << "\neps-max = " << num(c.eps_max) << "\nsamples = " << c.samples
    << "\ncorrections = " << c.corrections << "\nquad-tol = " << num(c.quad_tol)
    << "\nmax-condition = " << num(c.max_condition) << "\nomega = [";
  for (std::size_t i = 0; i < c.omega.size(); ++i) s << (i ? ", " : "") << num(c.omega[i]);
  s << "]\ntable = " << (c.table ? "true" : "false") << "\nnmax = " << c.nmax << "\nseed = " << c.seed
    << "\nout = " << str(c.out) << "\ncsv = " << str(c.csv) << "\n";
  return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Singular Yamabe expansions, renormalized volumes and submanifold energies", "syvol"};
  app.set_config("--config", "", "TOML-style key = value file; flags override it");
  std::string write_config;
  app.add_option("--write-config", write_config, "write the effective configuration to this file");
  add_options(app, cfg);
  app.require_subcommand(1);
  const std::pair<const char*, const char*> commands[] = {
      {"classify", "indicial roots and exceptional sets for (n, k)"},
      {"expand", "formal solution v_0..v_N of the singular Yamabe problem"},
      {"energy", "surface energy from curvature invariants"},
      {"volume", "tube volumes and the fitted renormalized expansion"},
      {"eikonal", "expansion of the distance-like function for a radial conformal factor"},
      {"verify", "run the acceptance checks"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    validate(cfg);
    if (!write_config.empty()) {
      std::ofstream f(write_config);
      if (!f) throw std::runtime_error("cannot write " + write_config);
      f << to_config_text(cfg);
    }
    Json result;
    int code = 0;
    if (cfg.command == "classify") result = cmd_classify(cfg);
    else if (cfg.command == "expand") result = cmd_expand(cfg);
    else if (cfg.command == "energy") result = cmd_energy(cfg);
    else if (cfg.command == "volume") result = cmd_volume(cfg);
    else if (cfg.command == "eikonal") result = cmd_eikonal(cfg);
    else code = cmd_verify(cfg, err, result);
    const std::string text = result.dump(2);
    if (cfg.out.empty()) {
      out << text << '\n';
    } else {
      std::ofstream f(cfg.out);
      if (!f) throw std::runtime_error("cannot write " + cfg.out);
      f << text << '\n';
    }
    return code;
  } catch (const renorm::IllConditioned& e) {
    err << "numerical guard: " << e.what() << '\n';
    return 3;
  } catch (const geometry::DegenerateMetric& e) {
    err << "numerical guard: degenerate metric: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace syvol::cli
