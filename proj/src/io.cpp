#include "syvol/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace syvol::io {

double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string format12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json to_json(const fiber::FiberFunction& f) {
  Json j;
  j["k"] = f.codimension();
  j["basis"] = fiber::to_string(f.kind());
  j["max_degree"] = f.max_degree();
  Json deg = Json::array();
  for (int d = 0; d <= f.max_degree(); ++d) {
    Json row = Json::array();
    for (double c : f.degree_coefficients(d)) row.push_back(round12(c));
    deg.push_back(row);
  }
  j["coefficients"] = deg;
  return j;
}

Json to_json(const indicial::IndicialReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  if (r.roots)
    j["roots"] = {round12(r.roots->first), round12(r.roots->second)};
  else
    j["roots"] = nullptr;
  j["E"] = r.e_set;
  j["O"] = r.o_set;
  j["classification"] = indicial::classification_name(r.classification);
  if (const auto* o = std::get_if<indicial::OddConstrained>(&r.classification)) j["resonant_orders"] = o->resonant_orders;
  if (const auto* l = std::get_if<indicial::LogObstructed>(&r.classification)) {
    j["nu"] = l->nu;
    j["log_power"] = l->log_power;
  }
  return j;
}

Json to_json(const expansion::JetSeries& s) {
  Json j;
  j["n"] = s.n;
  j["k"] = s.k;
  j["order"] = s.order;
  Json v = Json::array();
  for (const auto& f : s.v) v.push_back(to_json(f));
  j["v"] = v;
  Json logs = Json::array();
  for (const auto& l : s.log_terms) logs.push_back({{"order", l.order}, {"log_power", l.log_power}, {"A", to_json(l.coeff)}});
  j["log_terms"] = logs;
  j["residual_order"] = s.residual_order;
  j["flags"] = s.flags;
  return j;
}

Json to_json(const expansion::EikonalSeries& s) {
  Json j;
  Json psi = Json::array();
  for (const auto& f : s.psi) psi.push_back(to_json(f));
  j["psi"] = psi;
  Json om = Json::array();
  for (const auto& f : s.omega) om.push_back(to_json(f));
  j["omega"] = om;
  return j;
}

Json to_json(const renorm::VolumeExpansion& v) {
  Json j;
  j["n"] = v.n;
  j["k"] = v.k;
  Json c = Json::array();
  for (double x : v.c) c.push_back(round12(x));
  j["c"] = c;
  j["energy"] = round12(v.energy);
  j["V"] = round12(v.V);
  j["energy_error"] = round12(v.energy_error);
  j["V_error"] = round12(v.V_error);
  j["fit_residual"] = round12(v.fit_residual);
  j["condition_number"] = round12(v.condition_number);
  j["eps_window"] = {round12(v.eps_window.first), round12(v.eps_window.second)};
  j["formal_only"] = v.formal_only;
  return j;
}

void write_samples_csv(std::ostream& out, const std::vector<renorm::Sample>& samples) {
  out << "eps,volume\n";
  for (const auto& s : samples) out << format12(s.eps) << ',' << format12(s.volume) << '\n';
}

void write_invariants_csv(std::ostream& out, const std::vector<geometry::FermiPointData>& pts) {
  out << "index,area_weight,H2,L2,Lo2,R_h,R_h_intrinsic,trP_tan,R_g\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    out << i;
    for (double x : {p.area_weight, p.H2, p.L2, p.Lo2, p.R_h, p.R_h_intrinsic, p.trP_tan, p.R_g_point})
      out << ',' << format12(x);
    out << '\n';
  }
}

namespace {

geometry::AxisKind parse_axis(const std::string& s) {
  if (s == "periodic") return geometry::AxisKind::Periodic;
  if (s == "polar") return geometry::AxisKind::Polar;
  if (s == "open") return geometry::AxisKind::Open;
  throw ParseError("unknown axis kind '" + s + "'");
}

bool next_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    return true;
  }
  return false;
}

Eigen::VectorXd parse_vector(std::istringstream& ss, int dim, int lineno) {
  Eigen::VectorXd v(dim);
  for (int c = 0; c < dim; ++c)
    if (!(ss >> v(c))) throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(dim) + " numbers");
  return v;
}

}  // namespace

geometry::SurfaceGrid read_surface_grid(std::istream& in) {
  geometry::SurfaceGrid s;
  std::string line, key;
  int lineno = 0;
  if (!next_line(in, line, lineno) || line.rfind("format surface-grid 1", 0) != 0)
    throw ParseError("missing 'format surface-grid 1' header");
  bool have_grid = false;
  while (next_line(in, line, lineno)) {
    std::istringstream ss(line);
    ss >> key;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (key == "ambient") {
      std::string a;
      ss >> a;
      if (a == "flat") s.ambient = geometry::Ambient::Flat;
      else if (a == "sphere") s.ambient = geometry::Ambient::Sphere;
      else throw ParseError(where + "unknown ambient '" + a + "'");
    } else if (key == "codimension") {
      if (!(ss >> s.codimension)) throw ParseError(where + "bad codimension");
    } else if (key == "grid") {
      if (!(ss >> s.nu >> s.nv)) throw ParseError(where + "bad grid size");
      have_grid = true;
    } else if (key == "u" || key == "v") {
      std::string kind;
      ss >> kind;
      auto& ak = key == "u" ? s.u_kind : s.v_kind;
      auto& lo = key == "u" ? s.u_lo : s.v_lo;
      auto& hi = key == "u" ? s.u_hi : s.v_hi;
      ak = parse_axis(kind);
      if (ak == geometry::AxisKind::Open && !(ss >> lo >> hi)) throw ParseError(where + "open axis needs a range");
    } else if (key == "shift_u") {
      s.shift_u = parse_vector(ss, s.embedding_dim(), lineno);
    } else if (key == "shift_v") {
      s.shift_v = parse_vector(ss, s.embedding_dim(), lineno);
    } else if (key == "points") {
      if (!have_grid) throw ParseError(where + "'points' before 'grid'");
      const int D = s.embedding_dim();
      s.points.resize(s.nu * s.nv, D);
      for (int r = 0; r < s.nu * s.nv; ++r) {
        if (!next_line(in, line, lineno)) throw ParseError("unexpected end of file in point block");
        std::istringstream ps(line);
        s.points.row(r) = parse_vector(ps, D, lineno).transpose();
      }
      s.validate();
      return s;
    } else {
      throw ParseError(where + "unknown key '" + key + "'");
    }
  }
  throw ParseError("missing 'points' block");
}

geometry::SurfaceGrid read_surface_grid_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  return read_surface_grid(f);
}

void write_surface_grid(std::ostream& out, const geometry::SurfaceGrid& s) {
  auto axis = [&](const char* name, geometry::AxisKind k, double lo, double hi) {
    out << name << ' ' << geometry::to_string(k);
    if (k == geometry::AxisKind::Open) out << ' ' << lo << ' ' << hi;
    out << '\n';
  };
  const auto old = out.precision(17);
  out << "format surface-grid 1\n";
  out << "ambient " << geometry::to_string(s.ambient) << '\n';
  out << "codimension " << s.codimension << '\n';
  out << "grid " << s.nu << ' ' << s.nv << '\n';
  axis("u", s.u_kind, s.u_lo, s.u_hi);
  axis("v", s.v_kind, s.v_lo, s.v_hi);
  for (const auto& [name, vec] : {std::pair{"shift_u", &s.shift_u}, std::pair{"shift_v", &s.shift_v}}) {
    if (!vec->size()) continue;
    out << name;
    for (int c = 0; c < vec->size(); ++c) out << ' ' << (*vec)(c);
    out << '\n';
  }
  out << "points\n";
  for (int r = 0; r < s.points.rows(); ++r) {
    for (int c = 0; c < s.points.cols(); ++c) out << (c ? " " : "") << s.points(r, c);
    out << '\n';
  }
  out.precision(old);
}

}  // namespace syvol::io
