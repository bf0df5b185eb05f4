// JSON and CSV export, and the plain-text surface grid format:
//
//   format surface-grid 1
//   ambient flat|sphere
//   codimension K
//   grid NU NV
//   u periodic|polar|open [LO HI]
//   v periodic|open [LO HI]
//   shift_u X1 ... XD        (optional)
//   shift_v X1 ... XD        (optional)
//   points
//   x1 ... xD                (NU * NV rows, v fastest)
//
// Blank lines and lines starting with '#' are ignored.
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "syvol/eikonal.hpp"
#include "syvol/expansion.hpp"
#include "syvol/indicial.hpp"
#include "syvol/renorm.hpp"
#include "syvol/surface.hpp"

namespace syvol::io {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Round to 12 significant digits.
double round12(double x);
std::string format12(double x);

Json to_json(const fiber::FiberFunction& f);
Json to_json(const indicial::IndicialReport& r);
Json to_json(const expansion::JetSeries& s);
Json to_json(const expansion::EikonalSeries& s);
Json to_json(const renorm::VolumeExpansion& v);

void write_samples_csv(std::ostream& out, const std::vector<renorm::Sample>& samples);
void write_invariants_csv(std::ostream& out, const std::vector<geometry::FermiPointData>& pts);

geometry::SurfaceGrid read_surface_grid(std::istream& in);
geometry::SurfaceGrid read_surface_grid_file(const std::string& path);
void write_surface_grid(std::ostream& out, const geometry::SurfaceGrid& s);

}  // namespace syvol::io
