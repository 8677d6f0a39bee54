#pragma once

// File formats: CSV tables, SVG plots, JSON / text validation reports.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "appell/attractor.hpp"
#include "appell/rootfind.hpp"
#include "appell/validate.hpp"

namespace appell {

// re,im,residual with 25 significant digits, LF line endings.
void write_rootset_csv(std::ostream& os, const RootSet& rs);
// Reads the re,im columns back at `prec`. Throws IoError on malformed input.
std::vector<mp::Complex> read_rootset_csv(std::istream& is, mp::Precision prec);

// k,re,im
void write_coeffs_csv(std::ostream& os, const BigPoly& p);

// re,im,kind,owner1,owner2 (owner indices into geom.owners; owner2 empty on arcs)
void write_attractor_csv(std::ostream& os, const AttractorGeometry& geom);

struct SvgLayers {
  const AttractorGeometry* attractor = nullptr;
  const std::vector<cplx>* zeros = nullptr;
  std::string title;
};
// Polylines (one colour per owner) and zero markers; viewBox fitted with a 5% margin.
void write_svg(std::ostream& os, const SvgLayers& layers);

nlohmann::json to_json(const ValidationReport& r);
void write_report_text(std::ostream& os, const ValidationReport& r);
// bin,lo,hi,count,expected
void write_density_csv(std::ostream& os, const DensityReport& d);

// Writes via a temporary file; throws IoError when the path cannot be written.
void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace appell
