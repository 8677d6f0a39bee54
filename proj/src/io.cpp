#include "appell/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "appell/error.hpp"

namespace appell {

namespace {

std::string fmt(double v, int digits = 17) {
  if (std::isnan(v)) return "nan";
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

const char* colour(int owner) { return kPalette[static_cast<std::size_t>(owner) % std::size(kPalette)]; }

nlohmann::json complex_json(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json number_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

}  // namespace

void write_rootset_csv(std::ostream& os, const RootSet& rs) {
  os << "re,im,residual\n";
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    os << rs.roots[i].re().to_string(25) << ',' << rs.roots[i].im().to_string(25) << ',';
    if (i < rs.residuals.size()) os << rs.residuals[i].to_string(25);
    os << '\n';
  }
}

std::vector<mp::Complex> read_rootset_csv(std::istream& is, mp::Precision prec) {
  std::string line;
  if (!std::getline(is, line)) throw IoError("zeros CSV is empty");
  auto header = split_csv(line);
  if (header.size() < 2 || header[0] != "re" || header[1] != "im") throw IoError("zeros CSV: expected header re,im,...");
  std::vector<mp::Complex> out;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto cells = split_csv(line);
    if (cells.size() < 2) throw IoError("zeros CSV line " + std::to_string(lineno) + ": expected re,im");
    try {
      out.emplace_back(mp::Real(cells[0], prec), mp::Real(cells[1], prec));
    } catch (const std::invalid_argument&) {
      throw IoError("zeros CSV line " + std::to_string(lineno) + ": not a number");
    }
  }
  return out;
}

void write_coeffs_csv(std::ostream& os, const BigPoly& p) {
  os << "k,re,im\n";
  for (int k = 0; k <= p.degree(); ++k) os << k << ',' << p[k].re().to_string(25) << ',' << p[k].im().to_string(25) << '\n';
}

void write_attractor_csv(std::ostream& os, const AttractorGeometry& geom) {
  os << "re,im,kind,owner1,owner2\n";
  for (const auto& p : geom.all_points) {
    os << fmt(p.x.real()) << ',' << fmt(p.x.imag()) << ',' << (p.segment ? "segment" : "arc") << ',' << p.owner1 << ',';
    if (p.segment) os << p.owner2;
    os << '\n';
  }
}

void write_svg(std::ostream& os, const SvgLayers& layers) {
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  auto extend = [&](cplx z) {
    xmin = std::min(xmin, z.real());
    xmax = std::max(xmax, z.real());
    ymin = std::min(ymin, z.imag());
    ymax = std::max(ymax, z.imag());
  };
  if (layers.attractor)
    for (const auto& p : layers.attractor->all_points) extend(p.x);
  if (layers.zeros)
    for (const cplx& z : *layers.zeros) extend(z);
  if (!std::isfinite(xmin)) xmin = ymin = -1, xmax = ymax = 1;
  double w = xmax - xmin, h = ymax - ymin;
  if (w <= 0) w = 1;
  if (h <= 0) h = 1;
  xmin -= 0.05 * w;
  ymin -= 0.05 * h;
  w *= 1.1;
  h *= 1.1;
  const double stroke = 0.003 * std::max(w, h);
  // SVG y grows downwards: plot (x, -y).
  auto P = [](cplx z) { return fmt(z.real(), 9) + "," + fmt(-z.imag(), 9); };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(xmin, 9) << ' ' << fmt(-(ymin + h), 9) << ' '
     << fmt(w, 9) << ' ' << fmt(h, 9) << "\" width=\"800\" height=\"" << static_cast<int>(800 * h / w) << "\">\n";
  if (!layers.title.empty()) os << "<title>" << layers.title << "</title>\n";
  os << "<rect x=\"" << fmt(xmin, 9) << "\" y=\"" << fmt(-(ymin + h), 9) << "\" width=\"" << fmt(w, 9)
     << "\" height=\"" << fmt(h, 9) << "\" fill=\"white\"/>\n";
  if (layers.attractor) {
    for (const auto& arc : layers.attractor->arcs) {
      os << "<polyline fill=\"none\" stroke=\"" << colour(arc.owner) << "\" stroke-width=\"" << fmt(stroke, 6)
         << "\" points=\"";
      for (const cplx& z : arc.points) os << P(z) << ' ';
      os << "\"/>\n";
    }
    for (const auto& s : layers.attractor->segments) {
      os << "<polyline fill=\"none\" stroke=\"" << colour(s.owner1) << "\" stroke-dasharray=\"" << fmt(4 * stroke, 6)
         << "\" stroke-width=\"" << fmt(stroke, 6) << "\" points=\"" << P(s.p0) << ' ' << P(s.p1) << "\"/>\n";
    }
  }
  if (layers.zeros) {
    const double r = 1.5 * stroke;
    for (const cplx& z : *layers.zeros)
      os << "<circle cx=\"" << fmt(z.real(), 9) << "\" cy=\"" << fmt(-z.imag(), 9) << "\" r=\"" << fmt(r, 6)
         << "\" fill=\"black\"/>\n";
  }
  os << "</svg>\n";
}

nlohmann::json to_json(const ValidationReport& r) {
  using nlohmann::json;
  json j;
  j["genfun"] = r.genfun;
  j["degree"] = r.degree;
  j["precision"] = r.precision;
  j["pass"] = r.pass();
  j["hausdorff"] = {{"hausdorff", r.hausdorff.hausdorff},
                    {"zeros_to_attractor", r.hausdorff.zeros_to_attractor},
                    {"attractor_to_zeros", r.hausdorff.attractor_to_zeros}};
  j["densities"] = json::array();
  for (const auto& d : r.densities) {
    json dj{{"kind", d.kind}, {"owner1", d.owner1}, {"selected", d.selected}, {"window", d.window},
            {"max_rel_dev", d.max_rel_dev}};
    if (d.owner2 >= 0) dj["owner2"] = d.owner2;
    dj["bins"] = json::array();
    for (const auto& b : d.bins) dj["bins"].push_back({{"lo", b.lo}, {"hi", b.hi}, {"count", b.count}, {"expected", b.expected}});
    j["densities"].push_back(dj);
  }
  j["asym_table"] = json::array();
  for (const auto& row : r.asym_table) {
    j["asym_table"].push_back({{"x", complex_json(row.x)},
                               {"n", row.n},
                               {"exact", complex_json(row.exact)},
                               {"approx", complex_json(row.approx)},
                               {"abs_err", row.abs_err},
                               {"rel_err", row.rel_err},
                               {"order", number_or_null(row.order)}});
  }
  j["outliers"] = json::array();
  for (const cplx& z : r.outliers) j["outliers"].push_back(complex_json(z));
  j["checks"] = json::array();
  for (const auto& c : r.checks) {
    json cj{{"name", c.name}, {"value", number_or_null(c.value)}, {"relation", c.relation}, {"threshold", c.threshold},
            {"pass", c.pass}};
    if (c.relation == "in") cj["threshold_hi"] = c.threshold_hi;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    j["checks"].push_back(cj);
  }
  j["warnings"] = r.warnings;
  return j;
}

void write_report_text(std::ostream& os, const ValidationReport& r) {
  os << "genfun     " << r.genfun << "\n";
  os << "degree     " << r.degree << "  (" << r.precision << " bits)\n";
  os << "hausdorff  " << fmt(r.hausdorff.hausdorff, 6) << "  zeros->attractor " << fmt(r.hausdorff.zeros_to_attractor, 6)
     << "  attractor->zeros " << fmt(r.hausdorff.attractor_to_zeros, 6) << "\n";
  for (const auto& d : r.densities) {
    os << "density    " << d.kind << ' ' << d.owner1;
    if (d.owner2 >= 0) os << '/' << d.owner2;
    os << "  selected " << d.selected << "  max dev " << fmt(d.max_rel_dev, 4) << "\n          ";
    for (const auto& b : d.bins) os << ' ' << b.count << '/' << fmt(b.expected, 4);
    os << '\n';
  }
  if (!r.asym_table.empty()) {
    os << "\n" << std::left << std::setw(22) << "x" << std::setw(6) << "n" << std::setw(14) << "abs err" << std::setw(14)
       << "rel err" << "order\n";
    for (const auto& row : r.asym_table) {
      os << std::left << std::setw(22) << ("(" + fmt(row.x.real(), 4) + "," + fmt(row.x.imag(), 4) + ")") << std::setw(6)
         << row.n << std::setw(14) << fmt(row.abs_err, 4) << std::setw(14) << fmt(row.rel_err, 4)
         << (std::isnan(row.order) ? std::string("-") : fmt(row.order, 3)) << '\n';
    }
  }
  os << '\n';
  for (const auto& c : r.checks) {
    os << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  " << fmt(c.value, 6) << ' ' << c.relation << ' '
       << fmt(c.threshold, 6);
    if (c.relation == "in") os << ".." << fmt(c.threshold_hi, 6);
    if (!c.detail.empty()) os << "  (" << c.detail << ')';
    os << '\n';
  }
  for (const auto& w : r.warnings) os << "warning: " << w << '\n';
  if (!r.outliers.empty()) os << r.outliers.size() << " zeros outside every density window\n";
}

void write_density_csv(std::ostream& os, const DensityReport& d) {
  os << "bin,lo,hi,count,expected\n";
  for (std::size_t i = 0; i < d.bins.size(); ++i)
    os << i << ',' << fmt(d.bins[i].lo) << ',' << fmt(d.bins[i].hi) << ',' << d.bins[i].count << ','
       << fmt(d.bins[i].expected) << '\n';
}

void write_file(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path(), ec);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << contents;
    if (!out) throw IoError("write failed: " + path);
  }
  fs::rename(tmp, target, ec);
  if (ec) throw IoError("cannot move " + tmp.string() + " to " + path + ": " + ec.message());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace appell
