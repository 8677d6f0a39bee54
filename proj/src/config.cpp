#include "appell/config.hpp"

#include <cmath>

#include "appell/error.hpp"
#include "appell/io.hpp"

namespace appell {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError("config: " + where + ": " + what);
}

// Decimal / hex-float literal from a JSON number or string.
std::string literal(const json& v, const std::string& where) {
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%a", v.get<double>());
    return buf;
  }
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    try {
      mp::Real probe(s, 64);
    } catch (const std::invalid_argument&) {
      fail(where, "\"" + s + "\" is not a number");
    }
    return s;
  }
  fail(where, "expected a number or numeric string");
}

std::string join(const std::string& where, const char* key) { return where.empty() ? key : where + "." + key; }

double number(const json& obj, const char* key, const std::string& where, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj[key];
  if (!v.is_number()) fail(join(where, key), "expected a number");
  return v.get<double>();
}

int integer(const json& obj, const char* key, const std::string& where, int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj[key];
  if (!v.is_number_integer()) fail(join(where, key), "expected an integer");
  return v.get<int>();
}

double positive(const json& obj, const char* key, const std::string& where, double fallback) {
  const double v = number(obj, key, where, fallback);
  if (!(v > 0)) fail(join(where, key), "must be positive");
  return v;
}

ComplexLiteral complex_literal(const json& v, const std::string& where) {
  if (!v.is_object()) fail(where, "expected an object {\"re\":..,\"im\":..}");
  ComplexLiteral c;
  c.re = v.contains("re") ? literal(v["re"], where + ".re") : "0";
  c.im = v.contains("im") ? literal(v["im"], where + ".im") : "0";
  return c;
}

std::complex<double> complex_point(const json& v, const std::string& where) {
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  if (v.is_object()) return complex_literal(v, where).approx();
  fail(where, "expected [re, im] or {\"re\":..,\"im\":..}");
}

}  // namespace

GeneratingFunction parse_genfun(const json& doc, const std::string& where) {
  if (!doc.is_object()) fail(where, "expected an object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) fail(where + ".kind", "missing or not a string");
  const auto kind = doc["kind"].get<std::string>();
  try {
    if (kind == "poly") {
      if (!doc.contains("roots") || !doc["roots"].is_array() || doc["roots"].empty())
        fail(where + ".roots", "expected a non-empty array");
      std::vector<PolyRoot> roots;
      for (std::size_t i = 0; i < doc["roots"].size(); ++i) {
        const std::string at = where + ".roots[" + std::to_string(i) + "]";
        const json& r = doc["roots"][i];
        PolyRoot pr;
        pr.value = complex_literal(r, at);
        pr.multiplicity = r.is_object() ? integer(r, "mult", at, 1) : 1;
        if (pr.multiplicity < 1) fail(at + ".mult", "must be a positive integer");
        roots.push_back(pr);
      }
      ComplexLiteral scale{"1", "0"};
      if (doc.contains("scale")) scale = complex_literal(doc["scale"], where + ".scale");
      return GeneratingFunction::polynomial(std::move(roots), scale);
    }
    if (kind == "catalog") {
      if (!doc.contains("name") || !doc["name"].is_string()) fail(where + ".name", "missing or not a string");
      CatalogName name;
      try {
        name = catalog_name_from_string(doc["name"].get<std::string>());
      } catch (const ConfigError& e) {
        fail(where + ".name", e.what());
      }
      return GeneratingFunction::catalog(name, integer(doc, "order", where, 1));
    }
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
  fail(where + ".kind", "unknown kind \"" + kind + "\" (expected poly or catalog)");
}

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) fail("<root>", "expected an object");
  RunConfig c;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail("name", "expected a string");
    c.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("genfun")) fail("genfun", "missing");
  c.genfun = parse_genfun(doc["genfun"]);
  c.degree = integer(doc, "degree", "", c.degree);
  if (c.degree < 0) fail("degree", "must be >= 0");
  if (!doc.contains("rho")) fail("rho", "missing");
  c.rho = positive(doc, "rho", "", c.rho);
  if (doc.contains("precision") && !doc["precision"].is_null()) {
    const int p = integer(doc, "precision", "", 0);
    if (p < 64) fail("precision", "must be at least 64 bits");
    c.precision = p;
  }
  c.resolution = integer(doc, "resolution", "", c.resolution);
  if (c.resolution < 64) fail("resolution", "must be at least 64");
  c.max_iter = integer(doc, "max_iter", "", c.max_iter);
  if (c.max_iter < 1) fail("max_iter", "must be positive");
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) fail("seed", "expected a non-negative integer");
    c.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("out")) {
    if (!doc["out"].is_string()) fail("out", "expected a string");
    c.out_dir = doc["out"].get<std::string>();
  }

  if (doc.contains("tolerances")) {
    const json& t = doc["tolerances"];
    if (!t.is_object()) fail("tolerances", "expected an object");
    c.tol.tie = positive(t, "tie", "tolerances", c.tol.tie);
    c.tol.improper = positive(t, "improper", "tolerances", c.tol.improper);
    c.tol.arc_bins = positive(t, "arc_bins", "tolerances", c.tol.arc_bins);
    c.tol.segment_bins = positive(t, "segment_bins", "tolerances", c.tol.segment_bins);
    c.tol.containment = positive(t, "containment", "tolerances", c.tol.containment);
    if (t.contains("hausdorff")) c.tol.hausdorff = positive(t, "hausdorff", "tolerances", 0);
  }

  if (doc.contains("validate")) {
    const json& v = doc["validate"];
    if (!v.is_object()) fail("validate", "expected an object");
    c.compare_degree = integer(v, "compare_degree", "validate", 0);
    if (c.compare_degree < 0) fail("validate.compare_degree", "must be >= 0");
    c.window_factor = positive(v, "window_factor", "validate", c.window_factor);
    c.count_rectangles = integer(v, "count_rectangles", "validate", 0);
    if (c.count_rectangles < 0) fail("validate.count_rectangles", "must be >= 0");
    if (v.contains("density")) {
      if (!v["density"].is_array()) fail("validate.density", "expected an array");
      for (std::size_t i = 0; i < v["density"].size(); ++i) {
        const std::string at = "validate.density[" + std::to_string(i) + "]";
        const json& d = v["density"][i];
        if (!d.is_object()) fail(at, "expected an object");
        DensitySpec s;
        const std::string kind = d.value("kind", std::string("arc"));
        if (kind != "arc" && kind != "segment") fail(at + ".kind", "expected arc or segment");
        s.segment = kind == "segment";
        if (s.segment) {
          if (!d.contains("owners") || !d["owners"].is_array() || d["owners"].size() != 2)
            fail(at + ".owners", "expected two owner indices");
          s.owner1 = d["owners"][0].get<int>();
          s.owner2 = d["owners"][1].get<int>();
        } else {
          s.owner1 = integer(d, "owner", at, 0);
        }
        s.bins = integer(d, "bins", at, s.segment ? 6 : 8);
        if (s.bins < 4) fail(at + ".bins", "must be at least 4");
        c.density.push_back(s);
      }
    }
    if (v.contains("asym")) {
      const json& a = v["asym"];
      if (!a.is_object()) fail("validate.asym", "expected an object");
      AsymSpec s;
      if (!a.contains("points") || !a["points"].is_array() || a["points"].empty())
        fail("validate.asym.points", "expected a non-empty array");
      for (std::size_t i = 0; i < a["points"].size(); ++i)
        s.points.push_back(complex_point(a["points"][i], "validate.asym.points[" + std::to_string(i) + "]"));
      const std::string mode = a.value("mode", std::string("exterior"));
      if (mode == "exterior") s.mode = AsymMode::exterior;
      else if (mode == "dominant_sum") s.mode = AsymMode::dominant_sum;
      else fail("validate.asym.mode", "expected exterior or dominant_sum");
      if (a.contains("degrees")) {
        if (!a["degrees"].is_array() || a["degrees"].size() < 2) fail("validate.asym.degrees", "expected >= 2 degrees");
        s.degrees = a["degrees"].get<std::vector<int>>();
      }
      if (a.contains("ratio")) {
        if (!a["ratio"].is_array() || a["ratio"].size() != 2) fail("validate.asym.ratio", "expected [lo, hi]");
        s.ratio_lo = a["ratio"][0].get<double>();
        s.ratio_hi = a["ratio"][1].get<double>();
      }
      c.asym = s;
    }
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ConfigError("config: " + path + ": " + e.what());
  }
  try {
    return parse_config(doc);
  } catch (const json::exception& e) {
    throw ConfigError("config: " + path + ": " + e.what());
  }
}

}  // namespace appell
