#include "appell/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "appell/attractor.hpp"
#include "appell/io.hpp"
#include "appell/rootfind.hpp"
#include "appell/validate.hpp"

namespace appell {

namespace {

std::string join_path(const std::string& dir, const std::string& file) {
  return (std::filesystem::path(dir) / file).string();
}

template <class F>
std::string render(F&& f) {
  std::ostringstream os;
  f(os);
  return os.str();
}

std::vector<cplx> to_double(const std::vector<mp::Complex>& v) {
  std::vector<cplx> out;
  out.reserve(v.size());
  for (const auto& z : v) out.push_back(z.to_complex());
  return out;
}

void require_degree(const RunConfig& cfg) {
  if (cfg.degree < 1) throw ConfigError("config: degree: must be >= 1 for this subcommand");
}

struct Zeros {
  std::vector<cplx> values;
  std::optional<RootSet> rootset;
};

// Aberth at the run precision, or the zeros CSV when --reuse is given.
Zeros obtain_zeros(const RunConfig& cfg, int n, const CliOptions& opts, std::ostream& log) {
  Zeros z;
  if (opts.reuse) {
    const auto path = zeros_path(cfg, n);
    std::ifstream in(path);
    if (!in) throw IoError("--reuse: cannot read " + path);
    z.values = to_double(read_rootset_csv(in, 64));
    if (static_cast<int>(z.values.size()) != n)
      throw IoError(path + ": expected " + std::to_string(n) + " zeros, found " + std::to_string(z.values.size()));
    log << "read " << n << " zeros from " << path << '\n';
    return z;
  }
  const mp::Precision prec = n == cfg.degree ? run_precision(cfg) : default_precision(n);
  const BigPoly q = scaled_poly(appell_poly(cfg.genfun, n, prec), n);
  RootSet rs = aberth(q, prec, 0.0, cfg.max_iter);
  log << "n=" << n << ": " << rs.roots.size() << " zeros, " << rs.iterations << " iterations, residual 2^"
      << std::lround(rs.residual_log2) << " at " << prec << " bits\n";
  z.values = rs.values();
  z.rootset = std::move(rs);
  return z;
}

}  // namespace

RunConfig effective_config(RunConfig cfg, const CliOptions& opts) {
  if (opts.out_dir) cfg.out_dir = *opts.out_dir;
  if (opts.degree) {
    if (*opts.degree < 0) throw ConfigError("--degree: must be >= 0");
    cfg.degree = *opts.degree;
  }
  if (opts.precision) {
    if (*opts.precision < 64) throw ConfigError("--precision: must be at least 64 bits");
    cfg.precision = *opts.precision;
  }
  return cfg;
}

mp::Precision run_precision(const RunConfig& cfg) {
  return cfg.precision ? *cfg.precision : default_precision(std::max(cfg.degree, 1));
}

std::string zeros_path(const RunConfig& cfg, int n) {
  return join_path(cfg.out_dir, "zeros_n" + std::to_string(n) + ".csv");
}

int cmd_coeffs(const RunConfig& cfg, std::ostream& log) {
  const int n = cfg.degree;
  const mp::Precision prec = run_precision(cfg);
  const BigPoly p = appell_poly(cfg.genfun, n, prec);
  const auto tag = "_n" + std::to_string(n) + ".csv";
  write_file(join_path(cfg.out_dir, "coeffs_p" + tag), render([&](std::ostream& os) { write_coeffs_csv(os, p); }));
  if (n >= 1) {
    const BigPoly q = scaled_poly(p, n);
    write_file(join_path(cfg.out_dir, "coeffs_scaled" + tag),
               render([&](std::ostream& os) { write_coeffs_csv(os, q); }));
  }
  log << "wrote coefficients of p_" << n << " to " << cfg.out_dir << '\n';
  return kExitPass;
}

int cmd_zeros(const RunConfig& cfg, const CliOptions& opts, std::ostream& log) {
  require_degree(cfg);
  const int n = cfg.degree;
  const mp::Precision prec = run_precision(cfg);
  const BigPoly q = scaled_poly(appell_poly(cfg.genfun, n, prec), n);
  RootSet rs;
  try {
    rs = aberth(q, prec, 0.0, cfg.max_iter);
  } catch (const NonConvergedError& e) {
    const auto path = join_path(cfg.out_dir, "zeros_n" + std::to_string(n) + ".partial.csv");
    write_file(path, render([&](std::ostream& os) { write_rootset_csv(os, e.partial()); }));
    log << e.what() << "\npartial iterate written to " << path << '\n';
    return kExitNonConvergence;
  }
  log << n << " zeros, " << rs.iterations << " iterations, residual 2^" << std::lround(rs.residual_log2) << " at "
      << prec << " bits";
  if (!rs.clusters.empty()) log << ", " << rs.clusters.size() << " clusters";
  log << '\n';
  write_file(zeros_path(cfg, n), render([&](std::ostream& os) { write_rootset_csv(os, rs); }));
  if (opts.svg) {
    const auto values = rs.values();
    SvgLayers layers;
    layers.zeros = &values;
    layers.title = cfg.name + ": zeros of p_" + std::to_string(n) + "(nx)";
    write_file(join_path(cfg.out_dir, "zeros_n" + std::to_string(n) + ".svg"),
               render([&](std::ostream& os) { write_svg(os, layers); }));
  }
  return kExitPass;
}

int cmd_attractor(const RunConfig& cfg, const CliOptions& opts, std::ostream& log) {
  const AsymptoticContext ctx = make_context(cfg.genfun, cfg.rho, 128, cfg.tol.improper);
  for (const auto& z : ctx.zeros) {
    const cplx a = z.value();
    log << "zero " << std::setprecision(12) << a.real() << (a.imag() < 0 ? " - " : " + ") << std::abs(a.imag())
        << "i  mult " << z.beta << "  class " << z.modulus_class << "  " << to_string(z.dominance) << '\n';
  }
  const AttractorGeometry geom = build_attractor(ctx.dominants, cfg.resolution, cfg.tol.tie);
  for (const auto& w : geom.warnings) log << "warning: " << w << '\n';
  log << geom.arcs.size() << " arcs, " << geom.segments.size() << " segments\n";
  write_file(join_path(cfg.out_dir, "attractor.csv"), render([&](std::ostream& os) { write_attractor_csv(os, geom); }));

  if (opts.svg) {
    std::vector<cplx> zeros;
    SvgLayers layers;
    layers.attractor = &geom;
    layers.title = cfg.name + ": zero attractor";
    if (opts.reuse) {
      require_degree(cfg);
      zeros = obtain_zeros(cfg, cfg.degree, opts, log).values;
      layers.zeros = &zeros;
      layers.title += " with zeros of p_" + std::to_string(cfg.degree) + "(nx)";
    }
    write_file(join_path(cfg.out_dir, "attractor.svg"), render([&](std::ostream& os) { write_svg(os, layers); }));
  }
  return kExitPass;
}

int cmd_validate(const RunConfig& cfg, const CliOptions& opts, std::ostream& log) {
  require_degree(cfg);
  const int n = cfg.degree;
  const mp::Precision prec = run_precision(cfg);
  const AsymptoticContext ctx = make_context(cfg.genfun, cfg.rho, prec, cfg.tol.improper);
  const AttractorGeometry geom = build_attractor(ctx.dominants, cfg.resolution, cfg.tol.tie);
  const std::vector<cplx> curve = geom.points();

  ValidationReport rep;
  rep.genfun = cfg.genfun.describe();
  rep.degree = n;
  rep.precision = prec;
  rep.warnings = geom.warnings;

  const Zeros zs = obtain_zeros(cfg, n, opts, log);
  const std::vector<cplx>& zeros = zs.values;
  const double window = cfg.window_factor / n;

  // containment
  double max_mod = 0;
  for (const cplx& z : zeros) max_mod = std::max(max_mod, std::abs(z));
  rep.checks.push_back(check_le("containment", max_mod, 1.0 / ctx.r0() + cfg.tol.containment, "max |z|"));

  if (zs.rootset) {
    const double bound = -static_cast<double>(prec) / 4;
    rep.checks.push_back(check_le("residual_log2", zs.rootset->residual_log2, bound, "max |p(z)| / max |c|"));
  }

  rep.hausdorff = hausdorff_report(zeros, curve);
  if (cfg.tol.hausdorff) rep.checks.push_back(check_le("hausdorff", rep.hausdorff.hausdorff, *cfg.tol.hausdorff));

  {
    const auto dist = nearest_distances(zeros, curve);
    for (std::size_t i = 0; i < zeros.size(); ++i)
      if (dist[i] > window) rep.outliers.push_back(zeros[i]);
  }

  std::vector<cplx> zeros_cmp;
  if (cfg.compare_degree > 0) {
    zeros_cmp = obtain_zeros(cfg, cfg.compare_degree, opts, log).values;
    const double h_cmp = hausdorff(zeros_cmp, curve);
    Check c;
    c.name = "hausdorff_decreases";
    c.value = rep.hausdorff.hausdorff;
    c.threshold = h_cmp;
    c.relation = "<";
    c.pass = c.value < c.threshold;
    c.detail = "against n=" + std::to_string(cfg.compare_degree);
    rep.checks.push_back(c);
  }

  for (const auto& spec : cfg.density) {
    auto report = [&](const std::vector<cplx>& zs_, double win, int min_per_bin) {
      if (spec.segment)
        return density_segment_report(zs_, spec.owner1, spec.owner2, geom, win, spec.bins, SegmentBinning::position,
                                      min_per_bin);
      return density_arc_report(zs_, spec.owner1, geom, win, spec.bins, min_per_bin);
    };
    const std::string label = spec.segment ? "density_segment_" + std::to_string(spec.owner1) + "_" +
                                                 std::to_string(spec.owner2)
                                           : "density_arc_" + std::to_string(spec.owner1);
    const double limit = spec.segment ? cfg.tol.segment_bins : cfg.tol.arc_bins;
    DensityReport d;
    try {
      d = report(zeros, window, 8);
    } catch (const InsufficientSampleError& e) {
      Check c = check_le(label, NAN, limit, e.what());
      c.pass = false;
      rep.checks.push_back(c);
      continue;
    }
    rep.checks.push_back(check_le(label, d.max_rel_dev, limit, std::to_string(d.selected) + " zeros"));
    if (cfg.compare_degree > 0) {
      const DensityReport dc = report(zeros_cmp, cfg.window_factor / cfg.compare_degree, 0);
      Check c;
      c.name = label + "_decreases";
      c.value = d.max_rel_dev;
      c.threshold = dc.max_rel_dev;
      c.relation = "<";
      c.pass = c.value < c.threshold;
      c.detail = "against n=" + std::to_string(cfg.compare_degree);
      rep.checks.push_back(c);
    }
    write_file(join_path(cfg.out_dir, label + ".csv"), render([&](std::ostream& os) { write_density_csv(os, d); }));
    rep.densities.push_back(std::move(d));
  }

  if (cfg.asym) {
    const auto& a = *cfg.asym;
    rep.asym_table = asym_error_table(ctx, a.degrees, a.points, a.mode, curve);
    for (std::size_t i = 1; i < rep.asym_table.size(); ++i) {
      const auto& prev = rep.asym_table[i - 1];
      const auto& row = rep.asym_table[i];
      if (prev.x != row.x) continue;
      std::ostringstream name;
      name << "asym_ratio(" << row.x.real() << "," << row.x.imag() << ";" << prev.n << "/" << row.n << ")";
      rep.checks.push_back(check_in(name.str(), prev.rel_err / row.rel_err, a.ratio_lo, a.ratio_hi));
    }
  }

  if (cfg.count_rectangles > 0) {
    const BigPoly q = scaled_poly(appell_poly(cfg.genfun, n, prec), n);
    double R = 0;
    for (const cplx& z : zeros) R = std::max(R, std::abs(z));
    R = 1.2 * R + 0.1;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> U(-R, R);
    const double margin = 1e-3 * R;
    int agree = 0, done = 0, attempts = 0;
    std::string detail;
    while (done < cfg.count_rectangles) {
      if (++attempts > 100 * cfg.count_rectangles) throw NumericalError("count rectangles: no admissible rectangle");
      double x0 = U(rng), x1 = U(rng), y0 = U(rng), y1 = U(rng);
      if (x0 > x1) std::swap(x0, x1);
      if (y0 > y1) std::swap(y0, y1);
      const Rect r{x0, x1, y0, y1};
      if (x1 - x0 < 4 * margin || y1 - y0 < 4 * margin) continue;
      bool close = false;
      int inside = 0;
      for (const cplx& z : zeros) {
        close = close || r.distance_to_boundary(z) < margin;
        inside += r.contains(z);
      }
      if (close) continue;
      const int counted = argument_principle_count(q, r);
      ++done;
      if (counted == inside) ++agree;
      else detail += " [" + std::to_string(x0) + "," + std::to_string(x1) + "]x[" + std::to_string(y0) + "," +
                     std::to_string(y1) + "]: " + std::to_string(counted) + " vs " + std::to_string(inside);
    }
    Check c;
    c.name = "count_certification";
    c.value = agree;
    c.threshold = cfg.count_rectangles;
    c.relation = ">=";
    c.pass = agree >= cfg.count_rectangles;
    c.detail = detail.empty() ? std::to_string(done) + " rectangles" : detail;
    rep.checks.push_back(c);
  }

  write_file(join_path(cfg.out_dir, "report.json"), to_json(rep).dump(2) + "\n");
  write_file(join_path(cfg.out_dir, "report.txt"), render([&](std::ostream& os) { write_report_text(os, rep); }));
  write_report_text(log, rep);
  return rep.pass() ? kExitPass : kExitValidation;
}

int run_command(const std::string& name, const CliOptions& opts, std::ostream& log, std::ostream& err) {
  try {
    const RunConfig cfg = effective_config(load_config(opts.config_path), opts);
    if (name == "coeffs") return cmd_coeffs(cfg, log);
    if (name == "zeros") return cmd_zeros(cfg, opts, log);
    if (name == "attractor") return cmd_attractor(cfg, opts, log);
    if (name == "validate") return cmd_validate(cfg, opts, log);
    err << "unknown subcommand " << name << '\n';
    return kExitIo;
  } catch (const NonConvergedError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNonConvergence;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNonConvergence;
  }
}

}  // namespace appell
