#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "appell/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Appell polynomial zeros and their attractors"};
  app.require_subcommand(1);

  appell::CliOptions opts;
  std::optional<long> precision;
  std::optional<int> degree;
  std::optional<std::string> out;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opts.config_path, "run configuration (JSON)")->required();
    sub->add_option("--out", out, "output directory");
    sub->add_option("--degree", degree, "polynomial degree n");
    sub->add_option("--precision", precision, "working precision in bits");
    sub->add_flag("--svg,!--no-svg", opts.svg, "write SVG plots");
    sub->add_flag("--reuse", opts.reuse, "read zeros from a previous zeros run");
  };
  for (const char* name : {"coeffs", "zeros", "attractor", "validate"}) {
    const char* help = "";
    if (std::string(name) == "coeffs") help = "coefficients of p_n and p_n(nx)";
    else if (std::string(name) == "zeros") help = "zeros of p_n(nx)";
    else if (std::string(name) == "attractor") help = "predicted zero attractor";
    else help = "numerical checks of the asymptotics";
    add_common(app.add_subcommand(name, help));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : appell::kExitIo;
  }

  opts.out_dir = out;
  opts.degree = degree;
  opts.precision = precision;

  const std::string name = app.get_subcommands().front()->get_name();
  return appell::run_command(name, opts, std::cout, std::cerr);
}
