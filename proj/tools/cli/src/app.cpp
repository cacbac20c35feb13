#include "darboux_cli/app.hpp"

#include <exception>
#include <string>

#include <CLI11.hpp>

#include "darboux_cli/commands.hpp"

namespace darboux::cli {

namespace {

void add_grid_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--pmin", cfg.pmin, "Lower end of the momentum grid (>= 0)")
      ->capture_default_str();
  cmd->add_option("--pmax", cfg.pmax, "Upper end of the momentum grid")->capture_default_str();
  cmd->add_option("--n", cfg.n, "Number of grid points (>= 2)")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Darboux deformations of the momentum-space partner potentials "
               "p -+ 1/(2 sqrt p): datasets and verification suites."};
  app.set_config("--config", "",
                 "INI/TOML file of option values; options of a subcommand go in its [section]. "
                 "Command-line flags take precedence.");
  app.require_subcommand(1);

  RunConfig cfg;
  std::string family = "1";
  std::string gamma;
  std::string quantities = "W,V";
  std::string format = "csv";
  std::string family1_gammas;
  std::string family2_gammas;

  auto* eval = app.add_subcommand("eval", "Evaluate deformed quantities on a uniform grid");
  eval->add_option("--family", family, "1: V1 deformed with W2g; 2: V2 deformed with W1g")
      ->check(CLI::IsMember({"1", "2"}))
      ->capture_default_str();
  eval->add_option("--gamma", gamma, "Comma-separated deformation parameters (inf allowed)")
      ->required();
  add_grid_options(eval, cfg);
  eval->add_option("--quantities", quantities, "Comma-separated subset of W,V,dV,psi,psin")
      ->capture_default_str();
  eval->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  eval->add_option("--out", cfg.output_path, "Output file (default: standard output)");

  auto* figure = app.add_subcommand("figure", "Write figure datasets as CSV files");
  figure->add_option("which", cfg.figure, "fig1, fig2 or fig3")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
  figure->add_option("--out", cfg.output_path, "Output directory (default: .)");
  add_grid_options(figure, cfg);
  figure->add_option("--family1-gamma", family1_gammas,
                     "fig2: family 1 parameters (default 0.5,1,2,5)");
  figure->add_option("--family2-gamma", family2_gammas,
                     "fig2: family 2 parameters (default -0.5,-1,-2,-5)");
  figure->add_option("--gamma", cfg.bending_gamma, "fig3: family 2 parameter")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run a verification suite, write a JSON report");
  verify->add_option("--suite", cfg.suite, "specfun, riccati, zeromode, intertwine, norm or all")
      ->check(CLI::IsMember({"specfun", "riccati", "zeromode", "intertwine", "norm", "all"}))
      ->capture_default_str();
  verify->add_option("--tol", cfg.tol, "Replace every check tolerance");
  verify->add_option("--out", cfg.output_path, "Report file (default: standard output)");

  auto* spectrum = app.add_subcommand(
      "spectrum", "Lowest eigenvalue of the family 1 deformed Hamiltonian, Robin at p = 0");
  spectrum->add_option("--gamma", gamma, "Family 1 deformation parameter")->required();
  // "-h" would shadow the grid step.
  spectrum->set_help_flag("--help", "Print this help message and exit");
  spectrum->add_option("--h", cfg.h, "Grid step")->capture_default_str();
  spectrum->add_option("--P", cfg.P, "Dirichlet cutoff")->capture_default_str();
  spectrum->add_option("--out", cfg.output_path, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    cfg.family = family == "2" ? susy::Family::Two : susy::Family::One;
    cfg.output_format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    if (*eval) {
      cfg.command = Command::Eval;
      cfg.gamma_list = parse_gamma_list(gamma);
      cfg.quantities = parse_quantities(quantities);
      return cmd_eval(cfg, out);
    }
    if (*figure) {
      cfg.command = Command::Figure;
      if (!family1_gammas.empty()) cfg.family1_gammas = parse_gamma_list(family1_gammas);
      if (!family2_gammas.empty()) cfg.family2_gammas = parse_gamma_list(family2_gammas);
      return cmd_figure(cfg, out);
    }
    if (*verify) {
      cfg.command = Command::Verify;
      return cmd_verify(cfg, out);
    }
    cfg.command = Command::Spectrum;
    cfg.gamma_list = parse_gamma_list(gamma);
    return cmd_spectrum(cfg, out);
  } catch (const CliError& e) {
    err << "error: " << e.what() << '\n';
    return e.code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace darboux::cli
