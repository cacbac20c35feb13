#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "darboux/susy.hpp"

namespace darboux::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitIoFailure = 3;

/// Carries the process exit code of a failed command.
class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

enum class Command { Eval, Figure, Verify, Spectrum };
enum class OutputFormat { Csv, Json };
enum class Quantity { W, V, DeltaV, Psi, PsiNormalized };

struct RunConfig {
  Command command = Command::Eval;
  susy::Family family = susy::Family::One;
  std::vector<double> gamma_list;
  double pmin = 0.01;
  double pmax = 10.0;
  std::size_t n = 1000;
  std::vector<Quantity> quantities = {Quantity::W, Quantity::V};
  OutputFormat output_format = OutputFormat::Csv;
  std::string output_path;  // eval/verify/spectrum: empty means stdout; figure: directory

  std::string figure = "fig1";
  std::optional<std::vector<double>> family1_gammas;  // fig2 overrides
  std::optional<std::vector<double>> family2_gammas;
  double bending_gamma = -1000.0;                     // fig3

  std::string suite = "all";
  std::optional<double> tol;

  double h = 1e-3;  // spectrum
  double P = 20.0;
};

/// A dataset: a p column followed by named value columns.
struct Table {
  std::vector<double> p;
  std::vector<std::pair<std::string, std::vector<double>>> columns;
};

/// "W", "V", "dV", "psi", "psin".
std::optional<Quantity> parse_quantity(std::string_view name);
const char* to_string(Quantity q) noexcept;
std::vector<Quantity> parse_quantities(std::string_view csv);
/// Comma-separated reals; "inf" and "-inf" select the undeformed limit.
std::vector<double> parse_gamma_list(std::string_view csv);

/// Throws CliError(kExitInvalidInput) for a grid or gamma the command
/// cannot use; the message names the violated rule.
void validate(const RunConfig& config);

/// Header row, then one row per grid point; %.16e, LF line endings.
std::string format_csv(const Table& table);
/// {"p": [...], "columns": {"name": [...], ...}} with columns in order.
std::string format_json(const Table& table);

std::string gamma_label(double gamma);

Table eval_table(const RunConfig& config);
/// File name and contents of each dataset of config.figure.
std::vector<std::pair<std::string, Table>> figure_tables(const RunConfig& config);

int cmd_eval(const RunConfig& config, std::ostream& out);
int cmd_figure(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_spectrum(const RunConfig& config, std::ostream& out);

}  // namespace darboux::cli
