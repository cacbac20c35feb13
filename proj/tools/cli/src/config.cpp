#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "darboux_cli/commands.hpp"

namespace darboux::cli {

namespace {

std::vector<std::string> split_csv(std::string_view csv) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? csv.size() : comma;
    std::string item(csv.substr(start, end - start));
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    out.push_back(first == std::string::npos ? "" : item.substr(first, last - first + 1));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

[[noreturn]] void invalid(const std::string& message) {
  throw CliError(kExitInvalidInput, message);
}

void require_valid_gamma(susy::Family family, double gamma) {
  const auto param = susy::validate_gamma(family, gamma);
  if (param.status != susy::Status::Valid) invalid(susy::describe_violation(param));
}

void validate_grid(const RunConfig& c) {
  if (!(c.pmin >= 0.0)) invalid("pmin must be >= 0");
  if (!(c.pmax > c.pmin) || !std::isfinite(c.pmax)) invalid("pmax must be finite and > pmin");
  if (c.n < 2) invalid("n must be >= 2");
}

}  // namespace

std::optional<Quantity> parse_quantity(std::string_view name) {
  if (name == "W") return Quantity::W;
  if (name == "V") return Quantity::V;
  if (name == "dV") return Quantity::DeltaV;
  if (name == "psi") return Quantity::Psi;
  if (name == "psin") return Quantity::PsiNormalized;
  return std::nullopt;
}

const char* to_string(Quantity q) noexcept {
  switch (q) {
    case Quantity::W:
      return "W";
    case Quantity::V:
      return "V";
    case Quantity::DeltaV:
      return "dV";
    case Quantity::Psi:
      return "psi";
    case Quantity::PsiNormalized:
      return "psin";
  }
  return "?";
}

std::vector<Quantity> parse_quantities(std::string_view csv) {
  std::vector<Quantity> out;
  for (const auto& item : split_csv(csv)) {
    const auto q = parse_quantity(item);
    if (!q) invalid("unknown quantity '" + item + "' (expected W, V, dV, psi or psin)");
    out.push_back(*q);
  }
  return out;
}

std::vector<double> parse_gamma_list(std::string_view csv) {
  std::vector<double> out;
  for (const auto& item : split_csv(csv)) {
    if (item.empty()) invalid("empty entry in gamma list");
    errno = 0;
    char* end = nullptr;
    const double g = std::strtod(item.c_str(), &end);
    if (end != item.c_str() + item.size() || errno == ERANGE || std::isnan(g))
      invalid("gamma '" + item + "' is not a real number");
    out.push_back(g);
  }
  return out;
}

std::string gamma_label(double gamma) {
  if (std::isinf(gamma)) return gamma > 0 ? "inf" : "-inf";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10g", gamma);
  return buf;
}

void validate(const RunConfig& c) {
  switch (c.command) {
    case Command::Eval:
      validate_grid(c);
      if (c.gamma_list.empty()) invalid("eval needs at least one gamma");
      if (c.quantities.empty()) invalid("eval needs at least one quantity");
      for (double g : c.gamma_list) require_valid_gamma(c.family, g);
      break;
    case Command::Figure:
      validate_grid(c);
      if (c.figure != "fig1" && c.figure != "fig2" && c.figure != "fig3")
        invalid("unknown figure '" + c.figure + "' (expected fig1, fig2 or fig3)");
      if (c.family1_gammas)
        for (double g : *c.family1_gammas) require_valid_gamma(susy::Family::One, g);
      if (c.family2_gammas)
        for (double g : *c.family2_gammas) require_valid_gamma(susy::Family::Two, g);
      require_valid_gamma(susy::Family::Two, c.bending_gamma);
      break;
    case Command::Verify:
      if (c.tol && !(*c.tol >= 0.0)) invalid("tol must be >= 0");
      break;
    case Command::Spectrum:
      if (c.gamma_list.size() != 1) invalid("spectrum takes exactly one gamma");
      require_valid_gamma(susy::Family::One, c.gamma_list[0]);
      if (std::isinf(c.gamma_list[0])) invalid("spectrum needs a finite gamma");
      if (!(c.h > 0.0) || !(c.P > 2.0 * c.h) || !std::isfinite(c.P))
        invalid("spectrum needs h > 0 and finite P > 2h");
      break;
  }
}

}  // namespace darboux::cli
