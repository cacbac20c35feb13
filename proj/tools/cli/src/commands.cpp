#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>

#include <json.hpp>

#include "darboux/errors.hpp"
#include "darboux/grid_function.hpp"
#include "darboux/oracle.hpp"
#include "darboux/suites.hpp"
#include "darboux_cli/commands.hpp"

namespace darboux::cli {

namespace {

using susy::Family;

std::vector<double> sample(const std::vector<double>& grid,
                           const std::function<double(double)>& f) {
  std::vector<double> out;
  out.reserve(grid.size());
  try {
    for (double p : grid) out.push_back(f(p));
  } catch (const DomainError& e) {
    throw CliError(kExitInvalidInput, e.what());
  } catch (const SingularityError& e) {
    throw CliError(kExitInvalidInput, e.what());
  } catch (const NonNormalizableError& e) {
    throw CliError(kExitInvalidInput, e.what());
  }
  return out;
}

std::function<double(double)> quantity_fn(Family family, double gamma, Quantity q) {
  switch (q) {
    case Quantity::W:
      return [=](double p) { return susy::w_deformed(family, gamma, p); };
    case Quantity::V:
      return [=](double p) { return susy::potential_deformed(family, gamma, p); };
    case Quantity::DeltaV:
      return [=](double p) { return susy::delta_potential(family, gamma, p); };
    case Quantity::Psi:
      return [=](double p) { return susy::zeromode({family, gamma, false}, p); };
    case Quantity::PsiNormalized:
      return [=](double p) { return susy::zeromode({family, gamma, true}, p); };
  }
  return {};
}

using Column = std::pair<std::string, std::vector<double>>;

// One task per column; results are collected in submission order so the
// output does not depend on scheduling.
std::vector<Column> evaluate_columns(
    const std::vector<double>& grid,
    const std::vector<std::pair<std::string, std::function<double(double)>>>& specs) {
  std::vector<std::future<std::vector<double>>> tasks;
  tasks.reserve(specs.size());
  for (const auto& spec : specs) {
    tasks.push_back(std::async(std::launch::async, [&grid, f = spec.second] {
      return sample(grid, f);
    }));
  }
  std::vector<Column> out;
  for (std::size_t i = 0; i < specs.size(); ++i) out.emplace_back(specs[i].first, tasks[i].get());
  return out;
}

std::string column_name(const std::string& base, double gamma) {
  return base + "[gamma=" + gamma_label(gamma) + "]";
}

Table family_table(const std::vector<double>& grid, Family family,
                   const std::vector<double>& gammas, Quantity q, const std::string& base) {
  std::vector<std::pair<std::string, std::function<double(double)>>> specs;
  for (double g : gammas) specs.emplace_back(column_name(base, g), quantity_fn(family, g, q));
  return {grid, evaluate_columns(grid, specs)};
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw CliError(kExitIoFailure, "cannot open '" + path.string() + "' for writing");
  f << contents;
  f.close();
  if (!f) throw CliError(kExitIoFailure, "failed writing '" + path.string() + "'");
}

void emit(const RunConfig& config, const std::string& contents, std::ostream& out) {
  if (config.output_path.empty()) {
    out << contents;
    out.flush();
    if (!out) throw CliError(kExitIoFailure, "failed writing to standard output");
  } else {
    write_file(config.output_path, contents);
  }
}

std::vector<double> as_vector(const auto& arr) { return {arr.begin(), arr.end()}; }

}  // namespace

Table eval_table(const RunConfig& config) {
  validate(config);
  const auto grid = linspace(config.pmin, config.pmax, config.n);
  std::vector<std::pair<std::string, std::function<double(double)>>> specs;
  for (double g : config.gamma_list) {
    for (Quantity q : config.quantities)
      specs.emplace_back(column_name(to_string(q), g), quantity_fn(config.family, g, q));
  }
  return {grid, evaluate_columns(grid, specs)};
}

std::vector<std::pair<std::string, Table>> figure_tables(const RunConfig& config) {
  validate(config);
  const auto grid = linspace(config.pmin, config.pmax, config.n);
  std::vector<std::pair<std::string, Table>> out;
  if (config.figure == "fig1") {
    const auto v = [](susy::Partner k) {
      return [k](double p) { return susy::potential(k, p); };
    };
    out.emplace_back("fig1_partner_potentials.csv",
                     Table{grid, evaluate_columns(grid, {{"V1", v(susy::Partner::V1)},
                                                         {"V2", v(susy::Partner::V2)}})});
  } else if (config.figure == "fig2") {
    const auto g1 = config.family1_gammas.value_or(as_vector(susy::kFamilyOneTestGammas));
    const auto g2 = config.family2_gammas.value_or(as_vector(susy::kFamilyTwoTestGammas));
    out.emplace_back("fig2_family1_W2g.csv", family_table(grid, Family::One, g1, Quantity::W, "W2g"));
    out.emplace_back("fig2_family1_V1g.csv", family_table(grid, Family::One, g1, Quantity::V, "V1g"));
    out.emplace_back("fig2_family1_psi0g_normalized.csv",
                     family_table(grid, Family::One, g1, Quantity::PsiNormalized, "psi0g"));
    out.emplace_back("fig2_family2_W1g.csv", family_table(grid, Family::Two, g2, Quantity::W, "W1g"));
    out.emplace_back("fig2_family2_V2g.csv", family_table(grid, Family::Two, g2, Quantity::V, "V2g"));
    out.emplace_back("fig2_family2_psi0tilde_normalized.csv",
                     family_table(grid, Family::Two, g2, Quantity::PsiNormalized, "psi0tilde"));
  } else {
    const double g = config.bending_gamma;
    out.emplace_back(
        "fig3_bending.csv",
        Table{grid, evaluate_columns(
                        grid, {{column_name("W1g", g), quantity_fn(Family::Two, g, Quantity::W)},
                               {"sqrt_p", [](double p) { return std::sqrt(p); }},
                               {"minus_sqrt_p", [](double p) { return -std::sqrt(p); }}})});
  }
  return out;
}

int cmd_eval(const RunConfig& config, std::ostream& out) {
  const Table table = eval_table(config);
  emit(config, config.output_format == OutputFormat::Csv ? format_csv(table) : format_json(table),
       out);
  return kExitOk;
}

int cmd_figure(const RunConfig& config, std::ostream& out) {
  const auto tables = figure_tables(config);
  const std::filesystem::path dir = config.output_path.empty() ? "." : config.output_path;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw CliError(kExitIoFailure, "cannot create '" + dir.string() + "': " + ec.message());
  for (const auto& [name, table] : tables) {
    write_file(dir / name, format_csv(table));
    out << (dir / name).string() << '\n';
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  validate(config);
  const auto suite = suites::parse_suite(config.suite);
  if (!suite) {
    throw CliError(kExitInvalidInput, "unknown suite '" + config.suite +
                                          "' (expected specfun, riccati, zeromode, intertwine, "
                                          "norm or all)");
  }
  const auto report = suites::run_suite(*suite, config.tol);
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json item;
    item["name"] = c.name;
    item["residual"] = c.residual;
    item["tolerance"] = c.tolerance;
    item["passed"] = c.passed;
    checks.push_back(std::move(item));
  }
  nlohmann::ordered_json doc;
  doc["suite"] = report.suite;
  doc["checks"] = std::move(checks);
  doc["passed"] = report.passed();
  emit(config, doc.dump(2) + "\n", out);
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_spectrum(const RunConfig& config, std::ostream& out) {
  validate(config);
  const double g = config.gamma_list[0];
  const double c = -1.0 / g;
  const auto V = oracle::cell_averaged(
      [g](double p) { return susy::potential_deformed(Family::One, g, p); }, config.h, config.P);
  const double e = oracle::lowest_eigenvalue(V, oracle::BoundarySpec::robin(c));
  nlohmann::ordered_json doc;
  doc["family"] = 1;
  doc["gamma"] = g;
  doc["h"] = config.h;
  doc["P"] = config.P;
  doc["boundary"] = {{"kind", "Robin"}, {"robin_coefficient", c}};
  doc["lowest_eigenvalue"] = e;
  emit(config, doc.dump(2) + "\n", out);
  return kExitOk;
}

}  // namespace darboux::cli
