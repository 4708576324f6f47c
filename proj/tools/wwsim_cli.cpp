// wwsim: two-slit which-way simulator front end.
//
//   wwsim simulate --config <path> [--out-dir <dir>]
//   wwsim sweep    --config <path> --param <name> --values <csv-list>
//   wwsim check    --config <path>
//   wwsim mzi      --mode <open|blocked|marker|knockout|asymmetric> [--a <v> --b <v>]
//
// Exit codes: 0 success, 1 config error, 2 numerical non-convergence, 3 I/O error.

#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <json.hpp>
#include <numbers>

#include "wwsim/errors.hpp"
#include "wwsim/mzi.hpp"
#include "wwsim/scenario.hpp"

namespace {

enum ExitCode { kOk = 0, kConfigError = 1, kConvergenceError = 2, kIoError = 3 };

std::vector<std::string> split_values(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void print_simulation(const wwsim::ComparisonReport& report, const std::filesystem::path& dir) {
  for (const auto& s : report.patterns) {
    std::cout << s.model << ": V_fringe=" << s.visibility_fringe_local
              << " V_global=" << s.visibility_global << " P=" << s.duality.which_way_value
              << " P^2+V^2=" << s.duality.duality_sum << '\n';
  }
  for (const auto& d : report.divergences) {
    std::cout << d.a << " vs " << d.b << ": sup_relative=" << d.divergence.sup_relative
              << " visibility_gap=" << d.divergence.visibility_gap << '\n';
  }
  for (const auto& m : report.feasibility.messages) std::cout << "warning: " << m << '\n';
  std::cout << "summary: " << (dir / (report.config.name + "_summary.json")).string() << '\n';
}

int run_mzi(const std::string& mode, double a, double b) {
  nlohmann::json j;
  j["mode"] = mode;
  j["a"] = a;
  j["b"] = b;
  wwsim::DualityReport r{};
  if (mode == "asymmetric") {
    r = wwsim::asymmetric_duality(a, b);
    j["rate_factor"] = 1.0;
    j["swept_visibility"] =
        wwsim::swept_visibility({a / std::hypot(a, b), b / std::hypot(a, b), 0.0, wwsim::MziMode::Open});
  } else {
    const auto m = wwsim::mzi_mode_from_string(mode);
    if (!m) throw wwsim::ConfigError("unknown MZI mode '" + mode + "'");
    const wwsim::MziConfig cfg{a, b, 0.0, *m};
    r = wwsim::mzi_duality(cfg);
    j["rate_factor"] = wwsim::detected_rate(cfg);
    j["swept_visibility"] = wwsim::swept_visibility(cfg);
  }
  j["which_way_kind"] = std::string(wwsim::to_string(r.which_way_kind));
  j["which_way_value"] = r.which_way_value;
  j["visibility"] = r.visibility;
  j["duality_sum"] = r.duality_sum;
  j["inequality_satisfied"] = r.inequality_satisfied;
  j["assumptions"] = "single particles; perfect coherence between arms";
  std::cout << j.dump(2) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-slit which-way simulator: particle/empty-wave model vs Fraunhofer diffraction"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(wwsim::kToolVersion));

  std::string config_path;
  std::string out_dir;
  auto* simulate = app.add_subcommand("simulate", "Run a scenario and write CSV patterns + JSON summary");
  simulate->add_option("--config", config_path, "Scenario config file")->required();
  simulate->add_option("--out-dir", out_dir, "Output directory (overrides output_dir)");

  std::string param;
  std::string values;
  auto* sweep = app.add_subcommand("sweep", "Sweep one parameter and print a CSV summary table");
  sweep->add_option("--config", config_path, "Scenario config file")->required();
  sweep->add_option("--param", param, "theta, spot_width, d, s, D or wavelength")->required();
  sweep->add_option("--values", values, "Comma-separated values with units")->required();

  auto* check = app.add_subcommand("check", "Feasibility report for a scenario");
  check->add_option("--config", config_path, "Scenario config file")->required();

  std::string mode;
  double a = std::numbers::sqrt2 / 2.0;
  double b = std::numbers::sqrt2 / 2.0;
  auto* mzi = app.add_subcommand("mzi", "Mach-Zehnder duality for a named configuration");
  mzi->add_option("--mode", mode, "open, blocked, marker, knockout or asymmetric")->required();
  mzi->add_option("--a", a, "Arm A amplitude");
  mzi->add_option("--b", b, "Arm B amplitude");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*simulate) {
      const wwsim::ScenarioConfig cfg = wwsim::load_config(config_path);
      const std::filesystem::path dir = out_dir.empty() ? cfg.output_dir : std::filesystem::path(out_dir);
      print_simulation(wwsim::run_scenario(cfg, dir), dir);
    } else if (*sweep) {
      const wwsim::ScenarioConfig cfg = wwsim::load_config(config_path);
      std::cout << wwsim::sweep_csv(wwsim::sweep(cfg, param, split_values(values)));
    } else if (*check) {
      std::cout << wwsim::feasibility_json(wwsim::load_config(config_path));
    } else if (*mzi) {
      return run_mzi(mode, a, b);
    }
  } catch (const wwsim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const wwsim::DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const wwsim::ConvergenceError& e) {
    std::cerr << "numerical error: " << e.what() << " (last estimates " << e.previous_estimate()
              << ", " << e.last_estimate() << ")\n";
    return kConvergenceError;
  } catch (const wwsim::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIoError;
  }
  return kOk;
}
