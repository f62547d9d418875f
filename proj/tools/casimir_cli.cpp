// casimir: thermal Casimir spring constant of a narrow-gap re-entrant cavity.
//
//   casimir materials
//   casimir sweep [config] [--set key=value]... [-o out.csv] [-j workers]
//   casimir point --gap-um X [config] [--set key=value]...
//   casimir validate [--tolerance T] [--json report.json]
//
// Exit codes: 0 success, 1 usage or configuration error, 2 numerical failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/log.hpp"
#include "casimir/materials.hpp"
#include "casimir/oracle.hpp"
#include "casimir/pfa.hpp"
#include "casimir/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw casimir::ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::pair<std::string, std::string>> parse_overrides(const std::vector<std::string>& sets) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw casimir::ConfigError("--set expects key=value, got '" + s + "'");
    out.emplace_back(s.substr(0, eq), s.substr(eq + 1));
  }
  return out;
}

casimir::SweepSpec load_spec(const std::string& config_path, const std::vector<std::string>& sets) {
  const std::string text = config_path.empty() ? std::string{} : read_file(config_path);
  const auto overrides = parse_overrides(sets);
  return casimir::parse_config(text, overrides);
}

int cmd_materials() {
  std::cout << std::left << std::setw(8) << "name" << std::setw(20) << "description" << std::setw(14)
            << "Omega[eV/hbar]" << std::setw(14) << "gamma[eV/hbar]" << "c/Omega[nm]\n";
  for (const auto& m : casimir::builtin_materials()) {
    std::cout << std::setw(8) << m.name << std::setw(20) << m.description;
    if (m.omega_p_ev > 0.0) {
      const auto model = casimir::builtin_material(m.name);
      std::cout << std::setw(14) << m.omega_p_ev << std::setw(14) << m.gamma_ev << std::fixed << std::setprecision(1)
                << casimir::penetration_depth(model) * 1e9 << std::defaultfloat << std::setprecision(6);
    } else {
      std::cout << std::setw(14) << "-" << std::setw(14) << "-" << "-";
    }
    std::cout << '\n';
  }
  return kExitOk;
}

int cmd_sweep(const std::string& config, const std::vector<std::string>& sets, const std::string& output,
              int workers) {
  auto spec = load_spec(config, sets);
  if (workers >= 0) spec.workers = workers;
  const auto result = casimir::run_sweep(spec);
  const std::string csv = casimir::emit_csv(result.rows);
  if (output.empty() || output == "-") {
    std::cout << csv;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw casimir::ConfigError("cannot write '" + output + "'");
    out << csv;
  }
  casimir::log::info(casimir::format_timing(result.timing));
  return result.any_failed() ? kExitNumerical : kExitOk;
}

int cmd_point(const std::string& config, const std::vector<std::string>& sets, double gap_um) {
  const auto spec = load_spec(config, sets);
  const double x = gap_um * 1e-6;
  const casimir::ThermalGap tg{x, spec.temperature};
  tg.validate();
  const auto post = spec.materials.resolve(spec.post_material);

  std::cout << std::setprecision(10);
  std::cout << "gap x                 " << gap_um << " um\n"
            << "temperature           " << spec.temperature << " K\n"
            << "thermal wavelength    " << casimir::thermal_wavelength(spec.temperature) * 1e6 << " um\n"
            << "dominant frequency    " << casimir::dominant_frequency(tg) << " rad/s ("
            << casimir::angular_frequency_to_ev(casimir::dominant_frequency(tg)) << " eV/hbar)\n"
            << "geometry r0,r1,h      " << spec.geometry.r0 * 1e6 << ", " << spec.geometry.r1 * 1e6 << ", "
            << spec.geometry.h * 1e6 << " um\n"
            << "k_C perfect conductor " << casimir::spring_constant_perfect_conductor(spec.geometry, x).k_C
            << " N/m\n";

  int status = kExitOk;
  for (const auto& name : spec.coatings) {
    const auto coating = spec.materials.resolve(name);
    std::cout << "\n[" << post.name() << " post / " << coating.name() << " membrane]\n";
    try {
      const casimir::LifshitzEngine engine({post, coating}, spec.temperature, spec.engine);
      const auto e = engine.energy_per_area(x);
      const auto f = engine.pressure(x);
      const auto g = engine.pressure_gradient(x);
      std::cout << "  E_PP      " << e.value << " J/m^2  (+/- " << e.est_error << ", " << e.n_matsubara
                << " Matsubara terms)\n"
                << "  F_PP      " << f.value << " N/m^2  (+/- " << f.est_error << ")\n"
                << "  F'_PP     " << g.value << " N/m^3  (+/- " << g.est_error << ")\n"
                << "  force     " << casimir::constants::pi * spec.geometry.r0 * spec.geometry.r0 * f.value
                << " N (cap)\n";
      const auto full = casimir::spring_constant_full(engine, spec.geometry, x);
      std::cout << "  k_C cap            " << full.breakdown.cap << " N/m\n"
                << "  k_C sidewall force " << full.breakdown.sidewall_force << " N/m\n"
                << "  k_C sidewall energy" << ' ' << full.breakdown.sidewall_energy << " N/m\n"
                << "  k_C full           " << full.k_C << " N/m\n";
      if (const auto ks = casimir::membrane_spring_constant(coating.name())) {
        std::cout << "  k_C / k_S          " << full.breakdown.cap / *ks << "  (k_S = " << *ks << " N/m)\n";
      }
    } catch (const casimir::ConvergenceError& err) {
      std::cout << "  FAILED: " << err.what() << '\n';
      status = kExitNumerical;
    }
  }
  return status;
}

int cmd_validate(double tolerance, const std::string& json_path) {
  const auto grid = casimir::oracle::default_validation_grid();
  const auto report = casimir::oracle::validate_engine(grid, tolerance);

  const casimir::HalfSpacePair pc{casimir::MaterialModel::perfect_conductor(),
                                  casimir::MaterialModel::perfect_conductor()};
  const std::vector<casimir::oracle::ValidationPoint> pc_points{{0.3e-6, 300.0, pc}};
  const auto pc_report = casimir::oracle::validate_engine(pc_points, 0.01);

  std::cout << "Engine vs brute-force reference and finite differences (Au-Al, 300 K)\n"
            << report.to_text() << "\nPerfect conductors vs ideal zero-temperature pressure\n"
            << pc_report.to_text();
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw casimir::ConfigError("cannot write '" + json_path + "'");
    out << "{\"drude_grid\": " << report.to_json() << ",\n\"perfect_conductor\": " << pc_report.to_json() << "}\n";
  }
  return report.passed && pc_report.passed ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal Casimir spring constant of a narrow-gap re-entrant cavity"};
  app.require_subcommand(1);

  auto* materials = app.add_subcommand("materials", "List built-in materials");

  std::string config;
  std::vector<std::string> sets;
  std::string output;
  int workers = -1;
  auto* sweep = app.add_subcommand("sweep", "Spring constant vs gap, written as CSV");
  sweep->add_option("config", config, "Config file (key = value)");
  sweep->add_option("--set", sets, "Override a config key (key=value); beats the file")->take_all();
  sweep->add_option("-o,--output", output, "CSV output path (default: stdout)");
  sweep->add_option("-j,--workers", workers, "Worker threads (0 = auto); beats config");

  double gap_um = 0.0;
  auto* point = app.add_subcommand("point", "Evaluate all quantities at one gap");
  point->add_option("--gap-um", gap_um, "Gap in micrometres")->required();
  point->add_option("config", config, "Config file (key = value)");
  point->add_option("--set", sets, "Override a config key (key=value)")->take_all();

  double tolerance = 1e-6;
  std::string json_path;
  auto* validate = app.add_subcommand("validate", "Check the engine against independent oracles");
  validate->add_option("--tolerance", tolerance, "Relative tolerance for the Drude grid");
  validate->add_option("--json", json_path, "Write the machine-readable report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*materials) return cmd_materials();
    if (*sweep) return cmd_sweep(config, sets, output, workers);
    if (*point) return cmd_point(config, sets, gap_um);
    if (*validate) return cmd_validate(tolerance, json_path);
  } catch (const casimir::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const casimir::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const casimir::ConvergenceError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
