#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/sweep.hpp"

namespace casimir {
namespace {

constexpr double kMicron = 1e-6;

const std::set<std::string, std::less<>> kKeys{
    "gap_min_um", "gap_max_um",    "n_points",    "spacing",          "coatings",
    "post_material", "temperature_K", "r0_um",    "r1_um",            "h_um",
    "formula",    "include_pc_curve", "quad_rel_tol", "matsubara_rel_tol", "l_max_cap",
    "workers"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& key, std::string_view value) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError("key '" + key + "': expected a number, got '" + std::string(value) + "'");
  }
  return out;
}

int to_int(const std::string& key, std::string_view value) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError("key '" + key + "': expected an integer, got '" + std::string(value) + "'");
  }
  return out;
}

bool to_bool(const std::string& key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw ConfigError("key '" + key + "': expected true or false, got '" + std::string(value) + "'");
}

std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> out;
  while (!value.empty()) {
    const auto comma = value.find(',');
    const auto item = trim(value.substr(0, comma));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return out;
}

MaterialModel resolve(const MaterialRegistry& registry, const std::string& key, const std::string& name) {
  try {
    return registry.resolve(name);
  } catch (const LookupError& e) {
    throw ConfigError("key '" + key + "': " + e.what());
  }
}

}  // namespace

SweepSpec parse_config(std::string_view text, std::span<const std::pair<std::string, std::string>> overrides) {
  std::map<std::string, std::string> values;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    values.insert_or_assign(std::string(key), std::string(trim(line.substr(eq + 1))));
  }
  for (const auto& [key, value] : overrides) values.insert_or_assign(std::string(trim(key)), std::string(trim(value)));

  SweepSpec spec;

  // custom materials first so coatings / post_material can refer to them
  std::map<std::string, std::pair<std::optional<double>, std::optional<double>>> custom;
  for (const auto& [key, value] : values) {
    if (!key.starts_with("material.")) continue;
    const auto rest = std::string_view(key).substr(9);
    const auto dot = rest.rfind('.');
    const auto name = dot == std::string_view::npos ? std::string_view{} : rest.substr(0, dot);
    const auto field = dot == std::string_view::npos ? rest : rest.substr(dot + 1);
    if (name.empty() || (field != "omega_eV" && field != "gamma_eV")) {
      throw ConfigError("unknown key '" + key + "'");
    }
    auto& entry = custom[std::string(name)];
    (field == "omega_eV" ? entry.first : entry.second) = to_double(key, value);
  }
  for (const auto& [name, params] : custom) {
    if (!params.first || !params.second) {
      throw ConfigError("custom material '" + name + "' needs both omega_eV and gamma_eV");
    }
    try {
      spec.materials.add_custom(MaterialModel::drude_ev(name, *params.first, *params.second));
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
  }

  for (const auto& [key, value] : values) {
    if (key.starts_with("material.")) continue;
    if (!kKeys.contains(key)) throw ConfigError("unknown key '" + key + "'");

    if (key == "gap_min_um") {
      spec.gap_min = to_double(key, value) * kMicron;
    } else if (key == "gap_max_um") {
      spec.gap_max = to_double(key, value) * kMicron;
    } else if (key == "n_points") {
      spec.n_points = to_int(key, value);
    } else if (key == "spacing") {
      if (value == "log") {
        spec.spacing = Spacing::log;
      } else if (value == "linear") {
        spec.spacing = Spacing::linear;
      } else {
        throw ConfigError("key 'spacing': expected log or linear, got '" + value + "'");
      }
    } else if (key == "coatings") {
      spec.coatings = split_list(value);
    } else if (key == "post_material") {
      spec.post_material = value;
    } else if (key == "temperature_K") {
      spec.temperature = to_double(key, value);
    } else if (key == "r0_um") {
      spec.geometry.r0 = to_double(key, value) * kMicron;
    } else if (key == "r1_um") {
      spec.geometry.r1 = to_double(key, value) * kMicron;
    } else if (key == "h_um") {
      spec.geometry.h = to_double(key, value) * kMicron;
    } else if (key == "formula") {
      if (value == "cap_only") {
        spec.formula = SpringFormula::cap_only;
      } else if (value == "full") {
        spec.formula = SpringFormula::full;
      } else {
        throw ConfigError("key 'formula': expected cap_only or full, got '" + value + "'");
      }
    } else if (key == "include_pc_curve") {
      spec.include_pc_curve = to_bool(key, value);
    } else if (key == "quad_rel_tol") {
      spec.engine.quad_rel_tol = to_double(key, value);
    } else if (key == "matsubara_rel_tol") {
      spec.engine.matsubara_rel_tol = to_double(key, value);
    } else if (key == "l_max_cap") {
      spec.engine.l_max_cap = to_int(key, value);
    } else if (key == "workers") {
      spec.workers = to_int(key, value);
    }
  }

  // canonical names ("au" -> "Au")
  for (auto& c : spec.coatings) c = resolve(spec.materials, "coatings", c).name();
  spec.post_material = resolve(spec.materials, "post_material", spec.post_material).name();

  spec.validate();
  return spec;
}

void SweepSpec::validate() const {
  if (!(gap_min > 0.0)) throw ConfigError("gap_min > 0 violated");
  if (!(gap_min < gap_max)) throw ConfigError("gap_min < gap_max violated");
  if (n_points < 2) throw ConfigError("n_points >= 2 violated");
  if (coatings.empty()) throw ConfigError("coatings nonempty violated");
  if (!(temperature > 0.0)) throw ConfigError("temperature_K > 0 violated");
  if (!(geometry.r0 > 0.0)) throw ConfigError("r0 > 0 violated");
  if (!(geometry.r1 >= geometry.r0)) throw ConfigError("r0 <= r1 violated");
  if (!(geometry.h > 0.0)) throw ConfigError("h > 0 violated");
  if (formula == SpringFormula::perfect_conductor) throw ConfigError("formula must be cap_only or full");
  if (workers < 0) throw ConfigError("workers >= 0 violated");
  engine.validate();
  for (const auto& c : coatings) {
    if (!materials.contains(c)) throw ConfigError("unknown coating material '" + c + "'");
  }
  if (!materials.contains(post_material)) {
    throw ConfigError("unknown post material '" + post_material + "'");
  }
}

}  // namespace casimir
