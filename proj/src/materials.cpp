#include "casimir/materials.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {
namespace {

constexpr std::array<BuiltinMaterial, 5> kBuiltins{{
    {"Au", "gold (Drude)", 9.0, 0.035},
    {"Nb", "niobium (Drude)", 9.9, 0.2},
    {"Al", "aluminum (Drude)", 13.0, 0.1},
    {"PC", "perfect conductor", 0.0, 0.0},
    {"vacuum", "empty half-space", 0.0, 0.0},
}};

bool iequals(std::string_view a, std::string_view b) {
  return std::ranges::equal(a, b, [](char x, char y) {
    return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
  });
}

std::string valid_names() {
  std::string out;
  for (const auto& m : kBuiltins) {
    if (!out.empty()) out += ", ";
    out += m.name;
  }
  return out;
}

}  // namespace

MaterialModel MaterialModel::drude(std::string name, DrudeParams params) {
  if (!(params.omega_p > 0.0) || !(params.gamma > 0.0)) {
    throw DomainError("Drude material '" + name + "': plasma and relaxation frequencies must be > 0");
  }
  return MaterialModel(std::move(name), params);
}

MaterialModel MaterialModel::drude_ev(std::string name, double omega_p_ev, double gamma_ev) {
  if (!(omega_p_ev > 0.0) || !(gamma_ev > 0.0)) {
    throw DomainError("Drude material '" + name + "': plasma and relaxation frequencies must be > 0");
  }
  return drude(std::move(name), {ev_to_angular_frequency(omega_p_ev), ev_to_angular_frequency(gamma_ev)});
}

MaterialModel MaterialModel::perfect_conductor(std::string name) {
  return MaterialModel(std::move(name), PerfectConductor{});
}

MaterialModel MaterialModel::vacuum(std::string name) { return MaterialModel(std::move(name), Vacuum{}); }

const DrudeParams& MaterialModel::drude_params() const {
  if (const auto* p = std::get_if<DrudeParams>(&model_)) return *p;
  throw UnsupportedModelError("material '" + name_ + "' is not a Drude metal");
}

std::span<const BuiltinMaterial> builtin_materials() { return kBuiltins; }

MaterialModel builtin_material(std::string_view name) {
  for (const auto& m : kBuiltins) {
    if (!iequals(m.name, name)) continue;
    if (m.name == "PC") return MaterialModel::perfect_conductor();
    if (m.name == "vacuum") return MaterialModel::vacuum();
    return MaterialModel::drude_ev(std::string(m.name), m.omega_p_ev, m.gamma_ev);
  }
  throw LookupError("unknown material '" + std::string(name) + "'; valid names: " + valid_names());
}

double permittivity(const MaterialModel& material, double xi) {
  if (!(xi > 0.0)) {
    throw DomainError("permittivity: imaginary frequency must be > 0");
  }
  if (material.is_vacuum()) return 1.0;
  const auto& p = material.drude_params();  // throws for perfect conductors
  return 1.0 + p.omega_p * p.omega_p / (xi * (xi + p.gamma));
}

double penetration_depth(const MaterialModel& material) {
  return constants::c / material.drude_params().omega_p;
}

void MaterialRegistry::add_custom(const MaterialModel& material) {
  for (const auto& m : kBuiltins) {
    if (iequals(m.name, material.name())) {
      throw ConfigError("custom material '" + material.name() + "' shadows a built-in material");
    }
  }
  custom_.insert_or_assign(material.name(), material);
}

MaterialModel MaterialRegistry::resolve(std::string_view name) const {
  if (auto it = custom_.find(std::string(name)); it != custom_.end()) return it->second;
  try {
    return builtin_material(name);
  } catch (const LookupError&) {
    if (custom_.empty()) throw;
    std::string names;
    for (const auto& [n, m] : custom_) names += ", " + n;
    throw LookupError("unknown material '" + std::string(name) + "'; valid names: " + valid_names() + names);
  }
}

bool MaterialRegistry::contains(std::string_view name) const {
  if (custom_.contains(std::string(name))) return true;
  return std::ranges::any_of(kBuiltins, [&](const auto& m) { return iequals(m.name, name); });
}

}  // namespace casimir
