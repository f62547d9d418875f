#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>

namespace casimir {

/// Drude parameters in rad/s.
struct DrudeParams {
  double omega_p;  // plasma frequency
  double gamma;    // relaxation frequency
};

struct PerfectConductor {};
struct Vacuum {};

/// A half-space material evaluated on the imaginary frequency axis.
///
/// Immutable once constructed. A plasma-model metal (no dissipation) can be
/// emulated with a very small gamma.
class MaterialModel {
 public:
  using Model = std::variant<DrudeParams, PerfectConductor, Vacuum>;

  /// Throws DomainError unless omega_p > 0 and gamma > 0.
  static MaterialModel drude(std::string name, DrudeParams params);
  /// Same, with parameters given in eV/hbar.
  static MaterialModel drude_ev(std::string name, double omega_p_ev, double gamma_ev);
  static MaterialModel perfect_conductor(std::string name = "PC");
  static MaterialModel vacuum(std::string name = "vacuum");

  const std::string& name() const { return name_; }
  const Model& model() const { return model_; }

  bool is_drude() const { return std::holds_alternative<DrudeParams>(model_); }
  bool is_perfect_conductor() const { return std::holds_alternative<PerfectConductor>(model_); }
  bool is_vacuum() const { return std::holds_alternative<Vacuum>(model_); }

  /// Throws UnsupportedModelError when the model is not Drude.
  const DrudeParams& drude_params() const;

 private:
  MaterialModel(std::string name, Model model) : name_(std::move(name)), model_(model) {}

  std::string name_;
  Model model_;
};

struct BuiltinMaterial {
  std::string_view name;
  std::string_view description;
  double omega_p_ev;  // 0 for non-Drude entries
  double gamma_ev;
};

/// Built-in table: Au, Nb, Al Drude parameters plus PC and vacuum.
std::span<const BuiltinMaterial> builtin_materials();

/// Case-insensitive lookup of a built-in material. Throws LookupError listing
/// the valid names when not found.
MaterialModel builtin_material(std::string_view name);

/// epsilon(i xi) = 1 + omega_p^2 / (xi (xi + gamma)) for Drude, 1 for vacuum.
///
/// xi must be strictly positive; the static limit belongs to the reflection
/// layer. Perfect conductors throw UnsupportedModelError.
double permittivity(const MaterialModel& material, double xi);

/// Plasma penetration depth c / omega_p in metres (Drude only).
double penetration_depth(const MaterialModel& material);

/// Built-ins plus user-defined Drude materials, resolved by name.
class MaterialRegistry {
 public:
  /// Adds or replaces a custom Drude material. Built-in names cannot be
  /// shadowed.
  void add_custom(const MaterialModel& material);
  MaterialModel resolve(std::string_view name) const;
  bool contains(std::string_view name) const;
  const std::map<std::string, MaterialModel>& custom() const { return custom_; }

 private:
  std::map<std::string, MaterialModel> custom_;
};

}  // namespace casimir
