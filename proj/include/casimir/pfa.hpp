#pragma once

#include <optional>
#include <string_view>

#include "casimir/lifshitz.hpp"

namespace casimir {

/// Post cap radius r0, outer step radius r1 and step height h, all in metres.
struct ReentrantGeometry {
  double r0 = 200e-6;
  double r1 = 300e-6;
  double h = 500e-6;

  /// Throws DomainError unless 0 < r0 <= r1 and h > 0.
  void validate() const;
};

enum class SpringFormula {
  full,               // cap plus both sidewall terms
  cap_only,           // pi r0^2 F'_PP(x)
  perfect_conductor,  // T = 0 closed form
};

const char* to_string(SpringFormula f);

struct SpringBreakdown {
  double cap = 0.0;              // pi r0^2 F'_PP(x)
  double sidewall_force = 0.0;   // 2 pi (r1 - r0)/h [r1 F_PP(x+h) - r0 F_PP(x)]
  double sidewall_energy = 0.0;  // 2 pi (r1 - r0)^2/h^2 [E_PP(x+h) - E_PP(x)]
};

struct SpringResult {
  double k_C = 0.0;              // N/m
  std::optional<double> force;   // N, when requested
  SpringBreakdown breakdown;
  SpringFormula provenance = SpringFormula::cap_only;
  double est_error = 0.0;        // N/m
  long n_evals = 0;
};

SpringResult spring_constant_cap_only(const LifshitzEngine& engine, const ReentrantGeometry& geom, double x);
SpringResult spring_constant_full(const LifshitzEngine& engine, const ReentrantGeometry& geom, double x);

SpringResult spring_constant_cap_only(const ReentrantGeometry& geom, const HalfSpacePair& pair, double x,
                                      double temperature, const EngineConfig& cfg = {});
SpringResult spring_constant_full(const ReentrantGeometry& geom, const HalfSpacePair& pair, double x,
                                  double temperature, const EngineConfig& cfg = {});

/// pi^3 hbar c r0^2 / (60 x^5): ideal conductors at zero temperature.
SpringResult spring_constant_perfect_conductor(const ReentrantGeometry& geom, double x);

/// pi r0^2 F_PP(x), in newtons (negative means attraction).
double casimir_force_cap_only(const LifshitzEngine& engine, const ReentrantGeometry& geom, double x);
double casimir_force_cap_only(const ReentrantGeometry& geom, const HalfSpacePair& pair, double x,
                              double temperature, const EngineConfig& cfg = {});

/// Zero-temperature perfect-conductor pressure -pi^2 hbar c / (240 a^4).
double ideal_pressure(double gap);
/// Its derivative pi^2 hbar c / (60 a^5).
double ideal_pressure_gradient(double gap);

/// Fundamental spring constant of the membrane resonator for the coatings
/// where it is known (Au: 572 N/m, Nb: 949 N/m).
std::optional<double> membrane_spring_constant(std::string_view coating);

}  // namespace casimir
