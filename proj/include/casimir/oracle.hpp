#pragma once

// Slow reference evaluations used to check the adaptive engine. Nothing here
// shares integration code with LifshitzEngine.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "casimir/lifshitz.hpp"

namespace casimir::oracle {

/// Brute-force Lifshitz energy per area: composite 8-point Gauss-Legendre on
/// y in [2 a xi_l / c, 60] with a fixed number of uniform panels, and a hard
/// Matsubara cutoff at xi_l > 50 c / (2a). Reflection coefficients come from
/// the public fresnel_te / fresnel_tm in physical units.
double reference_energy_per_area(const HalfSpacePair& pair, const ThermalGap& tg, int panels = 20000);

/// One weighted Matsubara term of the brute-force sum.
double reference_energy_term(const HalfSpacePair& pair, const ThermalGap& tg, int l, int panels = 20000);

/// -k_B T zeta(3) / (16 pi a^2): the static term of two Drude metals.
double zero_mode_energy(const ThermalGap& tg);

/// Central difference (f(a + d) - f(a - d)) / (2 d) with d = step_frac * a.
template <class F>
double finite_difference(F&& f, double a, double step_frac) {
  const double d = step_frac * a;
  return (f(a + d) - f(a - d)) / (2.0 * d);
}

/// |a - b| / max(|a|, |b|), and 0 when both vanish.
double relative_deviation(double a, double b);

struct ValidationPoint {
  double gap;
  double temperature;
  HalfSpacePair pair;
};

struct PointReport {
  ValidationPoint point;
  double energy = 0.0;
  double energy_reference = 0.0;
  double energy_deviation = 0.0;
  double pressure = 0.0;
  double pressure_fd = 0.0;  // -dE/da by central differences
  double pressure_deviation = 0.0;
  double gradient = 0.0;
  double gradient_fd = 0.0;  // dF/da by central differences
  double gradient_deviation = 0.0;
  std::optional<double> ideal_pressure_deviation;  // perfect-conductor pairs only
  double max_deviation = 0.0;
  std::string failure;  // non-empty when the engine threw
};

struct ValidationReport {
  std::vector<PointReport> points;
  double tolerance = 0.0;
  double max_deviation = 0.0;
  bool passed = false;

  std::string to_text() const;
  std::string to_json() const;
};

/// x in {0.59, 1, 1.7, 2.5, 3.3} um, Au coating on an Al post, 300 K.
std::vector<ValidationPoint> default_validation_grid();

/// Engine vs reference energy, pressure vs -dE/da, gradient vs dF/da, and for
/// perfect-conductor pairs the pressure vs -pi^2 hbar c / (240 a^4). Passes iff
/// every deviation is below `tolerance`. Points are evaluated in input order.
ValidationReport validate_engine(std::span<const ValidationPoint> points, double tolerance,
                                 const EngineConfig& cfg = {}, double step_frac = 1e-4);

}  // namespace casimir::oracle
