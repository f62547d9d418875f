#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/materials.hpp"
#include "casimir/reflection.hpp"

namespace casimir {

/// The two facing half-spaces: side 1 is the post, side 2 the membrane coating.
struct HalfSpacePair {
  MaterialModel side_1;
  MaterialModel side_2;
};

/// Evaluation point of the Lifshitz formula.
struct ThermalGap {
  double gap;          // m
  double temperature;  // K

  void validate() const;
};

struct EngineConfig {
  double quad_rel_tol = 1e-9;
  double matsubara_rel_tol = 1e-10;
  int l_max_cap = 2000;
  int quad_max_subdivisions = 200;

  /// Throws ConfigError unless tolerances lie in (0, 1) and caps are >= 1.
  void validate() const;
};

struct LifshitzResult {
  double value = 0.0;      // J/m^2, N/m^2 or N/m^3 depending on the quantity
  double est_error = 0.0;  // Matsubara tail bound + quadrature estimates
  int n_matsubara = 0;
  long n_evals = 0;
};

/// Plane-parallel quantity computed by the engine.
enum class Quantity {
  energy,    // E_PP(a), J/m^2
  pressure,  // F_PP(a) = -dE/da, N/m^2
  gradient,  // F'_PP(a), N/m^3
};

const char* to_string(Quantity q);

/// Raised when the Matsubara sum hits l_max_cap or a quadrature runs out of
/// subdivisions. Carries what was accumulated so far.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, LifshitzResult partial)
      : std::runtime_error(what), partial_(partial) {}
  const LifshitzResult& partial() const { return partial_; }

 private:
  LifshitzResult partial_;
};

/// Surface responses of one material at xi_0 ... xi_lmax for a fixed
/// temperature. Filled once in the constructor and read-only afterwards, so a
/// table can be shared between threads.
class MatsubaraTable {
 public:
  MatsubaraTable(const MaterialModel& material, double temperature, int l_max);

  int l_max() const { return static_cast<int>(responses_.size()) - 1; }
  /// Response at xi_l for l >= 1.
  const SurfaceResponse& response(int l) const { return responses_.at(static_cast<std::size_t>(l)); }
  const ReflectionPair& static_limit() const { return static_limit_; }

 private:
  std::vector<SurfaceResponse> responses_;  // index 0 unused
  ReflectionPair static_limit_;
};

/// Finite-temperature Lifshitz energy, pressure and pressure gradient between
/// two half-spaces.
///
/// Every Matsubara term is integrated over the vacuum axial momentum q in the
/// dimensionless variable y = 2 a q, with
///   energy:   (k_B T / 2 pi) / (2a)^2 * int y      sum_a log(1 - u_a) dy
///   pressure: -(k_B T / pi)  / (2a)^3 * int y^2    sum_a u_a / (1 - u_a) dy
///   gradient: (2 k_B T / pi) / (2a)^4 * int y^3    sum_a u_a / (1 - u_a)^2 dy
/// where u_a = r1_a r2_a e^{-y} and y runs from 2 a xi_l / c. The l = 0 term
/// uses the static reflection limits and weight one half.
///
/// The permittivity tables depend on temperature only; one engine serves any
/// number of gaps and is safe for concurrent const use.
class LifshitzEngine {
 public:
  LifshitzEngine(HalfSpacePair pair, double temperature, EngineConfig config = {});

  LifshitzResult evaluate(Quantity quantity, double gap) const;
  LifshitzResult energy_per_area(double gap) const { return evaluate(Quantity::energy, gap); }
  LifshitzResult pressure(double gap) const { return evaluate(Quantity::pressure, gap); }
  LifshitzResult pressure_gradient(double gap) const { return evaluate(Quantity::gradient, gap); }

  /// Single weighted Matsubara contribution (half weight at l = 0).
  LifshitzResult term(Quantity quantity, double gap, int l) const;

  const HalfSpacePair& pair() const { return pair_; }
  double temperature() const { return temperature_; }
  const EngineConfig& config() const { return config_; }

 private:
  bool reflectionless() const;
  double prefactor(Quantity quantity, double gap) const;
  double truncation_bound(Quantity quantity, double gap, int last_l) const;

  HalfSpacePair pair_;
  double temperature_;
  EngineConfig config_;
  MatsubaraTable table_1_;
  MatsubaraTable table_2_;
};

LifshitzResult energy_per_area(const HalfSpacePair& pair, const ThermalGap& tg, const EngineConfig& cfg = {});
LifshitzResult pressure(const HalfSpacePair& pair, const ThermalGap& tg, const EngineConfig& cfg = {});
LifshitzResult pressure_gradient(const HalfSpacePair& pair, const ThermalGap& tg, const EngineConfig& cfg = {});

/// Weighted contribution of Matsubara index l to the chosen quantity.
double matsubara_term(const HalfSpacePair& pair, const ThermalGap& tg, int l, const EngineConfig& cfg,
                      Quantity kind);

/// c / (2a): the imaginary frequency around which the relevant Matsubara
/// modes cluster.
double dominant_frequency(const ThermalGap& tg);

}  // namespace casimir
