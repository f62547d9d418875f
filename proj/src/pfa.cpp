#include "casimir/pfa.hpp"

#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {
namespace {

void check_gap(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("gap x must be > 0");
}

}  // namespace

void ReentrantGeometry::validate() const {
  if (!(r0 > 0.0)) throw DomainError("geometry: r0 must be > 0");
  if (!(r1 >= r0)) throw DomainError("geometry: r1 must be >= r0");
  if (!(h > 0.0)) throw DomainError("geometry: h must be > 0");
}

const char* to_string(SpringFormula f) {
  switch (f) {
    case SpringFormula::full:
      return "full";
    case SpringFormula::cap_only:
      return "cap_only";
    case SpringFormula::perfect_conductor:
      return "perfect_conductor";
  }
  return "?";
}

SpringResult spring_constant_cap_only(const LifshitzEngine& engine, const ReentrantGeometry& geom, double x) {
  geom.validate();
  check_gap(x);
  const double area = constants::pi * geom.r0 * geom.r0;
  const LifshitzResult g = engine.pressure_gradient(x);
  SpringResult out;
  out.breakdown.cap = area * g.value;
  out.k_C = out.breakdown.cap;
  out.provenance = SpringFormula::cap_only;
  out.est_error = area * g.est_error;
  out.n_evals = g.n_evals;
  return out;
}

SpringResult spring_constant_full(const LifshitzEngine& engine, const ReentrantGeometry& geom, double x) {
  SpringResult out = spring_constant_cap_only(engine, geom, x);
  out.provenance = SpringFormula::full;
  const double width = geom.r1 - geom.r0;
  if (width > 0.0) {
    const LifshitzResult f_near = engine.pressure(x);
    const LifshitzResult f_far = engine.pressure(x + geom.h);
    const LifshitzResult e_near = engine.energy_per_area(x);
    const LifshitzResult e_far = engine.energy_per_area(x + geom.h);

    const double force_factor = 2.0 * constants::pi * width / geom.h;
    const double energy_factor = 2.0 * constants::pi * width * width / (geom.h * geom.h);
    out.breakdown.sidewall_force = force_factor * (geom.r1 * f_far.value - geom.r0 * f_near.value);
    out.breakdown.sidewall_energy = energy_factor * (e_far.value - e_near.value);
    out.est_error += force_factor * (geom.r1 * f_far.est_error + geom.r0 * f_near.est_error) +
                     energy_factor * (e_far.est_error + e_near.est_error);
    out.n_evals += f_near.n_evals + f_far.n_evals + e_near.n_evals + e_far.n_evals;
  }
  out.k_C = out.breakdown.cap + out.breakdown.sidewall_force + out.breakdown.sidewall_energy;
  return out;
}

SpringResult spring_constant_cap_only(const ReentrantGeometry& geom, const HalfSpacePair& pair, double x,
                                      double temperature, const EngineConfig& cfg) {
  return spring_constant_cap_only(LifshitzEngine(pair, temperature, cfg), geom, x);
}

SpringResult spring_constant_full(const ReentrantGeometry& geom, const HalfSpacePair& pair, double x,
                                  double temperature, const EngineConfig& cfg) {
  return spring_constant_full(LifshitzEngine(pair, temperature, cfg), geom, x);
}

SpringResult spring_constant_perfect_conductor(const ReentrantGeometry& geom, double x) {
  check_gap(x);
  if (!(geom.r0 >= 0.0)) throw DomainError("geometry: r0 must be >= 0");
  constexpr double pi = constants::pi;
  const double x5 = x * x * x * x * x;
  SpringResult out;
  out.k_C = pi * pi * pi * constants::hbar_c * geom.r0 * geom.r0 / (60.0 * x5);
  out.breakdown.cap = out.k_C;
  out.provenance = SpringFormula::perfect_conductor;
  return out;
}

double casimir_force_cap_only(const LifshitzEngine& engine, const ReentrantGeometry& geom, double x) {
  geom.validate();
  check_gap(x);
  return constants::pi * geom.r0 * geom.r0 * engine.pressure(x).value;
}

double casimir_force_cap_only(const ReentrantGeometry& geom, const HalfSpacePair& pair, double x,
                              double temperature, const EngineConfig& cfg) {
  return casimir_force_cap_only(LifshitzEngine(pair, temperature, cfg), geom, x);
}

double ideal_pressure(double gap) {
  check_gap(gap);
  const double a2 = gap * gap;
  return -constants::pi * constants::pi * constants::hbar_c / (240.0 * a2 * a2);
}

double ideal_pressure_gradient(double gap) {
  check_gap(gap);
  const double a2 = gap * gap;
  return constants::pi * constants::pi * constants::hbar_c / (60.0 * a2 * a2 * gap);
}

std::optional<double> membrane_spring_constant(std::string_view coating) {
  if (coating == "Au") return 572.0;
  if (coating == "Nb") return 949.0;
  return std::nullopt;
}

}  // namespace casimir
