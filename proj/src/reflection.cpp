#include "casimir/reflection.hpp"

#include <cmath>
#include <limits>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {
namespace {

void check_arguments(double xi, double k_perp) {
  if (!(xi > 0.0)) throw DomainError("reflection: xi must be > 0 (use zero_frequency_limits for xi = 0)");
  if (!(k_perp > 0.0)) throw DomainError("reflection: k_perp must be > 0");
}

}  // namespace

SurfaceResponse surface_response(const MaterialModel& material, double xi) {
  if (!(xi > 0.0)) throw DomainError("surface_response: xi must be > 0");
  if (material.is_perfect_conductor()) return {SurfaceResponse::Kind::perfect_conductor, 0.0, 0.0};
  if (material.is_vacuum()) return {SurfaceResponse::Kind::vacuum, 1.0, 0.0};
  const auto& p = material.drude_params();
  const double c2 = constants::c * constants::c;
  const double contrast = p.omega_p * p.omega_p * xi / (xi + p.gamma) / c2;
  return {SurfaceResponse::Kind::dielectric, permittivity(material, xi), contrast};
}

WaveNumbers wave_numbers(const MaterialModel& material, double xi, double k_perp) {
  check_arguments(xi, k_perp);
  const double k0 = xi / constants::c;
  const double q = std::hypot(k0, k_perp);
  if (material.is_perfect_conductor()) {
    return {xi, k_perp, q, std::numeric_limits<double>::infinity()};
  }
  const auto response = surface_response(material, xi);
  return {xi, k_perp, q, std::sqrt(q * q + response.contrast)};
}

double fresnel_te(const MaterialModel& material, double xi, double k_perp) {
  check_arguments(xi, k_perp);
  return reflection_at(surface_response(material, xi), std::hypot(xi / constants::c, k_perp)).te;
}

double fresnel_tm(const MaterialModel& material, double xi, double k_perp) {
  check_arguments(xi, k_perp);
  return reflection_at(surface_response(material, xi), std::hypot(xi / constants::c, k_perp)).tm;
}

ReflectionPair zero_frequency_limits(const MaterialModel& material) {
  if (material.is_perfect_conductor()) return {-1.0, 1.0};
  if (material.is_vacuum()) return {0.0, 0.0};
  // eps xi^2 -> 0 so s -> k_perp (TE vanishes) while eps -> inf (TM -> 1).
  return {0.0, 1.0};
}

}  // namespace casimir
