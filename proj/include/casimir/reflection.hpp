#pragma once

#include <cmath>

#include "casimir/materials.hpp"

namespace casimir {

/// Axial and in-plane momenta at one imaginary frequency, all in 1/m.
struct WaveNumbers {
  double xi;      // rad/s
  double k_perp;  // in-plane momentum
  double q;       // vacuum axial momentum sqrt(xi^2/c^2 + k_perp^2)
  double s;       // medium axial momentum sqrt(eps xi^2/c^2 + k_perp^2)
};

struct ReflectionPair {
  double te;
  double tm;
};

/// Requires xi > 0 and k_perp > 0. For perfect conductors s is reported as +inf.
WaveNumbers wave_numbers(const MaterialModel& material, double xi, double k_perp);

/// r_TE = (q - s)/(q + s) for a vacuum / half-space interface; -1 for a
/// perfect conductor. Throws DomainError when xi <= 0 or k_perp <= 0.
double fresnel_te(const MaterialModel& material, double xi, double k_perp);

/// r_TM = (eps q - s)/(eps q + s); +1 for a perfect conductor.
double fresnel_tm(const MaterialModel& material, double xi, double k_perp);

/// xi -> 0+ limits: Drude (0, 1), perfect conductor (-1, 1), vacuum (0, 0).
ReflectionPair zero_frequency_limits(const MaterialModel& material);

/// Response of one surface at a fixed xi > 0, independent of k_perp.
///
/// `contrast` is (eps - 1) xi^2 / c^2 so that s^2 = q^2 + contrast. For Drude
/// metals it is formed as omega_p^2 xi / (xi + gamma) / c^2, which stays
/// finite where eps itself blows up.
struct SurfaceResponse {
  enum class Kind { dielectric, perfect_conductor, vacuum };

  Kind kind = Kind::vacuum;
  double eps = 1.0;
  double contrast = 0.0;

  /// Same response with q measured in units of 1/length (contrast * length^2).
  SurfaceResponse scaled(double length) const {
    return {kind, eps, contrast * length * length};
  }
};

SurfaceResponse surface_response(const MaterialModel& material, double xi);

/// Reflection coefficients at vacuum axial momentum q, in whatever units
/// `response.contrast` carries (1/m^2 by default, or dimensionless after
/// `scaled`). q must be >= sqrt(xi^2/c^2) in those units.
inline ReflectionPair reflection_at(const SurfaceResponse& response, double q) {
  switch (response.kind) {
    case SurfaceResponse::Kind::vacuum:
      return {0.0, 0.0};
    case SurfaceResponse::Kind::perfect_conductor:
      return {-1.0, 1.0};
    case SurfaceResponse::Kind::dielectric:
      break;
  }
  const double eps = response.eps;
  const double s = std::sqrt(q * q + response.contrast);
  const double sum_te = q + s;
  // (q - s)/(q + s) rewritten as -(s^2 - q^2)/(q + s)^2
  const double te = -response.contrast / (sum_te * sum_te);
  double tm;
  if (eps < 2.0) {
    // eps^2 q^2 - s^2 = (eps^2 - 1) q^2 - contrast
    const double sum_tm = eps * q + s;
    tm = ((eps - 1.0) * (eps + 1.0) * q * q - response.contrast) / (sum_tm * sum_tm);
  } else {
    const double s_over_eps = s / eps;
    tm = (q - s_over_eps) / (q + s_over_eps);
  }
  return {te, tm};
}

}  // namespace casimir
