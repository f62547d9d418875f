#include "casimir/constants.hpp"

#include <string>

#include "casimir/errors.hpp"

namespace casimir {

double ev_to_angular_frequency(double energy_ev) {
  if (!(energy_ev >= 0.0)) {
    throw DomainError("ev_to_angular_frequency: energy must be >= 0, got " + std::to_string(energy_ev));
  }
  return energy_ev * constants::eV / constants::hbar;
}

double angular_frequency_to_ev(double omega) { return omega * constants::hbar / constants::eV; }

double matsubara_frequency(long l, double temperature) {
  if (!(temperature > 0.0)) {
    throw DomainError("matsubara_frequency: temperature must be > 0");
  }
  if (l < 0) {
    throw DomainError("matsubara_frequency: index must be >= 0");
  }
  const double first = 2.0 * constants::pi * constants::k_B * temperature / constants::hbar;
  return static_cast<double>(l) * first;
}

double thermal_wavelength(double temperature) {
  if (!(temperature > 0.0)) {
    throw DomainError("thermal_wavelength: temperature must be > 0");
  }
  return constants::hbar_c / (constants::k_B * temperature);
}

}  // namespace casimir
