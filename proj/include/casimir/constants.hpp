#pragma once

#include <numbers>

namespace casimir {

// CODATA-2018 exact values, SI units.
struct PhysicalConstants {
  double hbar;  // J s
  double c;     // m / s
  double k_B;   // J / K
  double eV;    // J
};

inline constexpr PhysicalConstants kCodata2018{
    .hbar = 1.054571817e-34,
    .c = 299792458.0,
    .k_B = 1.380649e-23,
    .eV = 1.602176634e-19,
};

namespace constants {
inline constexpr double hbar = kCodata2018.hbar;
inline constexpr double c = kCodata2018.c;
inline constexpr double k_B = kCodata2018.k_B;
inline constexpr double eV = kCodata2018.eV;
inline constexpr double hbar_c = hbar * c;
inline constexpr double pi = std::numbers::pi;
}  // namespace constants

/// Energy in eV to angular frequency e/hbar in rad/s. Throws DomainError for
/// negative input.
double ev_to_angular_frequency(double energy_ev);

/// Inverse of ev_to_angular_frequency, for output formatting.
double angular_frequency_to_ev(double omega);

/// Imaginary Matsubara frequency xi_l = 2 pi l k_B T / hbar.
///
/// Computed as l * xi_1 so that xi_l is exactly l times the l = 1 value.
double matsubara_frequency(long l, double temperature);

/// hbar c / (k_B T), the length scale separating the quantum and classical
/// regimes of the thermal Casimir interaction.
double thermal_wavelength(double temperature);

}  // namespace casimir
