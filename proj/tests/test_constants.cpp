#include <doctest.h>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "test_support.hpp"

using namespace casimir;
using casimir::test::rel_diff;

// Expected values from 30-digit mpmath evaluation of the CODATA-2018 constants.

TEST_CASE("hbar c matches the CODATA product") {
  CHECK(rel_diff(kCodata2018.hbar * kCodata2018.c, 3.16153e-26) < 1e-5);
  CHECK(constants::hbar_c == kCodata2018.hbar * kCodata2018.c);
}

TEST_CASE("ev_to_angular_frequency") {
  CHECK(ev_to_angular_frequency(0.0) == 0.0);
  CHECK(rel_diff(ev_to_angular_frequency(1.0), 1.5192674488095105e15) < 1e-14);
  CHECK(rel_diff(ev_to_angular_frequency(9.0), 1.3673407039285595e16) < 1e-14);
  CHECK_THROWS_AS(ev_to_angular_frequency(-1.0), DomainError);
  CHECK(rel_diff(angular_frequency_to_ev(ev_to_angular_frequency(0.035)), 0.035) < 1e-15);
}

TEST_CASE("matsubara_frequency") {
  CHECK(matsubara_frequency(0, 300.0) == 0.0);
  const double xi1 = matsubara_frequency(1, 300.0);
  CHECK(rel_diff(xi1, 2.4677902551530605e14) < 1e-14);
  CHECK(rel_diff(angular_frequency_to_ev(xi1), 0.16243290521934154) < 1e-13);
  CHECK(matsubara_frequency(10, 300.0) == 10.0 * xi1);
  CHECK_THROWS_AS(matsubara_frequency(1, 0.0), DomainError);
  CHECK_THROWS_AS(matsubara_frequency(1, -3.0), DomainError);
  CHECK_THROWS_AS(matsubara_frequency(-1, 300.0), DomainError);
}

TEST_CASE("matsubara_frequency is linear in l and increasing in l and T") {
  for (double T : {0.5, 4.0, 77.0, 300.0, 1234.5}) {
    const double xi1 = matsubara_frequency(1, T);
    double previous = -1.0;
    for (long l = 0; l < 500; ++l) {
      const double xi = matsubara_frequency(l, T);
      CHECK(xi == static_cast<double>(l) * xi1);
      CHECK(xi > previous);
      previous = xi;
    }
  }
  double previous = 0.0;
  for (double T = 0.1; T < 1000.0; T *= 1.37) {
    CHECK(matsubara_frequency(3, T) > previous);
    previous = matsubara_frequency(3, T);
  }
}

TEST_CASE("thermal_wavelength") {
  // hbar c / (k_B 300 K) = 7.63294839735893e-6 m
  CHECK(rel_diff(thermal_wavelength(300.0), 7.632948397358928e-6) < 1e-14);
  CHECK(thermal_wavelength(600.0) == 0.5 * thermal_wavelength(300.0));
  CHECK(thermal_wavelength(1e300) < 1e-290);
  CHECK_THROWS_AS(thermal_wavelength(0.0), DomainError);
}
