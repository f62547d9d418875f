#include <doctest.h>

#include <cmath>
#include <random>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/reflection.hpp"
#include "test_support.hpp"

using namespace casimir;
using casimir::test::rel_diff;

namespace {

// Textbook forms with eps and s formed directly, used away from the
// cancellation regions.
ReflectionPair naive(const MaterialModel& m, double xi, double k_perp) {
  const double eps = permittivity(m, xi);
  const double k0 = xi / constants::c;
  const double q = std::sqrt(k0 * k0 + k_perp * k_perp);
  const double s = std::sqrt(eps * k0 * k0 + k_perp * k_perp);
  return {(q - s) / (q + s), (eps * q - s) / (eps * q + s)};
}

}  // namespace

TEST_CASE("vacuum and perfect conductor coefficients") {
  const auto vac = MaterialModel::vacuum();
  const auto pc = MaterialModel::perfect_conductor();
  for (double xi : {1e10, 1e14, 1e17}) {
    for (double k : {1.0, 1e6, 1e9}) {
      CHECK(fresnel_te(vac, xi, k) == 0.0);
      CHECK(fresnel_tm(vac, xi, k) == 0.0);
      CHECK(fresnel_te(pc, xi, k) == -1.0);
      CHECK(fresnel_tm(pc, xi, k) == 1.0);
    }
  }
}

TEST_CASE("gold at xi = 1 eV/hbar and k_perp = xi/c") {
  // 30-digit evaluation with eps = 79.2609, s / (xi/c) = sqrt(eps + 1)
  const auto au = builtin_material("Au");
  const double xi = ev_to_angular_frequency(1.0);
  const double k = xi / constants::c;
  CHECK(rel_diff(fresnel_te(au, xi, k), -0.7273294440865024) < 1e-13);
  CHECK(rel_diff(fresnel_tm(au, xi, k), 0.8519818960397094) < 1e-13);
}

TEST_CASE("argument checks") {
  const auto au = builtin_material("Au");
  CHECK_THROWS_AS(fresnel_te(au, 1e14, 0.0), DomainError);
  CHECK_THROWS_AS(fresnel_tm(au, 1e14, -1.0), DomainError);
  CHECK_THROWS_AS(fresnel_te(au, 0.0, 1e6), DomainError);
}

TEST_CASE("zero-frequency limits") {
  CHECK(zero_frequency_limits(builtin_material("Au")).te == 0.0);
  CHECK(zero_frequency_limits(builtin_material("Au")).tm == 1.0);
  CHECK(zero_frequency_limits(MaterialModel::drude_ev("x", 0.3, 2.0)).tm == 1.0);
  CHECK(zero_frequency_limits(MaterialModel::perfect_conductor()).te == -1.0);
  CHECK(zero_frequency_limits(MaterialModel::perfect_conductor()).tm == 1.0);
  CHECK(zero_frequency_limits(MaterialModel::vacuum()).te == 0.0);
  CHECK(zero_frequency_limits(MaterialModel::vacuum()).tm == 0.0);

  for (const char* name : {"Au", "Nb", "Al"}) {
    const auto m = builtin_material(name);
    const double xi = 1e-6 * m.drude_params().gamma;
    CHECK(std::abs(fresnel_te(m, xi, 1e9) - 0.0) < 1e-3);
    CHECK(std::abs(fresnel_tm(m, xi, 1e6) - 1.0) < 1e-3);
  }
}

TEST_CASE("wave number invariants") {
  const auto au = builtin_material("Au");
  for (double xi : {1e12, 1e14, 1e16}) {
    for (double k : {1e2, 1e6, 1e8}) {
      const auto w = wave_numbers(au, xi, k);
      CHECK(w.q >= w.k_perp);
      CHECK(w.q >= xi / constants::c);
      CHECK(w.s > w.q);
    }
  }
  CHECK(std::isinf(wave_numbers(MaterialModel::perfect_conductor(), 1e14, 1e6).s));
}

TEST_CASE("Drude coefficients stay inside (-1, 0) and (0, 1) and are finite") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> log_k(0.0, 10.0);
  std::uniform_real_distribution<double> log_xi(0.0, 3.0);
  const double xi1 = matsubara_frequency(1, 300.0);
  for (const char* name : {"Au", "Nb", "Al"}) {
    const auto m = builtin_material(name);
    for (int i = 0; i < 2000; ++i) {
      const double k = std::pow(10.0, log_k(rng));
      const double xi = xi1 * std::pow(10.0, log_xi(rng));
      const double te = fresnel_te(m, xi, k);
      const double tm = fresnel_tm(m, xi, k);
      REQUIRE(std::isfinite(te));
      REQUIRE(std::isfinite(tm));
      CHECK(te > -1.0);
      CHECK(te < 0.0);
      CHECK(tm > 0.0);
      CHECK(tm < 1.0);
    }
  }
}

TEST_CASE("stable forms agree with the textbook expressions") {
  const auto al = builtin_material("Al");
  for (double xi_ev : {0.05, 0.5, 5.0, 13.0}) {
    const double xi = ev_to_angular_frequency(xi_ev);
    for (double ratio : {0.1, 1.0, 10.0}) {
      const double k = ratio * xi / constants::c;
      const auto ref = naive(al, xi, k);
      CHECK(rel_diff(fresnel_te(al, xi, k), ref.te) < 1e-12);
      CHECK(rel_diff(fresnel_tm(al, xi, k), ref.tm) < 1e-12);
    }
  }
}

TEST_CASE("large plasma frequency approaches the perfect conductor") {
  const auto m = MaterialModel::drude_ev("stiff", 1e4, 0.035);
  const double xi = ev_to_angular_frequency(1.0);
  for (double k : {1e3, 1e6, 1e7}) {
    CHECK(std::abs(fresnel_te(m, xi, k) + 1.0) < 1e-3);
    CHECK(std::abs(fresnel_tm(m, xi, k) - 1.0) < 1e-3);
  }
}

TEST_CASE("scaled responses give the same coefficients in dimensionless momentum") {
  const auto nb = builtin_material("Nb");
  const double xi = matsubara_frequency(3, 300.0);
  const double two_a = 2e-6;
  const auto r = surface_response(nb, xi);
  const auto scaled = r.scaled(two_a);
  for (double k : {1e4, 1e6, 3e7}) {
    const double q = std::hypot(xi / constants::c, k);
    const auto a = reflection_at(r, q);
    const auto b = reflection_at(scaled, two_a * q);
    CHECK(rel_diff(a.te, b.te) < 1e-13);
    CHECK(rel_diff(a.tm, b.tm) < 1e-13);
  }
}
