#include <doctest.h>

#include <string>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/materials.hpp"
#include "test_support.hpp"

using namespace casimir;
using casimir::test::rel_diff;

TEST_CASE("built-in Drude parameters") {
  const auto au = builtin_material("Au");
  CHECK(au.name() == "Au");
  REQUIRE(au.is_drude());
  CHECK(au.drude_params().omega_p == ev_to_angular_frequency(9.0));
  CHECK(au.drude_params().gamma == ev_to_angular_frequency(0.035));

  const auto al = builtin_material("Al");
  CHECK(al.drude_params().omega_p == ev_to_angular_frequency(13.0));
  CHECK(al.drude_params().gamma == ev_to_angular_frequency(0.1));

  const auto nb = builtin_material("nb");
  CHECK(nb.name() == "Nb");
  CHECK(nb.drude_params().omega_p == ev_to_angular_frequency(9.9));
  CHECK(nb.drude_params().gamma == ev_to_angular_frequency(0.2));

  CHECK(builtin_material("pc").is_perfect_conductor());
  CHECK(builtin_material("VACUUM").is_vacuum());
}

TEST_CASE("unknown material lists the valid names") {
  try {
    builtin_material("Cu");
    FAIL("expected LookupError");
  } catch (const LookupError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("Cu") != std::string::npos);
    for (const char* n : {"Au", "Nb", "Al", "PC", "vacuum"}) CHECK(msg.find(n) != std::string::npos);
  }
}

TEST_CASE("permittivity at sample frequencies") {
  // 1 + 81 / (1 * 1.035) and 1 + 169 / (13 * 13.1), evaluated exactly
  CHECK(rel_diff(permittivity(builtin_material("Au"), ev_to_angular_frequency(1.0)), 79.26086956521739) < 1e-13);
  CHECK(rel_diff(permittivity(builtin_material("Al"), ev_to_angular_frequency(13.0)), 1.9923664122137405) < 1e-13);
  for (double xi : {1e3, 1e12, 1e18}) CHECK(permittivity(MaterialModel::vacuum(), xi) == 1.0);
}

TEST_CASE("permittivity errors") {
  CHECK_THROWS_AS(permittivity(builtin_material("Au"), 0.0), DomainError);
  CHECK_THROWS_AS(permittivity(builtin_material("Au"), -1.0), DomainError);
  CHECK_THROWS_AS(permittivity(MaterialModel::perfect_conductor(), 1e14), UnsupportedModelError);
  CHECK_THROWS_AS(MaterialModel::drude_ev("bad", 0.0, 0.1), DomainError);
  CHECK_THROWS_AS(MaterialModel::drude_ev("bad", 1.0, -0.1), DomainError);
}

TEST_CASE("Drude permittivity is decreasing, above one, and tends to one") {
  for (const char* name : {"Au", "Nb", "Al"}) {
    const auto m = builtin_material(name);
    const double omega = m.drude_params().omega_p;
    double previous = std::numeric_limits<double>::infinity();
    for (double xi = 1e-6 * omega; xi < 1e6 * omega; xi *= 1.5) {
      const double eps = permittivity(m, xi);
      CHECK(eps > 1.0);
      CHECK(eps < previous);
      previous = eps;
    }
    CHECK(permittivity(m, 1e6 * omega) - 1.0 < 1e-10);
  }
}

TEST_CASE("low-frequency Drude limit xi (eps - 1) -> omega_p^2 / gamma") {
  for (const char* name : {"Au", "Nb", "Al"}) {
    const auto m = builtin_material(name);
    const auto& p = m.drude_params();
    const double xi = 1e-8 * p.gamma;
    CHECK(rel_diff(xi * (permittivity(m, xi) - 1.0), p.omega_p * p.omega_p / p.gamma) < 1e-6);
  }
}

TEST_CASE("penetration depths are tens of nanometres") {
  // hbar c / Omega = 197.327 eV nm / Omega
  CHECK(penetration_depth(builtin_material("Au")) == doctest::Approx(21.925e-9).epsilon(1e-4));
  CHECK(penetration_depth(builtin_material("Nb")) == doctest::Approx(19.932e-9).epsilon(1e-4));
  CHECK(penetration_depth(builtin_material("Al")) == doctest::Approx(15.179e-9).epsilon(1e-4));
  for (const char* name : {"Au", "Nb", "Al"}) {
    const double d = penetration_depth(builtin_material(name));
    CHECK(d >= 10e-9);
    CHECK(d <= 30e-9);
  }
  CHECK_THROWS_AS(penetration_depth(MaterialModel::perfect_conductor()), UnsupportedModelError);
}

TEST_CASE("registry resolves custom Drude metals") {
  MaterialRegistry reg;
  reg.add_custom(MaterialModel::drude_ev("Cu", 8.9, 0.03));
  CHECK(reg.contains("Cu"));
  CHECK(reg.contains("au"));
  CHECK(reg.resolve("Cu").drude_params().omega_p == ev_to_angular_frequency(8.9));
  CHECK(reg.resolve("au").name() == "Au");
  CHECK_THROWS_AS(reg.resolve("Ag"), LookupError);
  CHECK_THROWS_AS(reg.add_custom(MaterialModel::drude_ev("au", 1.0, 1.0)), ConfigError);
}
