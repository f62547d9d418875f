#include <doctest.h>

#include <cmath>
#include <string>

#include <json.hpp>

#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/oracle.hpp"
#include "test_support.hpp"

using namespace casimir;
using casimir::test::rel_diff;

namespace {
HalfSpacePair al_au() { return {builtin_material("Al"), builtin_material("Au")}; }
}  // namespace

TEST_CASE("finite difference of a polynomial") {
  CHECK(std::abs(oracle::finite_difference([](double a) { return a * a; }, 3.0, 1e-4) - 6.0) < 1e-9);
}

TEST_CASE("reference: vacuum is zero and the static term matches zeta(3)") {
  const ThermalGap tg{1e-6, 300.0};
  CHECK(oracle::reference_energy_per_area({MaterialModel::vacuum(), builtin_material("Au")}, tg) == 0.0);
  CHECK(rel_diff(oracle::reference_energy_term(al_au(), tg, 0), oracle::zero_mode_energy(tg)) < 1e-6);
  CHECK(rel_diff(oracle::zero_mode_energy(tg), -9.905119259696987e-11) < 1e-12);
}

TEST_CASE("reference and engine agree on Au-Al at 1 um") {
  const ThermalGap tg{1e-6, 300.0};
  const double ref = oracle::reference_energy_per_area(al_au(), tg);
  CHECK(rel_diff(ref, energy_per_area(al_au(), tg).value) < 1e-6);
  CHECK(rel_diff(ref, -3.20292857735936e-10) < 1e-6);
}

TEST_CASE("validate_engine on vacuum points reports zero deviation") {
  const HalfSpacePair vac{MaterialModel::vacuum(), builtin_material("Al")};
  const std::vector<oracle::ValidationPoint> pts{{1e-6, 300.0, vac}, {2e-6, 4.0, vac}};
  const auto report = oracle::validate_engine(pts, 1e-300);
  CHECK(report.passed);
  CHECK(report.max_deviation == 0.0);
  for (const auto& p : report.points) {
    CHECK(p.energy_deviation == 0.0);
    CHECK(p.pressure_deviation == 0.0);
    CHECK(p.gradient_deviation == 0.0);
  }
}

TEST_CASE("validate_engine: perfect conductors against the ideal pressure") {
  const HalfSpacePair pc{MaterialModel::perfect_conductor(), MaterialModel::perfect_conductor()};
  const std::vector<oracle::ValidationPoint> pts{{0.3e-6, 300.0, pc}};
  const auto report = oracle::validate_engine(pts, 0.01);
  CHECK(report.passed);
  REQUIRE(report.points.front().ideal_pressure_deviation.has_value());
  CHECK(*report.points.front().ideal_pressure_deviation < 0.01);

  const auto json = nlohmann::json::parse(report.to_json());
  CHECK(json["passed"] == true);
  CHECK(json["points"].size() == 1);
  CHECK(report.to_text().find("PASS") != std::string::npos);
}

TEST_CASE("validate_engine flags deviations above tolerance and rejects empty input") {
  const std::vector<oracle::ValidationPoint> pts{{1e-6, 300.0, al_au()}};
  const auto report = oracle::validate_engine(pts, 1e-12);
  CHECK_FALSE(report.passed);
  CHECK(report.max_deviation >= 1e-12);
  CHECK_THROWS_AS(oracle::validate_engine({}, 1e-6), DomainError);
}

TEST_CASE("finite-difference mismatch shrinks fourfold when the step is halved") {
  const LifshitzEngine engine(al_au(), 300.0);
  const auto energy = [&](double a) { return engine.energy_per_area(a).value; };
  const auto force = [&](double a) { return engine.pressure(a).value; };
  for (double a : {0.8e-6, 2e-6}) {
    const double p = engine.pressure(a).value;
    const double g = engine.pressure_gradient(a).value;
    const double dp1 = std::abs(p + oracle::finite_difference(energy, a, 1e-2));
    const double dp2 = std::abs(p + oracle::finite_difference(energy, a, 5e-3));
    const double dg1 = std::abs(g - oracle::finite_difference(force, a, 1e-2));
    const double dg2 = std::abs(g - oracle::finite_difference(force, a, 5e-3));
    CHECK(dp1 / dp2 > 2.5);
    CHECK(dp1 / dp2 < 6.0);
    CHECK(dg1 / dg2 > 2.5);
    CHECK(dg1 / dg2 < 6.0);
  }
}
