#include "casimir/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/pfa.hpp"
#include "casimir/reflection.hpp"

namespace casimir::oracle {
namespace {

constexpr double kUpperY = 60.0;
constexpr double kCutoffMultiple = 50.0;
constexpr double kZeta3 = 1.2020569031595942853997;

constexpr std::array<double, 4> kLegendreNodes{0.1834346424956498049394761, 0.5255324099163289858177390,
                                               0.7966664774136267395915539, 0.9602898564975362316835609};
constexpr std::array<double, 4> kLegendreWeights{0.3626837833783619829651504, 0.3137066458778872873379622,
                                                 0.2223810344533744705443560, 0.1012285362903762591525314};

double reference_term(const HalfSpacePair& pair, const ThermalGap& tg, int l, int panels) {
  const double a = tg.gap;
  const double xi = matsubara_frequency(l, tg.temperature);
  const double y0 = 2.0 * a * xi / constants::c;
  if (y0 >= kUpperY) return 0.0;

  ReflectionPair static_1{}, static_2{};
  if (l == 0) {
    static_1 = zero_frequency_limits(pair.side_1);
    static_2 = zero_frequency_limits(pair.side_2);
  }

  // y * sum_pol log(1 - r1 r2 e^{-y}) with y = y0 + t
  const auto integrand = [&](double t) {
    const double y = y0 + t;
    double te1, tm1, te2, tm2;
    if (l == 0) {
      te1 = static_1.te, tm1 = static_1.tm, te2 = static_2.te, tm2 = static_2.tm;
    } else {
      const double k_perp = std::sqrt(t * (y + y0)) / (2.0 * a);
      te1 = fresnel_te(pair.side_1, xi, k_perp);
      tm1 = fresnel_tm(pair.side_1, xi, k_perp);
      te2 = fresnel_te(pair.side_2, xi, k_perp);
      tm2 = fresnel_tm(pair.side_2, xi, k_perp);
    }
    const double decay = std::exp(-y);
    return y * (std::log1p(-te1 * te2 * decay) + std::log1p(-tm1 * tm2 * decay));
  };

  const double width = (kUpperY - y0) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * width;
    const double half = 0.5 * width;
    double panel = 0.0;
    for (std::size_t j = 0; j < kLegendreNodes.size(); ++j) {
      const double dx = half * kLegendreNodes[j];
      panel += kLegendreWeights[j] * (integrand(mid - dx) + integrand(mid + dx));
    }
    total += half * panel;
  }

  const double weight = l == 0 ? 0.5 : 1.0;
  return weight * constants::k_B * tg.temperature / (2.0 * constants::pi) * total / (4.0 * a * a);
}

}  // namespace

double reference_energy_term(const HalfSpacePair& pair, const ThermalGap& tg, int l, int panels) {
  tg.validate();
  if (l < 0) throw DomainError("reference_energy_term: l must be >= 0");
  if (panels < 1) throw DomainError("reference_energy_term: panels must be >= 1");
  return reference_term(pair, tg, l, panels);
}

double reference_energy_per_area(const HalfSpacePair& pair, const ThermalGap& tg, int panels) {
  tg.validate();
  if (panels < 1) throw DomainError("reference_energy_per_area: panels must be >= 1");
  const double cutoff = kCutoffMultiple * constants::c / (2.0 * tg.gap);
  double total = 0.0;
  for (int l = 0; matsubara_frequency(l, tg.temperature) <= cutoff; ++l) {
    total += reference_term(pair, tg, l, panels);
  }
  return total;
}

double zero_mode_energy(const ThermalGap& tg) {
  tg.validate();
  return -constants::k_B * tg.temperature * kZeta3 / (16.0 * constants::pi * tg.gap * tg.gap);
}

double relative_deviation(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

std::vector<ValidationPoint> default_validation_grid() {
  const HalfSpacePair pair{builtin_material("Al"), builtin_material("Au")};
  std::vector<ValidationPoint> grid;
  for (double x_um : {0.59, 1.0, 1.7, 2.5, 3.3}) grid.push_back({x_um * 1e-6, 300.0, pair});
  return grid;
}

ValidationReport validate_engine(std::span<const ValidationPoint> points, double tolerance, const EngineConfig& cfg,
                                 double step_frac) {
  if (points.empty()) throw DomainError("validate_engine: point list is empty");
  ValidationReport report;
  report.tolerance = tolerance;
  for (const auto& pt : points) {
    PointReport r{.point = pt};
    try {
      const LifshitzEngine engine(pt.pair, pt.temperature, cfg);
      const auto energy_at = [&](double a) { return engine.energy_per_area(a).value; };
      const auto pressure_at = [&](double a) { return engine.pressure(a).value; };

      r.energy = energy_at(pt.gap);
      r.energy_reference = reference_energy_per_area(pt.pair, {pt.gap, pt.temperature});
      r.energy_deviation = relative_deviation(r.energy, r.energy_reference);

      r.pressure = pressure_at(pt.gap);
      r.pressure_fd = -finite_difference(energy_at, pt.gap, step_frac);
      r.pressure_deviation = relative_deviation(r.pressure, r.pressure_fd);

      r.gradient = engine.pressure_gradient(pt.gap).value;
      r.gradient_fd = finite_difference(pressure_at, pt.gap, step_frac);
      r.gradient_deviation = relative_deviation(r.gradient, r.gradient_fd);

      r.max_deviation = std::max({r.energy_deviation, r.pressure_deviation, r.gradient_deviation});
      if (pt.pair.side_1.is_perfect_conductor() && pt.pair.side_2.is_perfect_conductor()) {
        r.ideal_pressure_deviation = relative_deviation(r.pressure, ideal_pressure(pt.gap));
        r.max_deviation = std::max(r.max_deviation, *r.ideal_pressure_deviation);
      }
    } catch (const std::exception& e) {
      r.failure = e.what();
      r.max_deviation = std::numeric_limits<double>::infinity();
    }
    report.max_deviation = std::max(report.max_deviation, r.max_deviation);
    report.points.push_back(std::move(r));
  }
  report.passed = report.max_deviation < tolerance;
  return report;
}

std::string ValidationReport::to_text() const {
  std::ostringstream out;
  out << std::scientific << std::setprecision(3);
  out << "gap_um    pair        T_K     dE_ref      dP_fd       dG_fd       dP_ideal\n";
  for (const auto& p : points) {
    out << std::fixed << std::setprecision(3) << std::setw(8) << p.point.gap * 1e6 << "  " << std::left
        << std::setw(10) << (p.point.pair.side_1.name() + "-" + p.point.pair.side_2.name()) << std::right << "  "
        << std::setw(6) << std::setprecision(1) << p.point.temperature << std::scientific << std::setprecision(3);
    if (!p.failure.empty()) {
      out << "  FAILED: " << p.failure << '\n';
      continue;
    }
    out << "  " << p.energy_deviation << "   " << p.pressure_deviation << "   " << p.gradient_deviation;
    if (p.ideal_pressure_deviation) out << "   " << *p.ideal_pressure_deviation;
    out << '\n';
  }
  out << "max deviation " << max_deviation << " vs tolerance " << tolerance << ": " << (passed ? "PASS" : "FAIL")
      << '\n';
  return out.str();
}

std::string ValidationReport::to_json() const {
  nlohmann::json j;
  j["tolerance"] = tolerance;
  j["max_deviation"] = max_deviation;
  j["passed"] = passed;
  j["points"] = nlohmann::json::array();
  for (const auto& p : points) {
    nlohmann::json e{
        {"gap_m", p.point.gap},
        {"temperature_K", p.point.temperature},
        {"side_1", p.point.pair.side_1.name()},
        {"side_2", p.point.pair.side_2.name()},
    };
    if (!p.failure.empty()) {
      e["failure"] = p.failure;
    } else {
      e["energy"] = {{"engine", p.energy}, {"reference", p.energy_reference}, {"deviation", p.energy_deviation}};
      e["pressure"] = {{"engine", p.pressure}, {"finite_difference", p.pressure_fd},
                       {"deviation", p.pressure_deviation}};
      e["gradient"] = {{"engine", p.gradient}, {"finite_difference", p.gradient_fd},
                       {"deviation", p.gradient_deviation}};
      if (p.ideal_pressure_deviation) e["ideal_pressure_deviation"] = *p.ideal_pressure_deviation;
      e["max_deviation"] = p.max_deviation;
    }
    j["points"].push_back(std::move(e));
  }
  return j.dump(2);
}

}  // namespace casimir::oracle
