#include "casimir/lifshitz.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {
namespace {

// Matsubara terms are never truncated before y0 = 2 a xi_l / c exceeds this,
// i.e. before xi_l > 5 c / (2a).
constexpr double kMatsubaraGuard = 5.0;
constexpr int kSmallTermsToStop = 3;

// Bounds on |int_Y^inf (integrand) dy| for |r1 r2| <= 1, both polarizations.
double tail_bound(Quantity quantity, double y) {
  const double e = std::exp(-y);
  const double gap = -std::expm1(-y);  // 1 - e^{-y}
  switch (quantity) {
    case Quantity::energy:
      return 2.0 * e * (y + 1.0) / gap;
    case Quantity::pressure:
      return 2.0 * e * (y * y + 2.0 * y + 2.0) / gap;
    case Quantity::gradient:
      return 2.0 * e * (((y + 3.0) * y + 6.0) * y + 6.0) / (gap * gap);
  }
  return 0.0;
}

// Contribution of one polarization with round-trip product R at e^{-y}.
// expm1_neg is expm1(-y), so 1 - R e^{-y} = (1 - R) - R expm1(-y) without
// cancellation when R -> 1 and y -> 0.
template <Quantity Q>
inline double mode_kernel(double product, double exp_neg, double expm1_neg) {
  const double u = product * exp_neg;
  const double one_minus_u = (1.0 - product) - product * expm1_neg;
  assert(u >= 0.0 && u < 1.0);
  if constexpr (Q == Quantity::energy) {
    return u < 0.5 ? std::log1p(-u) : std::log(one_minus_u);
  } else if constexpr (Q == Quantity::pressure) {
    return u / one_minus_u;
  } else {
    return u / (one_minus_u * one_minus_u);
  }
}

template <Quantity Q>
inline double y_power(double y) {
  if constexpr (Q == Quantity::energy) {
    return y;
  } else if constexpr (Q == Quantity::pressure) {
    return y * y;
  } else {
    return y * y * y;
  }
}

template <Quantity Q>
quadrature::QuadratureResult integrate_static(ReflectionPair products, const EngineConfig& cfg) {
  auto integrand = [products](double y) {
    const double e = std::exp(-y);
    const double em1 = std::expm1(-y);
    double sum = 0.0;
    if (products.te != 0.0) sum += mode_kernel<Q>(products.te, e, em1);
    if (products.tm != 0.0) sum += mode_kernel<Q>(products.tm, e, em1);
    return y_power<Q>(y) * sum;
  };
  return quadrature::integrate_exponential_tail(
      integrand, 0.0, [](double y) { return tail_bound(Q, y); }, cfg.quad_rel_tol, cfg.quad_max_subdivisions);
}

template <Quantity Q>
quadrature::QuadratureResult integrate_dynamic(const SurfaceResponse& side_1, const SurfaceResponse& side_2,
                                               double y0, const EngineConfig& cfg) {
  auto integrand = [&side_1, &side_2](double y) {
    const ReflectionPair r1 = reflection_at(side_1, y);
    const ReflectionPair r2 = reflection_at(side_2, y);
    const double e = std::exp(-y);
    const double em1 = std::expm1(-y);
    const double sum = mode_kernel<Q>(r1.te * r2.te, e, em1) + mode_kernel<Q>(r1.tm * r2.tm, e, em1);
    return y_power<Q>(y) * sum;
  };
  return quadrature::integrate_exponential_tail(
      integrand, y0, [](double y) { return tail_bound(Q, y); }, cfg.quad_rel_tol, cfg.quad_max_subdivisions);
}

const EngineConfig& checked(const EngineConfig& config, double temperature) {
  config.validate();
  if (!(temperature > 0.0) || !std::isfinite(temperature)) throw DomainError("temperature must be > 0");
  return config;
}

template <class Fn>
decltype(auto) dispatch(Quantity quantity, Fn&& fn) {
  switch (quantity) {
    case Quantity::energy:
      return fn.template operator()<Quantity::energy>();
    case Quantity::pressure:
      return fn.template operator()<Quantity::pressure>();
    case Quantity::gradient:
      break;
  }
  return fn.template operator()<Quantity::gradient>();
}

}  // namespace

const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::energy:
      return "energy";
    case Quantity::pressure:
      return "pressure";
    case Quantity::gradient:
      return "gradient";
  }
  return "?";
}

void ThermalGap::validate() const {
  if (!(gap > 0.0) || !std::isfinite(gap)) throw DomainError("gap width must be > 0");
  if (!(temperature > 0.0) || !std::isfinite(temperature)) throw DomainError("temperature must be > 0");
}

void EngineConfig::validate() const {
  const auto unit_interval = [](double v) { return v > 0.0 && v < 1.0; };
  if (!unit_interval(quad_rel_tol)) throw ConfigError("quad_rel_tol must lie in (0, 1)");
  if (!unit_interval(matsubara_rel_tol)) throw ConfigError("matsubara_rel_tol must lie in (0, 1)");
  if (l_max_cap < 1) throw ConfigError("l_max_cap must be >= 1");
  if (quad_max_subdivisions < 1) throw ConfigError("quad_max_subdivisions must be >= 1");
}

MatsubaraTable::MatsubaraTable(const MaterialModel& material, double temperature, int l_max)
    : static_limit_(zero_frequency_limits(material)) {
  responses_.resize(static_cast<std::size_t>(l_max) + 1);
  for (int l = 1; l <= l_max; ++l) {
    responses_[static_cast<std::size_t>(l)] = surface_response(material, matsubara_frequency(l, temperature));
  }
}

LifshitzEngine::LifshitzEngine(HalfSpacePair pair, double temperature, EngineConfig config)
    : pair_(std::move(pair)),
      temperature_(temperature),
      config_(checked(config, temperature)),
      table_1_(pair_.side_1, temperature, config_.l_max_cap),
      table_2_(pair_.side_2, temperature, config_.l_max_cap) {}

bool LifshitzEngine::reflectionless() const { return pair_.side_1.is_vacuum() || pair_.side_2.is_vacuum(); }

double LifshitzEngine::prefactor(Quantity quantity, double gap) const {
  const double kT = constants::k_B * temperature_;
  const double two_a = 2.0 * gap;
  switch (quantity) {
    case Quantity::energy:
      return kT / (2.0 * constants::pi) / (two_a * two_a);
    case Quantity::pressure:
      return -kT / constants::pi / (two_a * two_a * two_a);
    case Quantity::gradient:
      return 2.0 * kT / constants::pi / (two_a * two_a * two_a * two_a);
  }
  return 0.0;
}

LifshitzResult LifshitzEngine::term(Quantity quantity, double gap, int l) const {
  ThermalGap{gap, temperature_}.validate();
  if (l < 0 || l > config_.l_max_cap) {
    throw DomainError("Matsubara index out of range [0, l_max_cap]");
  }
  LifshitzResult out;
  out.n_matsubara = 1;
  if (reflectionless()) return out;

  quadrature::QuadratureResult q;
  if (l == 0) {
    const auto& s1 = table_1_.static_limit();
    const auto& s2 = table_2_.static_limit();
    const ReflectionPair products{s1.te * s2.te, s1.tm * s2.tm};
    q = dispatch(quantity, [&]<Quantity Q>() { return integrate_static<Q>(products, config_); });
  } else {
    const double two_a = 2.0 * gap;
    const double y0 = two_a * matsubara_frequency(l, temperature_) / constants::c;
    const SurfaceResponse r1 = table_1_.response(l).scaled(two_a);
    const SurfaceResponse r2 = table_2_.response(l).scaled(two_a);
    q = dispatch(quantity, [&]<Quantity Q>() { return integrate_dynamic<Q>(r1, r2, y0, config_); });
  }

  const double weight = (l == 0 ? 0.5 : 1.0) * prefactor(quantity, gap);
  out.value = weight * q.value;
  out.est_error = std::abs(weight) * q.abs_error;
  out.n_evals = q.n_evals;
  if (!q.converged) {
    std::ostringstream msg;
    msg << "quadrature did not converge for Matsubara term l=" << l << " (" << to_string(quantity)
        << ", gap=" << gap << " m) within " << config_.quad_max_subdivisions << " subdivisions";
    throw ConvergenceError(msg.str(), out);
  }
  return out;
}

double LifshitzEngine::truncation_bound(Quantity quantity, double gap, int last_l) const {
  const double scale = std::abs(prefactor(quantity, gap));
  const double step = 2.0 * gap * matsubara_frequency(1, temperature_) / constants::c;
  double bound = 0.0;
  double previous = 0.0;
  for (long l = last_l + 1; l < last_l + 100000; ++l) {
    const double t = tail_bound(quantity, static_cast<double>(l) * step);
    bound += t;
    if (t <= 1e-17 * bound || t == 0.0) {
      // remaining terms decay at least geometrically with ratio t / previous
      const double ratio = previous > 0.0 ? t / previous : 0.0;
      if (ratio < 1.0) bound += t * ratio / (1.0 - ratio);
      break;
    }
    previous = t;
  }
  return scale * bound;
}

LifshitzResult LifshitzEngine::evaluate(Quantity quantity, double gap) const {
  ThermalGap{gap, temperature_}.validate();
  LifshitzResult out;
  if (reflectionless()) {
    out.n_matsubara = 1;
    return out;
  }

  const double step = 2.0 * gap * matsubara_frequency(1, temperature_) / constants::c;
  int small_run = 0;
  for (int l = 0;; ++l) {
    if (l > config_.l_max_cap) {
      std::ostringstream msg;
      msg << "Matsubara sum for " << to_string(quantity) << " at gap=" << gap << " m did not converge within l_max_cap="
          << config_.l_max_cap;
      throw ConvergenceError(msg.str(), out);
    }
    LifshitzResult t;
    try {
      t = term(quantity, gap, l);
    } catch (const ConvergenceError& e) {
      out.value += e.partial().value;
      out.est_error += e.partial().est_error;
      out.n_evals += e.partial().n_evals;
      out.n_matsubara = l + 1;
      throw ConvergenceError(e.what(), out);
    }
    out.value += t.value;
    out.est_error += t.est_error;
    out.n_evals += t.n_evals;
    out.n_matsubara = l + 1;

    if (std::abs(t.value) <= config_.matsubara_rel_tol * std::abs(out.value)) {
      ++small_run;
    } else {
      small_run = 0;
    }
    if (l >= 1 && static_cast<double>(l) * step > kMatsubaraGuard && small_run >= kSmallTermsToStop) {
      out.est_error += truncation_bound(quantity, gap, l);
      return out;
    }
  }
}

LifshitzResult energy_per_area(const HalfSpacePair& pair, const ThermalGap& tg, const EngineConfig& cfg) {
  tg.validate();
  return LifshitzEngine(pair, tg.temperature, cfg).energy_per_area(tg.gap);
}

LifshitzResult pressure(const HalfSpacePair& pair, const ThermalGap& tg, const EngineConfig& cfg) {
  tg.validate();
  return LifshitzEngine(pair, tg.temperature, cfg).pressure(tg.gap);
}

LifshitzResult pressure_gradient(const HalfSpacePair& pair, const ThermalGap& tg, const EngineConfig& cfg) {
  tg.validate();
  return LifshitzEngine(pair, tg.temperature, cfg).pressure_gradient(tg.gap);
}

double matsubara_term(const HalfSpacePair& pair, const ThermalGap& tg, int l, const EngineConfig& cfg,
                      Quantity kind) {
  tg.validate();
  if (l < 0) throw DomainError("matsubara_term: l must be >= 0");
  EngineConfig widened = cfg;
  widened.l_max_cap = std::max(cfg.l_max_cap, l);
  return LifshitzEngine(pair, tg.temperature, widened).term(kind, tg.gap, l).value;
}

double dominant_frequency(const ThermalGap& tg) {
  if (!(tg.gap > 0.0)) throw DomainError("dominant_frequency: gap must be > 0");
  return constants::c / (2.0 * tg.gap);
}

}  // namespace casimir
