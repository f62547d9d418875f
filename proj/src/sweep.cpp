#include "casimir/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "casimir/log.hpp"

namespace casimir {
namespace {

void append_number(std::string& out, double v) {
  if (std::isnan(v)) {
    out += "nan";
    return;
  }
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific);
  out.append(buf, ptr);
}

// Unit conversion leaves one-ulp noise (3.3e-6 / 1e-6 != 3.3); 15 digits is below any grid spacing.
double to_micrometres(double x) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x / 1e-6, std::chars_format::scientific, 14);
  double v = 0.0;
  std::from_chars(buf, ptr, v);
  return v;
}

int resolve_workers(int requested, std::size_t points) {
  int n = requested;
  if (n <= 0) n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return std::max(1, std::min(n, static_cast<int>(points)));
}

}  // namespace

std::vector<double> SweepSpec::gaps() const {
  std::vector<double> out(static_cast<std::size_t>(n_points));
  const double last = n_points - 1;
  for (int i = 0; i < n_points; ++i) {
    const double t = i / last;
    out[static_cast<std::size_t>(i)] =
        spacing == Spacing::log ? gap_min * std::pow(gap_max / gap_min, t) : gap_min + (gap_max - gap_min) * t;
  }
  out.front() = gap_min;
  out.back() = gap_max;
  return out;
}

bool SweepRow::valid() const {
  return std::ranges::all_of(coatings, [](const CoatingPoint& c) { return c.valid; });
}

bool SweepResult::any_failed() const {
  return std::ranges::any_of(rows, [](const SweepRow& r) { return !r.valid(); });
}

SweepResult run_sweep(const SweepSpec& spec) {
  spec.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::vector<double> gaps = spec.gaps();

  // Engines own the per-temperature permittivity tables; they are complete
  // before any worker starts and only read afterwards.
  const MaterialModel post = spec.materials.resolve(spec.post_material);
  std::vector<LifshitzEngine> engines;
  std::vector<std::optional<double>> membrane_k;
  engines.reserve(spec.coatings.size());
  for (const auto& name : spec.coatings) {
    const MaterialModel coating = spec.materials.resolve(name);
    engines.emplace_back(HalfSpacePair{post, coating}, spec.temperature, spec.engine);
    membrane_k.push_back(membrane_spring_constant(coating.name()));
  }

  SweepResult result;
  result.rows.resize(gaps.size());
  std::vector<long> evals(gaps.size(), 0);

  const auto evaluate_point = [&](std::size_t i) {
    SweepRow& row = result.rows[i];
    row.x = gaps[i];
    for (std::size_t c = 0; c < engines.size(); ++c) {
      CoatingPoint cp;
      cp.name = spec.coatings[c];
      try {
        const SpringResult s = spec.formula == SpringFormula::full
                                   ? spring_constant_full(engines[c], spec.geometry, row.x)
                                   : spring_constant_cap_only(engines[c], spec.geometry, row.x);
        cp.k_C = s.k_C;
        cp.est_error = s.est_error;
        evals[i] += s.n_evals;
      } catch (const ConvergenceError& e) {
        cp.valid = false;
        cp.failure = e.what();
        evals[i] += e.partial().n_evals;
      } catch (const std::exception& e) {
        cp.valid = false;
        cp.failure = e.what();
      }
      if (!cp.valid) {
        cp.k_C = std::numeric_limits<double>::quiet_NaN();
        cp.est_error = std::numeric_limits<double>::quiet_NaN();
      }
      if (membrane_k[c]) cp.ratio = cp.k_C / *membrane_k[c];
      row.coatings.push_back(std::move(cp));
    }
    if (spec.include_pc_curve) row.k_C_pc = spring_constant_perfect_conductor(spec.geometry, row.x).k_C;
  };

  const int workers = resolve_workers(spec.workers, gaps.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < gaps.size(); ++i) evaluate_point(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < gaps.size(); i = next.fetch_add(1)) evaluate_point(i);
      });
    }
  }

  for (std::size_t i = 0; i < gaps.size(); ++i) {
    for (const auto& cp : result.rows[i].coatings) {
      if (!cp.valid) log::info("point x=", gaps[i], " m, coating ", cp.name, " failed: ", cp.failure);
    }
  }

  result.timing.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (long e : evals) result.timing.total_evals += e;
  result.timing.points = gaps.size();
  result.timing.workers = workers;
  return result;
}

std::string emit_csv(std::span<const SweepRow> rows) {
  std::string out;
  if (rows.empty()) return out;
  const SweepRow& first = rows.front();

  out += "x_um";
  for (const auto& c : first.coatings) out += ",kC_" + c.name + "_N_per_m,err_" + c.name;
  if (first.k_C_pc) out += ",kC_pc_N_per_m";
  for (const auto& c : first.coatings) {
    if (c.ratio) out += ",ratio_" + c.name + "_kS";
  }
  out += '\n';

  for (const auto& row : rows) {
    append_number(out, to_micrometres(row.x));
    for (const auto& c : row.coatings) {
      out += ',';
      append_number(out, c.k_C);
      out += ',';
      append_number(out, c.est_error);
    }
    if (first.k_C_pc) {
      out += ',';
      append_number(out, row.k_C_pc.value_or(std::numeric_limits<double>::quiet_NaN()));
    }
    for (const auto& c : row.coatings) {
      if (!c.ratio) continue;
      out += ',';
      append_number(out, *c.ratio);
    }
    out += '\n';
  }
  return out;
}

std::string format_timing(const TimingSummary& timing) {
  std::ostringstream out;
  out << "sweep: " << timing.points << " points, " << timing.workers << " worker(s), " << timing.wall_seconds
      << " s wall, " << timing.total_evals << " integrand evaluations ("
      << (timing.points ? timing.total_evals / static_cast<long>(timing.points) : 0) << " per point)";
  return out.str();
}

}  // namespace casimir
