#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"
#include "casimir/pfa.hpp"

namespace casimir {

enum class Spacing { linear, log };

/// A spring-constant sweep over gap sizes. Lengths are stored in metres.
struct SweepSpec {
  double gap_min = 0.59e-6;
  double gap_max = 3.3e-6;
  int n_points = 50;
  Spacing spacing = Spacing::log;
  std::vector<std::string> coatings{"Au", "Nb"};
  std::string post_material = "Al";
  double temperature = 300.0;
  ReentrantGeometry geometry;
  SpringFormula formula = SpringFormula::cap_only;
  bool include_pc_curve = true;
  EngineConfig engine;
  int workers = 0;  // 0 = one per hardware thread
  MaterialRegistry materials;

  /// Throws ConfigError naming the violated constraint.
  void validate() const;
  /// Strictly increasing gap grid; endpoints are exactly gap_min and gap_max.
  std::vector<double> gaps() const;
};

/// Flat `key = value` document, '#' starts a comment. Lengths in um,
/// temperature in K, custom Drude parameters in eV/hbar:
///
///   gap_min_um, gap_max_um, n_points, spacing (log|linear),
///   coatings (comma list), post_material, temperature_K,
///   r0_um, r1_um, h_um, formula (cap_only|full), include_pc_curve,
///   quad_rel_tol, matsubara_rel_tol, l_max_cap, workers,
///   material.<name>.omega_eV, material.<name>.gamma_eV
///
/// `overrides` are applied on top of the document (flags beat file values,
/// file values beat defaults). Throws ConfigError.
SweepSpec parse_config(std::string_view text,
                       std::span<const std::pair<std::string, std::string>> overrides = {});

struct CoatingPoint {
  std::string name;
  double k_C = 0.0;        // N/m
  double est_error = 0.0;  // N/m
  std::optional<double> ratio;  // k_C / k_S when k_S is known for the coating
  bool valid = true;
  std::string failure;
};

struct SweepRow {
  double x = 0.0;  // m
  std::vector<CoatingPoint> coatings;
  std::optional<double> k_C_pc;  // N/m

  bool valid() const;
};

struct TimingSummary {
  double wall_seconds = 0.0;
  long total_evals = 0;
  std::size_t points = 0;
  int workers = 1;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  TimingSummary timing;
  bool any_failed() const;
};

/// Evaluates every gap point, distributing points over a bounded worker pool.
/// Rows come back in gap order and are bit-identical for any worker count.
/// Engine failures are recorded in the row and do not abort the sweep.
SweepResult run_sweep(const SweepSpec& spec);

/// Header `x_um,kC_<c>_N_per_m,err_<c>,...[,kC_pc_N_per_m][,ratio_<c>_kS]`,
/// shortest round-trip scientific numbers, '\n' line endings.
std::string emit_csv(std::span<const SweepRow> rows);

std::string format_timing(const TimingSummary& timing);

}  // namespace casimir
