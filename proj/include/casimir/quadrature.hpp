#pragma once

// Globally adaptive Gauss-Kronrod (7/15) integration on [lower, inf) for
// integrands with an exponential envelope and an analytic tail bound.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <tuple>
#include <utility>
#include <vector>

namespace casimir::quadrature {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;  // embedded-rule estimate plus the analytic tail bound
  long n_evals = 0;
  int n_subdivisions = 0;
  bool converged = true;
};

struct Segment {
  double lo = 0.0;
  double hi = 0.0;
  double value = 0.0;
  double error = 0.0;
};

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd Kronrod nodes (1, 3, 5, 7).
inline constexpr std::array<double, 4> kGaussWeights{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

}  // namespace detail

/// One 15-point Kronrod panel with the QUADPACK error heuristic.
template <class F>
Segment gauss_kronrod_15(F& f, double lo, double hi, long& evals) {
  using namespace detail;
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  std::array<double, 15> fv{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    fv[2 * j] = f(center - dx);
    fv[2 * j + 1] = f(center + dx);
  }
  const double f_center = f(center);
  fv[14] = f_center;
  evals += 15;

  double kronrod = kKronrodWeights[7] * f_center;
  double gauss = kGaussWeights[3] * f_center;
  double abs_sum = std::abs(kronrod);
  for (int j = 0; j < 7; ++j) {
    const double pair = fv[2 * j] + fv[2 * j + 1];
    kronrod += kKronrodWeights[j] * pair;
    abs_sum += kKronrodWeights[j] * (std::abs(fv[2 * j]) + std::abs(fv[2 * j + 1]));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[7] * std::abs(f_center - mean);
  for (int j = 0; j < 7; ++j) {
    asc += kKronrodWeights[j] * (std::abs(fv[2 * j] - mean) + std::abs(fv[2 * j + 1] - mean));
  }

  double err = std::abs((kronrod - gauss) * half);
  const double resasc = asc * std::abs(half);
  const double resabs = abs_sum * std::abs(half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * resabs, err);
  }
  return {lo, hi, kronrod * half, err};
}

/// Integrates f over [lower, inf).
///
/// Panels break at B + 1, B + 2, B + 4, ... with B = max(lower, 1) until
/// `tail_bound(Y)`, an upper bound on |int_Y^inf f|, drops below
/// rel_tol * |sum|. Then the panel with the largest error is bisected until
/// the summed error estimate meets rel_tol or `max_subdivisions` is spent.
template <class F, class Tail>
QuadratureResult integrate_exponential_tail(F&& f, double lower, Tail&& tail_bound, double rel_tol,
                                            int max_subdivisions) {
  QuadratureResult result;
  std::vector<Segment> heap;
  const auto by_error = [](const Segment& a, const Segment& b) { return a.error < b.error; };

  const double base = std::max(lower, 1.0);
  double edge = lower;
  double offset = 1.0;
  double sum = 0.0;
  double tail = 0.0;
  constexpr int kMaxPanels = 128;
  for (int panel = 0;; ++panel) {
    const double next = base + offset;
    offset *= 2.0;
    heap.push_back(gauss_kronrod_15(f, edge, next, result.n_evals));
    std::push_heap(heap.begin(), heap.end(), by_error);
    sum += heap.back().value;
    edge = next;
    tail = tail_bound(edge);
    if (tail <= rel_tol * std::abs(sum)) break;
    if (panel + 1 >= kMaxPanels) {
      result.converged = false;
      break;
    }
  }

  const auto totals = [&heap] {
    double v = 0.0, e = 0.0;
    for (const auto& s : heap) {
      v += s.value;
      e += s.error;
    }
    return std::pair{v, e};
  };

  auto [value, error] = totals();
  while (error > rel_tol * std::abs(value) && error > std::numeric_limits<double>::min()) {
    if (result.n_subdivisions >= max_subdivisions) {
      result.converged = false;
      break;
    }
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const Segment worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      // interval exhausted at machine precision
      heap.push_back(worst);
      std::push_heap(heap.begin(), heap.end(), by_error);
      result.converged = false;
      break;
    }
    const Segment left = gauss_kronrod_15(f, worst.lo, mid, result.n_evals);
    const Segment right = gauss_kronrod_15(f, mid, worst.hi, result.n_evals);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), by_error);
    ++result.n_subdivisions;
  }

  std::tie(value, error) = totals();
  result.value = value;
  result.abs_error = error + tail;
  return result;
}

}  // namespace casimir::quadrature
