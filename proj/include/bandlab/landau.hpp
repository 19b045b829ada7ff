#pragma once

// Exponential lower bound for M(d) from single translated sinc powers
// h(x) = sinc((x - d)/n)^n, each band-limited to [-1, 1] with h(d) = 1.
// Dividing h by its sup over x <= 0 puts it in the one-side-bounded class,
// so M(d) >= 1 / sup_{x<=0} |h|.

#include <span>
#include <vector>

namespace bandlab {

struct SincPowerParams {
  int n = 1;        // power and dilation
  double d = 1.0;   // translate distance

  void validate() const;
};

/// n log|sinc((x - d)/n)|; -inf on a zero of h.
double sinc_power_log_abs(const SincPowerParams& p, double x);

/// log sup_{x in [x_min, 0]} |h(x)|: dense grid with `points_per_lobe`
/// points per lobe of width pi*n, then golden-section refinement in the
/// bracket around the best grid point. Requires x_min <= -d.
double negative_axis_sup(const SincPowerParams& p, double x_min, int points_per_lobe = 50);

struct LowerBound {
  double log_bound = 0.0;  // natural log of the certified M(d) lower bound
  int best_n = 0;          // 0 when no witness beats the trivial bound
};

/// max over n = 1..n_max of -negative_axis_sup(n, d); ties go to the smaller n.
LowerBound lower_bound_at(double d, int n_max, int points_per_lobe = 50);

struct LowerBoundCurve {
  std::vector<double> d_values;
  std::vector<double> log_lower_bound;
  std::vector<int> argmax_n;
  double fitted_rate = 0.0;
  double fit_intercept = 0.0;
  double fit_r2 = 0.0;
  int n_max = 0;
};

/// Least-squares line through (d, log_bound). Throws ParameterError for fewer
/// than 3 points or a non-increasing d list.
LowerBoundCurve rate_fit(std::span<const double> d_values, int n_max, int points_per_lobe = 50);

}  // namespace bandlab
