#include "bandlab/landau.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include "bandlab/blcore.hpp"
#include "bandlab/error.hpp"
#include "line_fit.hpp"

namespace bandlab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Maximizes a function that is unimodal on [lo, hi].
template <class F>
double golden_section_max(F&& f, double lo, double hi, double& best_value) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && (b - a) > 1e-13 * std::max(1.0, std::abs(a) + std::abs(b)); ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  best_value = f(x);
  return x;
}

}  // namespace

void SincPowerParams::validate() const {
  if (n < 1) throw ParameterError("SincPowerParams: need n >= 1");
  if (!(d > 0.0) || !std::isfinite(d)) throw ParameterError("SincPowerParams: need finite d > 0");
}

double sinc_power_log_abs(const SincPowerParams& p, double x) {
  p.validate();
  if (!std::isfinite(x)) throw DomainError("sinc_power_log_abs: non-finite argument");
  const double s = sinc((x - p.d) / static_cast<double>(p.n));
  if (s == 0.0) return kNegInf;
  return static_cast<double>(p.n) * std::log(std::abs(s));
}

double negative_axis_sup(const SincPowerParams& p, double x_min, int points_per_lobe) {
  p.validate();
  if (!(x_min <= -p.d)) throw ParameterError("negative_axis_sup: need x_min <= -d");
  if (points_per_lobe < 4) throw ParameterError("negative_axis_sup: need >= 4 points per lobe");
  const double n = static_cast<double>(p.n);
  const double step = kPi * n / static_cast<double>(points_per_lobe);
  const auto count = static_cast<std::int64_t>(std::ceil(-x_min / step));

  // Grid x_i = -i*step (i = 0..count), clipped at x_min.
  auto grid_x = [&](std::int64_t i) { return std::max(x_min, -static_cast<double>(i) * step); };
  auto value = [&](double x) {
    const double s = sinc((x - p.d) / n);
    return s == 0.0 ? kNegInf : n * std::log(std::abs(s));
  };

  std::int64_t best_i = 0;
  double best = value(0.0);
  for (std::int64_t i = 1; i <= count; ++i) {
    const double v = value(grid_x(i));
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  // |h| is unimodal between consecutive zeros, and the grid resolves each
  // lobe, so the true maximum lies between the neighbours of best_i.
  const double hi = grid_x(std::max<std::int64_t>(best_i - 1, 0));
  const double lo = grid_x(std::min(best_i + 1, count));
  if (hi > lo) {
    double refined = kNegInf;
    golden_section_max(value, lo, hi, refined);
    best = std::max(best, refined);
  }
  return best;
}

LowerBound lower_bound_at(double d, int n_max, int points_per_lobe) {
  if (!(d > 0.0) || !std::isfinite(d)) throw ParameterError("lower_bound_at: need finite d > 0");
  if (n_max < 1) throw ParameterError("lower_bound_at: need n_max >= 1");

  std::vector<double> gain(static_cast<std::size_t>(n_max));
#pragma omp parallel for schedule(dynamic, 4)
  for (int n = 1; n <= n_max; ++n) {
    // The sup over x <= 0 is attained within the first lobes past t = d/n;
    // three lobe widths beyond the origin cover them.
    const double x_min = -std::max(d, 3.0 * kPi * static_cast<double>(n));
    gain[static_cast<std::size_t>(n - 1)] =
        -negative_axis_sup({n, d}, x_min, points_per_lobe);
  }

  LowerBound r;
  for (int n = 1; n <= n_max; ++n) {
    const double g = gain[static_cast<std::size_t>(n - 1)];
    if (g > r.log_bound) {
      r.log_bound = g;
      r.best_n = n;
    }
  }
  return r;
}

LowerBoundCurve rate_fit(std::span<const double> d_values, int n_max, int points_per_lobe) {
  if (d_values.size() < 3) throw ParameterError("rate_fit: need at least 3 distances");
  for (std::size_t i = 1; i < d_values.size(); ++i)
    if (!(d_values[i] > d_values[i - 1]))
      throw ParameterError("rate_fit: distances must be strictly increasing");

  LowerBoundCurve c;
  c.n_max = n_max;
  for (const double d : d_values) {
    const auto lb = lower_bound_at(d, n_max, points_per_lobe);
    c.d_values.push_back(d);
    c.log_lower_bound.push_back(lb.log_bound);
    c.argmax_n.push_back(lb.best_n);
  }
  const auto fit = detail::fit_line(c.d_values, c.log_lower_bound);
  c.fitted_rate = fit.slope;
  c.fit_intercept = fit.intercept;
  c.fit_r2 = fit.r2;
  return c;
}

}  // namespace bandlab
