#include "bandlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "bandlab/error.hpp"
#include "bandlab/kernels.hpp"

namespace bandlab {

namespace {

using cplx = std::complex<double>;

// Composite trapezoid weight of node j out of n.
double trapezoid_weight(std::size_t j, std::size_t n) {
  return (j == 0 || j + 1 == n) ? 0.5 : 1.0;
}

}  // namespace

UniformGrid::UniformGrid(double lo, double hi, std::size_t n) : lo_(lo), hi_(hi), n_(n) {
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw ParameterError("UniformGrid: non-finite bounds");
  if (n == 0) throw ParameterError("UniformGrid: empty grid");
  if (n > 1 && !(lo < hi)) throw ParameterError("UniformGrid: need lo < hi");
  if (n == 1 && lo != hi) throw ParameterError("UniformGrid: single point needs lo == hi");
}

UniformGrid UniformGrid::symmetric(double half_width, std::size_t n) {
  if (n == 1) return UniformGrid(0.0, 0.0, 1);
  if (!(half_width > 0.0)) throw ParameterError("UniformGrid: half_width must be > 0");
  return UniformGrid(-half_width, half_width, n);
}

double UniformGrid::step() const noexcept {
  return n_ > 1 ? (hi_ - lo_) / static_cast<double>(n_ - 1) : 0.0;
}

double UniformGrid::value(std::size_t i) const noexcept {
  if (n_ == 1) return lo_;
  if (is_symmetric()) {
    // hi * (2i - (n-1)) / (n-1): the integer numerator is negated exactly
    // under i -> n-1-i.
    const double num = 2.0 * static_cast<double>(i) - static_cast<double>(n_ - 1);
    return hi_ * num / static_cast<double>(n_ - 1);
  }
  if (i + 1 == n_) return hi_;
  return lo_ + static_cast<double>(i) * step();
}

std::vector<double> UniformGrid::values() const {
  std::vector<double> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = value(i);
  return out;
}

void SpectrumEstimate::validate() const {
  if (k_values.empty()) throw ParameterError("SpectrumEstimate: empty k grid");
  if (k_values.size() != F_values.size())
    throw ParameterError("SpectrumEstimate: k and F lengths differ");
  const std::size_t n = k_values.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (k_values[i] != -k_values[n - 1 - i])
      throw ParameterError("SpectrumEstimate: k grid is not symmetric about 0");
  }
  if (!(window_halfwidth > 0.0)) throw ParameterError("SpectrumEstimate: L must be > 0");
  if (!(x_step > 0.0) || !(x_step < kPi))
    throw ParameterError("SpectrumEstimate: need 0 < h < pi");
}

double SpectrumEstimate::k_step() const {
  return k_values.size() > 1 ? (k_values.back() - k_values.front()) /
                                   static_cast<double>(k_values.size() - 1)
                             : 0.0;
}

SpectrumEstimate forward_transform(const RealFunction& f, double L, double h,
                                   const UniformGrid& k_grid) {
  if (!(L > 0.0) || !(h > 0.0)) throw ParameterError("forward_transform: need L > 0, h > 0");
  if (!(h < kPi)) throw ParameterError("forward_transform: need h < pi");
  const auto half = static_cast<long>(std::floor(L / h + 1e-9));
  if (half < 1) throw ParameterError("forward_transform: window shorter than one step");

  std::vector<double> values(static_cast<std::size_t>(2 * half + 1));
  for (long j = -half; j <= half; ++j) {
    const double x = static_cast<double>(j) * h;
    const double v = f(x);
    if (!std::isfinite(v))
      throw EvaluationError("forward_transform: non-finite f(" + std::to_string(x) + ")", x);
    values[static_cast<std::size_t>(j + half)] = v;
  }
  return forward_transform_sampled(-static_cast<double>(half) * h, h, values, k_grid);
}

SpectrumEstimate forward_transform_sampled(double x0, double h, std::span<const double> values,
                                           const UniformGrid& k_grid, double log_scale) {
  if (values.size() < 2) throw ParameterError("forward_transform: need at least two samples");
  if (!(h > 0.0) || !(h < kPi)) throw ParameterError("forward_transform: need 0 < h < pi");

  const std::size_t n = values.size();
  std::vector<cplx> coeff(n);
  const double scale = h / (2.0 * kPi);
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(values[j]))
      throw EvaluationError("forward_transform: non-finite sample",
                            x0 + static_cast<double>(j) * h);
    coeff[j] = trapezoid_weight(j, n) * scale * values[j];
  }

  SpectrumEstimate S;
  S.k_values = k_grid.values();
  S.F_values.resize(S.k_values.size());
  kernels::exponential_sum({x0, h}, coeff, S.k_values, -1, S.F_values);
  S.x_step = h;
  S.window_halfwidth = 0.5 * h * static_cast<double>(n - 1);
  S.window_center = x0 + S.window_halfwidth;
  S.log_scale = log_scale;
  S.validate();
  return S;
}

std::vector<cplx> inverse_transform(const SpectrumEstimate& S, std::span<const double> xs) {
  S.validate();
  const std::size_t n = S.k_values.size();
  std::vector<cplx> out(xs.size());
  if (n == 1) {
    // Degenerate single-node rule: no interval to integrate over.
    std::fill(out.begin(), out.end(), cplx{});
    return out;
  }
  const double dk = S.k_step();
  std::vector<cplx> coeff(n);
  for (std::size_t j = 0; j < n; ++j) coeff[j] = trapezoid_weight(j, n) * dk * S.F_values[j];
  kernels::exponential_sum({S.k_values.front(), dk}, coeff, xs, +1, out);
  return out;
}

cplx inverse_transform(const SpectrumEstimate& S, double x) {
  if (!std::isfinite(x)) throw DomainError("inverse_transform: non-finite abscissa");
  const double xs[1] = {x};
  return inverse_transform(S, xs)[0];
}

LeakageReport band_leakage(const SpectrumEstimate& S, double band_edge) {
  S.validate();
  const std::size_t n = S.k_values.size();
  if (n < 2) throw ParameterError("band_leakage: need at least two k points");
  if (!(band_edge > 0.0) || !(band_edge < S.k_values.back()))
    throw ParameterError("band_leakage: band edge must lie inside the k grid");

  const double dk = S.k_step();
  double in_band = 0.0;
  double out_band = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double e = trapezoid_weight(j, n) * dk * std::norm(S.F_values[j]);
    if (std::abs(S.k_values[j]) <= band_edge)
      in_band += e;
    else
      out_band += e;
  }
  const double total = in_band + out_band;
  if (!(total > 0.0)) throw ParameterError("band_leakage: total spectral energy is zero");

  LeakageReport r;
  r.total_energy = total;
  r.in_band_energy = in_band;
  // out/total directly, so a tiny leakage is not lost to cancellation.
  r.leakage_fraction = std::clamp(out_band / total, 0.0, 1.0);
  r.band_edge = band_edge;
  r.window_halfwidth = S.window_halfwidth;
  r.x_step = S.x_step;
  r.k_min = S.k_values.front();
  r.k_max = S.k_values.back();
  r.k_points = n;
  return r;
}

double StripBoundReport::log_constant() const {
  if (sup_log_ratio.empty()) return -std::numeric_limits<double>::infinity();
  return *std::max_element(sup_log_ratio.begin(), sup_log_ratio.end());
}

bool StripBoundReport::bounded_uniformly(double slack) const {
  if (sup_log_ratio.empty()) return false;
  std::map<double, double> by_level;  // |y| -> max ratio at that level
  for (std::size_t i = 0; i < y_values.size(); ++i) {
    if (!std::isfinite(sup_log_ratio[i])) return false;
    const double level = std::abs(y_values[i]);
    auto [it, inserted] = by_level.try_emplace(level, sup_log_ratio[i]);
    if (!inserted) it->second = std::max(it->second, sup_log_ratio[i]);
  }
  const double reference = by_level.begin()->second;
  for (const auto& [level, ratio] : by_level)
    if (ratio > reference + slack) return false;
  return true;
}

StripBoundReport strip_bound_check(const LogAbsFunction& log_abs_f, double b,
                                   std::span<const double> y_list, const EvalWindow& window) {
  if (y_list.empty()) throw ParameterError("strip_bound_check: empty y list");
  if (!(b > 0.0)) throw ParameterError("strip_bound_check: rate b must be > 0");
  window.validate();
  const auto xs = window.points();

  StripBoundReport r;
  r.type_halfrate = b;
  r.x_window = window;
  for (const double y : y_list) {
    if (!std::isfinite(y)) throw ParameterError("strip_bound_check: non-finite y");
    double best = -std::numeric_limits<double>::infinity();
    double best_x = xs.front();
    for (const double x : xs) {
      const double v = log_abs_f({x, y});
      if (std::isnan(v) || v == std::numeric_limits<double>::infinity())
        throw EvaluationError("strip_bound_check: log|f| not finite at x = " +
                                  std::to_string(x) + ", y = " + std::to_string(y),
                              x);
      if (v > best) {
        best = v;
        best_x = x;
      }
    }
    r.y_values.push_back(y);
    r.sup_log_ratio.push_back(best - b * std::abs(y));
    r.argsup_x.push_back(best_x);
  }
  return r;
}

StripBoundReport strip_bound_check(const ComplexFunction& f, double b,
                                   std::span<const double> y_list, const EvalWindow& window) {
  const LogAbsFunction log_abs = [&f](std::complex<double> z) { return std::log(std::abs(f(z))); };
  return strip_bound_check(log_abs, b, y_list, window);
}

}  // namespace bandlab
