#pragma once

// Trapezoid-rule Fourier analysis on uniform grids.
//
// Convention: F(k) = (1/2pi) int f(x) e^{-ikx} dx and f(x) = int F(k) e^{ikx} dk,
// so a signal band-limited to [-1, 1] has F supported there and sinc has
// F = 1/2 on the band.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "bandlab/blcore.hpp"

namespace bandlab {

/// Uniform grid lo + i*(hi-lo)/(n-1). Symmetric grids are generated from
/// integer offsets so that value(n-1-i) == -value(i) exactly.
class UniformGrid {
 public:
  UniformGrid(double lo, double hi, std::size_t n);
  static UniformGrid symmetric(double half_width, std::size_t n);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  std::size_t size() const noexcept { return n_; }
  double step() const noexcept;
  double value(std::size_t i) const noexcept;
  std::vector<double> values() const;
  bool is_symmetric() const noexcept { return lo_ == -hi_; }

 private:
  double lo_;
  double hi_;
  std::size_t n_;
};

struct SpectrumEstimate {
  std::vector<double> k_values;
  std::vector<std::complex<double>> F_values;
  double window_halfwidth = 0.0;  // L
  double window_center = 0.0;     // x-window is [center - L, center + L]
  double x_step = 0.0;            // h
  /// F_values hold exp(-log_scale) * F; zero unless the input was rescaled.
  double log_scale = 0.0;

  /// Throws ParameterError on a malformed estimate.
  void validate() const;
  double k_step() const;
};

struct LeakageReport {
  double total_energy = 0.0;
  double in_band_energy = 0.0;
  double leakage_fraction = 0.0;
  double band_edge = 1.0;
  double window_halfwidth = 0.0;
  double x_step = 0.0;
  double k_min = 0.0;
  double k_max = 0.0;
  std::size_t k_points = 0;
};

struct StripBoundReport {
  std::vector<double> y_values;
  std::vector<double> sup_log_ratio;
  std::vector<double> argsup_x;
  double type_halfrate = 1.0;  // b in |f(x+iy)| <= C e^{b|y|}
  EvalWindow x_window;

  /// log C, the largest sup_log_ratio over the tested strips.
  double log_constant() const;
  /// True when the ratio at larger |y| never exceeds the largest ratio seen
  /// at the smallest tested |y| by more than `slack`.
  bool bounded_uniformly(double slack = 1e-9) const;
};

/// Default grid: L = 200, h = 0.05, k in [-8, 8] with 4001 points.
struct SpectralGridDefaults {
  static constexpr double window_halfwidth = 200.0;
  static constexpr double x_step = 0.05;
  static constexpr double k_half_width = 8.0;
  static constexpr std::size_t k_points = 4001;
  static UniformGrid k_grid() { return UniformGrid::symmetric(k_half_width, k_points); }
};

/// Trapezoid rule on x_j = j*h, |j| <= floor(L/h). Throws EvaluationError at
/// the first non-finite f value.
SpectrumEstimate forward_transform(const RealFunction& f, double L, double h,
                                   const UniformGrid& k_grid);

/// Trapezoid rule on pre-sampled values v_j = f(x0 + j*h), optionally already
/// divided by exp(log_scale).
SpectrumEstimate forward_transform_sampled(double x0, double h, std::span<const double> values,
                                           const UniformGrid& k_grid, double log_scale = 0.0);

/// Trapezoid rule for int F(k) e^{ikx} dk over the stored k grid.
std::complex<double> inverse_transform(const SpectrumEstimate& S, double x);
std::vector<std::complex<double>> inverse_transform(const SpectrumEstimate& S,
                                                    std::span<const double> xs);

/// Energy of |F|^2 outside |k| <= band_edge as a fraction of the total.
/// Throws ParameterError when the total energy is zero.
LeakageReport band_leakage(const SpectrumEstimate& S, double band_edge = 1.0);

/// log|f(z)|, the form in which strip checks consume a function.
using LogAbsFunction = std::function<double(std::complex<double>)>;
using ComplexFunction = std::function<std::complex<double>(std::complex<double>)>;

/// For each y, sup over the window of log|f(x+iy)| - b|y|.
StripBoundReport strip_bound_check(const LogAbsFunction& log_abs_f, double b,
                                   std::span<const double> y_list, const EvalWindow& window);

/// Convenience overload for functions representable in double precision.
StripBoundReport strip_bound_check(const ComplexFunction& f, double b,
                                   std::span<const double> y_list, const EvalWindow& window);

}  // namespace bandlab
