#pragma once

// Numerical analytic continuation by rational approximation: sample an
// oscillatory signal on an observation interval, fit a barycentric rational
// approximant greedily, extrapolate to the right and measure how many
// dominant wavelengths stay accurate.

#include <array>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace bandlab {

struct CosineTerm {
  double amplitude = 1.0;
  double frequency = 1.0;
  double phase = 0.0;
};

struct LorenzSpec {
  double sigma = 10.0;
  double rho = 28.0;
  double beta = 8.0 / 3.0;
  std::array<double, 3> initial_state{1.0, 1.0, 1.0};
  int component = 2;          // 0 = x, 1 = y, 2 = z
  double transient = 20.0;    // discarded before the observation starts
  double time_offset = 0.0;   // extra lead time on top of the transient
  double max_step = 1e-3;     // RK4 internal step bound
};

struct SignalSpec {
  enum class Kind { cosine_mix, lorenz_component };
  Kind kind = Kind::cosine_mix;
  std::vector<CosineTerm> cosine_terms{CosineTerm{}};
  LorenzSpec lorenz;
  double t0 = -40.0 * std::numbers::pi;
  double t1 = 0.0;
  std::size_t n_samples = 2000;

  void validate() const;
};

struct SampledSignal {
  std::vector<double> t;
  std::vector<double> values;
};

/// Fixed-step RK4 solution of the Lorenz system, stored on the internal step
/// grid and read back by cubic Hermite interpolation.
class LorenzSolution {
 public:
  /// The initial state sits at t_start - transient - time_offset; integrates
  /// from there to t_end. Throws EvaluationError with the time stamp if the
  /// state becomes non-finite.
  LorenzSolution(const LorenzSpec& spec, double t_start, double t_end);

  double value(double t, int component) const;
  std::array<double, 3> state(double t) const;
  double t_begin() const noexcept { return t_begin_; }
  double t_end() const noexcept { return t_end_; }
  double step() const noexcept { return step_; }

 private:
  LorenzSpec spec_;
  double t_begin_;
  double t_end_;
  double step_;
  std::vector<std::array<double, 3>> states_;
};

/// Samples of the selected Lorenz component on the uniform observation grid.
SampledSignal lorenz_trajectory(const SignalSpec& spec);

/// Samples of either signal kind on the observation grid.
SampledSignal sample_signal(const SignalSpec& spec);

/// Callable truth for the signal (valid up to t_end for Lorenz).
std::function<double(double)> signal_function(const SignalSpec& spec, double t_end);

struct RationalApproximant {
  std::vector<double> support_points;
  std::vector<double> support_values;
  std::vector<double> weights;
  double achieved_error = 0.0;  // max |f - r| over non-support samples
  double data_scale = 0.0;      // max |f| over the fitted samples
  double tolerance = 0.0;       // requested relative fit tolerance
  double interval_lo = 0.0;
  double interval_hi = 0.0;
  std::size_t removed_doublets = 0;

  std::size_t degree() const noexcept {
    return support_points.empty() ? 0 : support_points.size() - 1;
  }
  void validate() const;
};

/// Greedy barycentric fit: each step adds the sample with the largest
/// residual as a support point and takes the weights from the smallest right
/// singular vector of the Loewner matrix. Stops when the residual drops to
/// tol * max|f| or at max_degree. Poles on the observation interval with
/// residue below tol * max|f| are removed once afterwards.
RationalApproximant aaa_fit(std::span<const double> x, std::span<const double> f, double tol,
                            std::size_t max_degree = 100);

/// Barycentric value; exact at support points, NaN at a pole.
double rational_eval(const RationalApproximant& r, double x);

struct Pole {
  double re = 0.0;
  double im = 0.0;
  double residue_abs = 0.0;
};

/// Poles and residue magnitudes from the arrowhead generalized eigenproblem.
std::vector<Pole> rational_poles(const RationalApproximant& r);

enum class WavelengthMethod { spectral_peak, zero_crossings };

struct WavelengthEstimate {
  double wavelength = 0.0;
  WavelengthMethod method = WavelengthMethod::spectral_peak;
  double peak_to_median = 0.0;
};

/// 2 pi / k*, k* the magnitude-weighted spectral peak of the mean-removed
/// signal; falls back to twice the mean zero-crossing spacing when the peak
/// is less than twice the median magnitude. Requires >= 100 uniform samples.
WavelengthEstimate dominant_wavelength_estimate(std::span<const double> x,
                                                std::span<const double> f);
double dominant_wavelength(std::span<const double> x, std::span<const double> f);

struct HorizonReport {
  double wavelength = 0.0;
  double horizon_abs = 0.0;
  double horizon_wavelengths = 0.0;
  double error_threshold = 0.0;
  double fit_tolerance = 0.0;
  double digits = 0.0;
  bool capped = false;  // error stayed below threshold over 10 wavelengths
};

/// Scans x = t1 + j*lambda/200; horizon is the first x - t1 at which
/// |r - truth| / max|truth on the observation grid| exceeds err_threshold.
HorizonReport horizon_measure(const std::function<double(double)>& truth,
                              const RationalApproximant& r, double t1, double lambda,
                              double err_threshold);

/// ln(10^digits) / (2 pi).
double rate_constant(double digits);

}  // namespace bandlab
