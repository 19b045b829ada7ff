#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <numeric>
#include <vector>

#include "bandlab/continuation.hpp"
#include "bandlab/error.hpp"
#include "bandlab/kernels.hpp"

namespace bandlab {

void SignalSpec::validate() const {
  if (!(t0 < t1)) throw ParameterError("SignalSpec: need t0 < t1");
  if (n_samples < 50) throw ParameterError("SignalSpec: need n_samples >= 50");
  if (kind == Kind::cosine_mix) {
    if (cosine_terms.empty()) throw ParameterError("SignalSpec: no cosine terms");
    for (const auto& c : cosine_terms)
      if (!(c.frequency > 0.0)) throw ParameterError("SignalSpec: cosine frequencies must be > 0");
  }
}

std::function<double(double)> signal_function(const SignalSpec& spec, double t_end) {
  spec.validate();
  if (spec.kind == SignalSpec::Kind::cosine_mix) {
    return [terms = spec.cosine_terms](double t) {
      double v = 0.0;
      for (const auto& c : terms) v += c.amplitude * std::cos(c.frequency * t + c.phase);
      return v;
    };
  }
  auto sol =
      std::make_shared<const LorenzSolution>(spec.lorenz, spec.t0, std::max(t_end, spec.t1));
  return [sol, comp = spec.lorenz.component](double t) { return sol->value(t, comp); };
}

SampledSignal sample_signal(const SignalSpec& spec) {
  spec.validate();
  if (spec.kind == SignalSpec::Kind::lorenz_component) return lorenz_trajectory(spec);
  const auto f = signal_function(spec, spec.t1);
  SampledSignal out;
  out.t.resize(spec.n_samples);
  out.values.resize(spec.n_samples);
  const double dt = (spec.t1 - spec.t0) / static_cast<double>(spec.n_samples - 1);
  for (std::size_t i = 0; i < spec.n_samples; ++i) {
    const double t = (i + 1 == spec.n_samples) ? spec.t1 : spec.t0 + static_cast<double>(i) * dt;
    out.t[i] = t;
    out.values[i] = f(t);
  }
  return out;
}

namespace {

double zero_crossing_wavelength(std::span<const double> x, std::span<const double> dev) {
  std::vector<double> crossings;
  for (std::size_t i = 0; i + 1 < dev.size(); ++i) {
    if ((dev[i] < 0.0 && dev[i + 1] >= 0.0) || (dev[i] >= 0.0 && dev[i + 1] < 0.0)) {
      const double s = dev[i] / (dev[i] - dev[i + 1]);
      crossings.push_back(x[i] + s * (x[i + 1] - x[i]));
    }
  }
  if (crossings.size() < 2)
    throw ParameterError("dominant_wavelength: fewer than two zero crossings");
  const double mean_gap =
      (crossings.back() - crossings.front()) / static_cast<double>(crossings.size() - 1);
  return 2.0 * mean_gap;
}

}  // namespace

WavelengthEstimate dominant_wavelength_estimate(std::span<const double> x,
                                                std::span<const double> f) {
  if (x.size() != f.size()) throw ParameterError("dominant_wavelength: length mismatch");
  const std::size_t n = x.size();
  if (n < 100) throw ParameterError("dominant_wavelength: need at least 100 samples");
  const double h = (x.back() - x.front()) / static_cast<double>(n - 1);
  if (!(h > 0.0)) throw ParameterError("dominant_wavelength: abscissae must increase");
  for (std::size_t i = 1; i < n; ++i)
    if (std::abs((x[i] - x[i - 1]) - h) > 1e-6 * h)
      throw ParameterError("dominant_wavelength: samples must be uniformly spaced");

  const double mean = std::accumulate(f.begin(), f.end(), 0.0) / static_cast<double>(n);
  std::vector<double> dev(n);
  double dev_max = 0.0;
  double f_max = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    dev[i] = f[i] - mean;
    dev_max = std::max(dev_max, std::abs(dev[i]));
    f_max = std::max(f_max, std::abs(f[i]));
  }
  if (dev_max <= 1e-14 * std::max(1.0, f_max))
    throw ParameterError("dominant_wavelength: constant signal has no wavelength");

  // Wave numbers from one eighth of the fundamental up to Nyquist.
  const double span = h * static_cast<double>(n);
  const double dk = 2.0 * std::numbers::pi / (8.0 * span);
  const auto n_k = static_cast<std::size_t>(std::floor((std::numbers::pi / h) / dk));
  std::vector<double> ks(n_k);
  for (std::size_t i = 0; i < n_k; ++i) ks[i] = dk * static_cast<double>(i + 1);
  std::vector<std::complex<double>> coeff(dev.begin(), dev.end());
  std::vector<std::complex<double>> F(n_k);
  kernels::exponential_sum({x.front(), h}, coeff, ks, -1, F);
  std::vector<double> mag(n_k);
  for (std::size_t i = 0; i < n_k; ++i) mag[i] = std::abs(F[i]);

  const auto peak_it = std::max_element(mag.begin(), mag.end());
  const auto peak = static_cast<std::size_t>(peak_it - mag.begin());
  std::vector<double> sorted = mag;
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<long>(n_k / 2), sorted.end());
  const double median = sorted[n_k / 2];

  WavelengthEstimate est;
  est.peak_to_median = median > 0.0 ? *peak_it / median : std::numeric_limits<double>::infinity();
  if (est.peak_to_median < 2.0) {
    est.method = WavelengthMethod::zero_crossings;
    est.wavelength = zero_crossing_wavelength(x, dev);
    return est;
  }
  // Magnitude-weighted centroid over the contiguous half-maximum lobe.
  const double half = 0.5 * *peak_it;
  std::size_t lo = peak;
  std::size_t hi = peak;
  while (lo > 0 && mag[lo - 1] >= half) --lo;
  while (hi + 1 < n_k && mag[hi + 1] >= half) ++hi;
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = lo; i <= hi; ++i) {
    num += ks[i] * mag[i];
    den += mag[i];
  }
  est.method = WavelengthMethod::spectral_peak;
  est.wavelength = 2.0 * std::numbers::pi / (num / den);
  return est;
}

double dominant_wavelength(std::span<const double> x, std::span<const double> f) {
  return dominant_wavelength_estimate(x, f).wavelength;
}

HorizonReport horizon_measure(const std::function<double(double)>& truth,
                              const RationalApproximant& r, double t1, double lambda,
                              double err_threshold) {
  r.validate();
  if (!(lambda > 0.0)) throw ParameterError("horizon_measure: need lambda > 0");
  if (!(err_threshold > 0.0)) throw ParameterError("horizon_measure: need err_threshold > 0");
  constexpr int kStepsPerWavelength = 200;
  constexpr int kMaxWavelengths = 10;

  HorizonReport rep;
  rep.wavelength = lambda;
  rep.error_threshold = err_threshold;
  rep.fit_tolerance = r.tolerance;
  rep.digits = r.tolerance > 0.0 ? -std::log10(r.tolerance) : 0.0;
  const double scale = r.data_scale > 0.0 ? r.data_scale : 1.0;
  const double step = lambda / kStepsPerWavelength;
  const int n_steps = kStepsPerWavelength * kMaxWavelengths;
  for (int j = 1; j <= n_steps; ++j) {
    const double x = t1 + static_cast<double>(j) * step;
    const double err = std::abs(rational_eval(r, x) - truth(x)) / scale;
    if (!(err <= err_threshold)) {
      rep.horizon_abs = static_cast<double>(j) * step;
      rep.horizon_wavelengths = rep.horizon_abs / lambda;
      return rep;
    }
  }
  rep.capped = true;
  rep.horizon_abs = static_cast<double>(n_steps) * step;
  rep.horizon_wavelengths = rep.horizon_abs / lambda;
  return rep;
}

double rate_constant(double digits) {
  if (!(digits > 0.0) || !std::isfinite(digits))
    throw ParameterError("rate_constant: digits must be finite and > 0");
  return digits * std::numbers::ln10 / (2.0 * std::numbers::pi);
}

}  // namespace bandlab
