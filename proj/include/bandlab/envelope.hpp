#pragma once

// Rapidly decaying band-limited envelope psi(x) = prod_{k=1..N} sinc(a_k x),
// a_k = c k^{-1/sigma}. The band of psi is sum a_k, and on |x| <~ x_max it
// decays like exp(-C |x|^sigma) for sigma in (1/2, 1).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace bandlab {

class EnvelopeSpec {
 public:
  static constexpr double kTermMargin = 4.0;
  static constexpr std::size_t kMaxTerms = 1'000'000;

  double sigma() const noexcept { return sigma_; }
  double band_budget() const noexcept { return band_budget_; }
  double x_max() const noexcept { return x_max_; }
  double scale_c() const noexcept { return scale_c_; }
  std::size_t n_terms() const noexcept { return coefficients_.size(); }
  std::span<const double> coefficients() const noexcept { return coefficients_; }

  /// sum a_k, the half-width of the spectral support.
  double band() const noexcept { return band_; }

  /// Stable 64-bit fingerprint of (sigma, budget, coefficients), used to tag
  /// reports whose numbers depend on the envelope choice.
  std::uint64_t fingerprint() const noexcept;

  /// Copy with factor k (1-based) removed.
  EnvelopeSpec without_factor(std::size_t k) const;

 private:
  friend EnvelopeSpec build_envelope(double, double, double);
  EnvelopeSpec() = default;

  double sigma_ = 0.75;
  double band_budget_ = 0.5;
  double x_max_ = 0.0;
  double scale_c_ = 0.0;
  double band_ = 0.0;
  std::vector<double> coefficients_;
};

/// N = ceil(4 x_max^sigma), c = band_budget / sum_{k<=N} k^{-1/sigma}.
/// Throws ParameterError for sigma outside (1/2, 1), band_budget outside
/// (0, 1/2] or x_max <= 1, ResourceError when N exceeds 10^6.
EnvelopeSpec build_envelope(double sigma, double band_budget = 0.5, double x_max = 100.0);

/// psi(z); real and even on the real axis. Accumulated in log space.
std::complex<double> envelope_eval(const EnvelopeSpec& spec, std::complex<double> z);
double envelope_eval(const EnvelopeSpec& spec, double x);

/// sum_k log|sinc(a_k z)|; -inf when z is exactly a zero of a factor.
double envelope_log_abs(const EnvelopeSpec& spec, std::complex<double> z);

/// Batched real-axis log|psi| and sign (parallel kernel).
void envelope_log_abs(const EnvelopeSpec& spec, std::span<const double> xs,
                      std::span<double> log_abs, std::span<int> sign);

/// log|sinc(w)| for complex w, stable for large |Im w|.
double log_abs_sinc(std::complex<double> w);

struct DecayFitReport {
  std::vector<double> x_probes;
  std::vector<double> log_abs_psi;
  double fitted_exponent = 0.0;
  double fit_intercept = 0.0;
  double x_lo = 0.0;
  double x_hi = 0.0;
  std::size_t perturbed_probes = 0;
};

/// Least-squares slope of log(-log|psi(x)|) against log x on n_probes
/// log-spaced probes in [x_lo, x_hi]. A probe within 1e-9 of a zero of some
/// factor is moved to the midpoint of the two zeros of psi bracketing it.
DecayFitReport decay_fit(const EnvelopeSpec& spec, double x_lo, double x_hi,
                         std::size_t n_probes);

/// Same regression for an arbitrary log|f| profile (used for controls).
DecayFitReport decay_fit(const std::function<double(double)>& log_abs_f, double x_lo,
                         double x_hi, std::size_t n_probes);

}  // namespace bandlab
