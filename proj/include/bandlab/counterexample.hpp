#pragma once

// The one-sided-bounded family f_a = g_a * psi with g_a(x) = cos(a sqrt(-x))
// = cosh(a sqrt(x)). Every member is bounded by 1 on x <= 0, band-limited
// through psi, and |f_a(x)| -> infinity as a -> infinity for each x > 0.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "bandlab/blcore.hpp"
#include "bandlab/envelope.hpp"
#include "bandlab/spectral.hpp"

namespace bandlab {

struct CounterexampleParams {
  double a = 10.0;
  EnvelopeSpec envelope;

  /// Throws ParameterError unless a > 0 and sigma > 1/2.
  void validate() const;
};

/// Default envelope: sigma = 0.75, band budget 1/2.
CounterexampleParams make_counterexample(double a, double x_max = 100.0, double sigma = 0.75);

/// cos(a sqrt(-x)) for x <= 0, cosh(a sqrt(x)) for x > 0. Throws
/// OverflowError past the double range (use g_log_abs).
double g_eval(double a, double x);

/// cosh(a w) with w any square root of z; branch independent.
std::complex<double> g_eval(double a, std::complex<double> z);

/// log|g(z)| = Re(aw) - log 2 + log|1 + e^{-2aw}| with Re(aw) >= 0.
/// -inf at a zero of g.
double g_log_abs(double a, std::complex<double> z);

/// (log|g| + log|psi|) / ln 10.
double f_log10_abs(const CounterexampleParams& p, std::complex<double> z);

/// f(x) in linear scale; throws OverflowError when |f| exceeds 1e300.
double f_eval(const CounterexampleParams& p, double x);

struct SideAudit {
  double max_abs = 0.0;            // max |f| over the grid on [x_min, 0]
  std::size_t sign_changes = 0;    // strict sign changes between neighbours
  double min_sign_change_spacing = 0.0;  // smallest gap between successive changes
  double x_min = 0.0;
  std::size_t n_points = 0;
};

/// Uniform grid on [x_min, 0]. Requires x_min < 0, n_points >= 100.
SideAudit bounded_side_audit(const CounterexampleParams& p, double x_min, std::size_t n_points);

struct AuditGrid {
  double x_min = -1000.0;
  std::size_t n_points = 100'000;
};

struct GrowthTable {
  double x_eval = 0.0;
  std::vector<double> a_values;
  std::vector<double> log10_abs_f;
  double bounded_side_max = 0.0;
  std::uint64_t envelope_fingerprint = 0;
};

/// log10|f_a(x_eval)| for each a, plus the bounded-side audit at the largest a.
/// Throws ParameterError when x_eval <= 0, the a list is not strictly
/// increasing, or x_eval sits on a zero of psi (perturb it and retry).
GrowthTable growth_table(const CounterexampleParams& p_base, double x_eval,
                         std::span<const double> a_values, AuditGrid audit = {});

/// Strip check with rate 1/2 on log|f|.
StripBoundReport strip_bound_verify(const CounterexampleParams& p, std::span<const double> y_list,
                                    const EvalWindow& window);

/// Where |f| is within `dynamic_range` nats of its maximum.
struct MagnitudeWindow {
  double x_lo = 0.0;
  double x_hi = 0.0;
  double log_max = 0.0;
  double x_at_max = 0.0;
};

/// Scans log|f| on a coarse grid, widening until both ends fall more than
/// `dynamic_range` nats below the running maximum.
MagnitudeWindow magnitude_window(const CounterexampleParams& p, double dynamic_range = 40.0);

/// Spectrum of f over its magnitude window, with samples divided by exp(log_max)
/// so that the transform stays representable for large a.
SpectrumEstimate counterexample_spectrum(const CounterexampleParams& p, const UniformGrid& k_grid,
                                         double x_step = 0.5, double dynamic_range = 40.0);

}  // namespace bandlab
