#include "bandlab/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bandlab/error.hpp"

namespace bandlab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kMaxLinearLog = 690.0;  // exp(690) ~ 1e300

void check_a(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw ParameterError("counterexample: need finite a > 0");
}

// log|g(x)| on the real axis.
double g_log_abs_real(double a, double x) {
  if (x >= 0.0) {
    const double t = a * std::sqrt(x);
    return t - std::numbers::ln2 + std::log1p(std::exp(-2.0 * t));
  }
  const double c = std::cos(a * std::sqrt(-x));
  return c == 0.0 ? kNegInf : std::log(std::abs(c));
}

int g_sign_real(double a, double x) {
  if (x >= 0.0) return 1;
  const double c = std::cos(a * std::sqrt(-x));
  return (c > 0.0) - (c < 0.0);
}

bool on_envelope_zero(const EnvelopeSpec& spec, double x) {
  for (const double c : spec.coefficients()) {
    const double t = c * x;
    const double m = std::round(t / kPi);
    if (m != 0.0 && std::abs(t - m * kPi) <= 1e-9 * std::max(1.0, std::abs(t))) return true;
  }
  return false;
}

// log|f| and sign on a batch of real points.
void f_log_abs_batch(const CounterexampleParams& p, std::span<const double> xs,
                     std::vector<double>& log_abs, std::vector<int>& sign) {
  log_abs.resize(xs.size());
  sign.resize(xs.size());
  envelope_log_abs(p.envelope, xs, log_abs, sign);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const int gs = g_sign_real(p.a, xs[i]);
    if (gs == 0 || sign[i] == 0) {
      log_abs[i] = kNegInf;
      sign[i] = 0;
      continue;
    }
    log_abs[i] += g_log_abs_real(p.a, xs[i]);
    sign[i] *= gs;
  }
}

}  // namespace

void CounterexampleParams::validate() const {
  check_a(a);
  if (!(envelope.sigma() > 0.5))
    throw ParameterError("counterexample: envelope sigma must exceed 1/2");
}

CounterexampleParams make_counterexample(double a, double x_max, double sigma) {
  CounterexampleParams p{a, build_envelope(sigma, 0.5, x_max)};
  p.validate();
  return p;
}

double g_eval(double a, double x) {
  check_a(a);
  if (!std::isfinite(x)) throw DomainError("g_eval: non-finite argument");
  if (x <= 0.0) return std::cos(a * std::sqrt(-x));
  const double t = a * std::sqrt(x);
  if (t > kMaxLinearLog) throw OverflowError("g_eval: cosh overflows; use g_log_abs");
  return std::cosh(t);
}

std::complex<double> g_eval(double a, std::complex<double> z) {
  check_a(a);
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("g_eval: non-finite argument");
  const std::complex<double> zeta = a * std::sqrt(z);
  if (std::abs(zeta.real()) > kMaxLinearLog)
    throw OverflowError("g_eval: cosh overflows; use g_log_abs");
  return std::cosh(zeta);
}

double g_log_abs(double a, std::complex<double> z) {
  check_a(a);
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("g_log_abs: non-finite argument");
  if (z.imag() == 0.0) return g_log_abs_real(a, z.real());
  // Principal sqrt has Re >= 0, so e^{-2 zeta} is bounded by 1.
  const std::complex<double> zeta = a * std::sqrt(z);
  const double tail = std::abs(1.0 + std::exp(-2.0 * zeta));
  if (tail == 0.0) return kNegInf;
  return zeta.real() - std::numbers::ln2 + std::log(tail);
}

double f_log10_abs(const CounterexampleParams& p, std::complex<double> z) {
  const double lg = g_log_abs(p.a, z);
  const double lp = envelope_log_abs(p.envelope, z);
  if (lg == kNegInf || lp == kNegInf) return kNegInf;
  return (lg + lp) / std::numbers::ln10;
}

double f_eval(const CounterexampleParams& p, double x) {
  const double xs[1] = {x};
  std::vector<double> la;
  std::vector<int> sg;
  check_a(p.a);
  if (!std::isfinite(x)) throw DomainError("f_eval: non-finite argument");
  f_log_abs_batch(p, xs, la, sg);
  if (sg[0] == 0) return 0.0;
  if (la[0] > kMaxLinearLog) throw OverflowError("f_eval: |f| exceeds 1e300; use f_log10_abs");
  return static_cast<double>(sg[0]) * std::exp(la[0]);
}

SideAudit bounded_side_audit(const CounterexampleParams& p, double x_min, std::size_t n_points) {
  p.validate();
  if (!(x_min < 0.0)) throw ParameterError("bounded_side_audit: need x_min < 0");
  if (n_points < 100) throw ParameterError("bounded_side_audit: need n_points >= 100");

  const EvalWindow w{x_min, 0.0, n_points};
  const auto xs = w.points();
  std::vector<double> psi_log(xs.size());
  std::vector<int> psi_sign(xs.size());
  envelope_log_abs(p.envelope, xs, psi_log, psi_sign);

  SideAudit r;
  r.x_min = x_min;
  r.n_points = n_points;
  r.min_sign_change_spacing = std::numeric_limits<double>::infinity();
  int last_sign = 0;
  double last_value_x = 0.0;
  double last_change = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double g = std::cos(p.a * std::sqrt(-xs[i]));
    const double psi = psi_sign[i] == 0 ? 0.0 : psi_sign[i] * std::exp(psi_log[i]);
    const double f = g * psi;
    r.max_abs = std::max(r.max_abs, std::abs(f));
    const int s = (f > 0.0) - (f < 0.0);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) {
      const double at = 0.5 * (last_value_x + xs[i]);
      if (!std::isnan(last_change))
        r.min_sign_change_spacing = std::min(r.min_sign_change_spacing, at - last_change);
      last_change = at;
      ++r.sign_changes;
    }
    last_sign = s;
    last_value_x = xs[i];
  }
  if (r.sign_changes < 2) r.min_sign_change_spacing = 0.0;
  return r;
}

GrowthTable growth_table(const CounterexampleParams& p_base, double x_eval,
                         std::span<const double> a_values, AuditGrid audit) {
  p_base.validate();
  if (!(x_eval > 0.0) || !std::isfinite(x_eval))
    throw ParameterError("growth_table: x_eval must be finite and > 0");
  if (a_values.empty()) throw ParameterError("growth_table: empty a list");
  for (std::size_t i = 0; i < a_values.size(); ++i) {
    check_a(a_values[i]);
    if (i > 0 && !(a_values[i] > a_values[i - 1]))
      throw ParameterError("growth_table: a values must be strictly increasing");
  }
  if (on_envelope_zero(p_base.envelope, x_eval))
    throw ParameterError("growth_table: x_eval = " + std::to_string(x_eval) +
                         " is a zero of psi; perturb x_eval and retry");

  GrowthTable t;
  t.x_eval = x_eval;
  t.envelope_fingerprint = p_base.envelope.fingerprint();
  const double log_psi = envelope_log_abs(p_base.envelope, {x_eval, 0.0});
  for (const double a : a_values) {
    t.a_values.push_back(a);
    t.log10_abs_f.push_back((g_log_abs_real(a, x_eval) + log_psi) / std::numbers::ln10);
  }
  CounterexampleParams largest = p_base;
  largest.a = a_values.back();
  t.bounded_side_max = bounded_side_audit(largest, audit.x_min, audit.n_points).max_abs;
  return t;
}

StripBoundReport strip_bound_verify(const CounterexampleParams& p, std::span<const double> y_list,
                                    const EvalWindow& window) {
  p.validate();
  const LogAbsFunction log_abs = [&p](std::complex<double> z) {
    const double lg = g_log_abs(p.a, z);
    const double lp = envelope_log_abs(p.envelope, z);
    return (lg == kNegInf || lp == kNegInf) ? kNegInf : lg + lp;
  };
  return strip_bound_check(log_abs, 0.5, y_list, window);
}

MagnitudeWindow magnitude_window(const CounterexampleParams& p, double dynamic_range) {
  p.validate();
  if (!(dynamic_range > 0.0)) throw ParameterError("magnitude_window: need dynamic_range > 0");
  constexpr std::size_t kPerOctave = 256;
  constexpr int kMaxOctave = 40;

  struct Probe {
    double x;
    double log_abs;
    double spacing;
  };
  std::vector<Probe> probes;
  std::vector<double> xs(kPerOctave);
  std::vector<double> la;
  std::vector<int> sg;
  double log_max = kNegInf;
  double x_at_max = 0.0;

  // Returns the largest log|f| on [from, to].
  auto scan = [&](double from, double to) {
    const double spacing = (to - from) / static_cast<double>(kPerOctave - 1);
    for (std::size_t i = 0; i < kPerOctave; ++i) xs[i] = from + spacing * static_cast<double>(i);
    f_log_abs_batch(p, xs, la, sg);
    double octave_max = kNegInf;
    for (std::size_t i = 0; i < kPerOctave; ++i) {
      probes.push_back({xs[i], la[i], spacing});
      octave_max = std::max(octave_max, la[i]);
      if (la[i] > log_max) {
        log_max = la[i];
        x_at_max = xs[i];
      }
    }
    return octave_max;
  };

  // Core [-1, 1], then octaves outward on each side until one lies entirely
  // below the running threshold.
  scan(-1.0, 1.0);
  bool left_open = true;
  bool right_open = true;
  for (int j = 0; j < kMaxOctave && (left_open || right_open); ++j) {
    const double inner = std::ldexp(1.0, j);
    const double outer = std::ldexp(1.0, j + 1);
    if (right_open && scan(inner, outer) < log_max - dynamic_range) right_open = false;
    if (left_open && scan(-outer, -inner) < log_max - dynamic_range) left_open = false;
  }
  if (left_open || right_open)
    throw ResourceError(
        "magnitude_window: |f| did not decay within 2^40; the envelope x_max is too small for "
        "this a");

  // Extreme probes above the final threshold, padded by one probe spacing.
  const double threshold = log_max - dynamic_range;
  MagnitudeWindow w{x_at_max, x_at_max, log_max, x_at_max};
  for (const auto& pr : probes) {
    if (!(pr.log_abs >= threshold)) continue;
    w.x_lo = std::min(w.x_lo, pr.x - pr.spacing);
    w.x_hi = std::max(w.x_hi, pr.x + pr.spacing);
  }
  return w;
}

SpectrumEstimate counterexample_spectrum(const CounterexampleParams& p, const UniformGrid& k_grid,
                                         double x_step, double dynamic_range) {
  const auto win = magnitude_window(p, dynamic_range);
  const auto n = static_cast<std::size_t>(std::ceil((win.x_hi - win.x_lo) / x_step)) + 1;
  std::vector<double> xs(n);
  for (std::size_t j = 0; j < n; ++j) xs[j] = win.x_lo + static_cast<double>(j) * x_step;
  std::vector<double> la;
  std::vector<int> sg;
  f_log_abs_batch(p, xs, la, sg);
  std::vector<double> values(n);
  for (std::size_t j = 0; j < n; ++j)
    values[j] = sg[j] == 0 ? 0.0 : static_cast<double>(sg[j]) * std::exp(la[j] - win.log_max);
  return forward_transform_sampled(win.x_lo, x_step, values, k_grid, win.log_max);
}

}  // namespace bandlab
