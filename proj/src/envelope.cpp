#include "bandlab/envelope.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "bandlab/blcore.hpp"
#include "bandlab/error.hpp"
#include "bandlab/kernels.hpp"
#include "kernel_detail.hpp"
#include "line_fit.hpp"

namespace bandlab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::uint64_t fnv1a(std::uint64_t h, double v) {
  auto bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) {
    h ^= (bits & 0xffu);
    h *= 0x100000001b3ull;
    bits >>= 8;
  }
  return h;
}

// arg(sinc(w)) = arg(sin w) - arg(w), with arg(sin w) written through tanh
// so that large |Im w| does not overflow.
double arg_sinc(std::complex<double> w) {
  const double u = w.real();
  const double v = w.imag();
  const double arg_sin = std::atan2(std::cos(u) * std::tanh(v), std::sin(u));
  return arg_sin - std::arg(w);
}

}  // namespace

std::uint64_t EnvelopeSpec::fingerprint() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  h = fnv1a(h, sigma_);
  h = fnv1a(h, band_budget_);
  for (const double a : coefficients_) h = fnv1a(h, a);
  return h;
}

EnvelopeSpec EnvelopeSpec::without_factor(std::size_t k) const {
  if (k < 1 || k > coefficients_.size())
    throw ParameterError("without_factor: index out of range");
  EnvelopeSpec copy = *this;
  copy.coefficients_.erase(copy.coefficients_.begin() + static_cast<long>(k - 1));
  copy.band_ = 0.0;
  for (auto it = copy.coefficients_.rbegin(); it != copy.coefficients_.rend(); ++it)
    copy.band_ += *it;
  return copy;
}

EnvelopeSpec build_envelope(double sigma, double band_budget, double x_max) {
  if (!(sigma > 0.5 && sigma < 1.0))
    throw ParameterError("build_envelope: sigma must lie in (1/2, 1)");
  if (!(band_budget > 0.0 && band_budget <= 0.5))
    throw ParameterError("build_envelope: band_budget must lie in (0, 1/2]");
  if (!(x_max > 1.0) || !std::isfinite(x_max))
    throw ParameterError("build_envelope: x_max must be finite and > 1");

  const double n_real = std::ceil(EnvelopeSpec::kTermMargin * std::pow(x_max, sigma));
  if (n_real > static_cast<double>(EnvelopeSpec::kMaxTerms))
    throw ResourceError("build_envelope: " + std::to_string(static_cast<long long>(n_real)) +
                        " factors needed; choose a smaller x_max");
  const auto n = static_cast<std::size_t>(n_real);

  std::vector<double> base(n);
  for (std::size_t k = 1; k <= n; ++k)
    base[k - 1] = std::pow(static_cast<double>(k), -1.0 / sigma);
  double base_sum = 0.0;
  for (auto it = base.rbegin(); it != base.rend(); ++it) base_sum += *it;

  EnvelopeSpec spec;
  spec.sigma_ = sigma;
  spec.band_budget_ = band_budget;
  spec.x_max_ = x_max;
  double c = band_budget / base_sum;
  // Rounding may leave sum a_k an ulp above the budget; nudge c down.
  for (;;) {
    spec.coefficients_.resize(n);
    double band = 0.0;
    for (std::size_t k = 0; k < n; ++k) spec.coefficients_[k] = c * base[k];
    for (auto it = spec.coefficients_.rbegin(); it != spec.coefficients_.rend(); ++it)
      band += *it;
    if (band <= band_budget) {
      spec.band_ = band;
      break;
    }
    c = std::nextafter(c, 0.0);
  }
  spec.scale_c_ = c;
  return spec;
}

double log_abs_sinc(std::complex<double> w) {
  const double u = w.real();
  const double v = w.imag();
  if (v == 0.0) {
    const double s = kernels::detail::sinc_unchecked(u);
    return s == 0.0 ? kNegInf : std::log(std::abs(s));
  }
  if (std::abs(w) < 1e-4) {
    const auto w2 = w * w;
    return std::log(std::abs(1.0 - w2 / 6.0 + w2 * w2 / 120.0));
  }
  const double av = std::abs(v);
  double log_sin;
  if (av > 20.0) {
    // |sin w| = e^{|v|}/2 * |1 - e^{-2|v|} e^{2iu sgn v}|
    const std::complex<double> tail = std::polar(std::exp(-2.0 * av), 2.0 * u);
    log_sin = av - std::log(2.0) + std::log(std::abs(1.0 - tail));
  } else {
    log_sin = std::log(std::hypot(std::sin(u), std::sinh(v)));
  }
  return log_sin - std::log(std::abs(w));
}

double envelope_log_abs(const EnvelopeSpec& spec, std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("envelope_log_abs: non-finite argument");
  if (z.imag() == 0.0)
    return kernels::detail::log_abs_sinc_product_one(spec.coefficients(), z.real()).log_abs;
  double acc = 0.0;
  for (const double a : spec.coefficients()) {
    const double term = log_abs_sinc(a * z);
    if (term == kNegInf) return kNegInf;
    acc += term;
  }
  return acc;
}

void envelope_log_abs(const EnvelopeSpec& spec, std::span<const double> xs,
                      std::span<double> log_abs, std::span<int> sign) {
  if (log_abs.size() != xs.size() || sign.size() != xs.size())
    throw ParameterError("envelope_log_abs: output spans must match input length");
  kernels::log_abs_sinc_product(spec.coefficients(), xs, log_abs, sign);
}

double envelope_eval(const EnvelopeSpec& spec, double x) {
  if (!std::isfinite(x)) throw DomainError("envelope_eval: non-finite argument");
  const auto r = kernels::detail::log_abs_sinc_product_one(spec.coefficients(), x);
  if (r.sign == 0) return 0.0;
  return static_cast<double>(r.sign) * std::exp(r.log_abs);
}

std::complex<double> envelope_eval(const EnvelopeSpec& spec, std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("envelope_eval: non-finite argument");
  if (z.imag() == 0.0) return {envelope_eval(spec, z.real()), 0.0};
  double log_mag = 0.0;
  double phase = 0.0;
  for (const double a : spec.coefficients()) {
    const std::complex<double> w = a * z;
    const double term = log_abs_sinc(w);
    if (term == kNegInf) return {0.0, 0.0};
    log_mag += term;
    phase += std::abs(w) < 1e-4 ? std::arg(1.0 - w * w / 6.0 + w * w * w * w / 120.0)
                                : arg_sinc(w);
  }
  return std::polar(std::exp(log_mag), phase);
}

namespace {

// Midpoint of the two zeros of psi that bracket x.
double midpoint_between_zeros(const EnvelopeSpec& spec, double x) {
  double below = 0.0;
  double above = std::numeric_limits<double>::infinity();
  for (const double a : spec.coefficients()) {
    const double spacing = kPi / a;
    const double m = std::round(x / spacing);
    const double z = m * spacing;
    const double lo = (z < x && std::abs(z - x) > 1e-9 * x) ? z : (m - 1.0) * spacing;
    const double hi = (z > x && std::abs(z - x) > 1e-9 * x) ? z : (m + 1.0) * spacing;
    below = std::max(below, lo);
    above = std::min(above, hi);
  }
  return 0.5 * (below + above);
}

bool near_factor_zero(const EnvelopeSpec& spec, double x) {
  for (const double a : spec.coefficients()) {
    const double t = a * x;
    const double m = std::round(t / kPi);
    if (m != 0.0 && std::abs(t - m * kPi) < 1e-9 * std::max(1.0, t)) return true;
  }
  return false;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
  std::vector<double> xs(n);
  const double llo = std::log(lo);
  const double lhi = std::log(hi);
  for (std::size_t i = 0; i < n; ++i)
    xs[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / static_cast<double>(n - 1));
  xs.front() = lo;
  xs.back() = hi;
  return xs;
}

DecayFitReport regress_decay(std::vector<double> xs, std::vector<double> log_abs) {
  std::vector<double> lx(xs.size());
  std::vector<double> ly(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(log_abs[i] < 0.0) || !std::isfinite(log_abs[i]))
      throw ParameterError("decay_fit: log|f| must be finite and negative at every probe (x = " +
                           std::to_string(xs[i]) + ")");
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(-log_abs[i]);
  }
  const auto fit = detail::fit_line(lx, ly);
  DecayFitReport r;
  r.fitted_exponent = fit.slope;
  r.fit_intercept = fit.intercept;
  r.x_probes = std::move(xs);
  r.log_abs_psi = std::move(log_abs);
  return r;
}

void check_fit_window(double x_lo, double x_hi, std::size_t n_probes) {
  if (!(x_lo > 1.0) || !(x_lo < x_hi))
    throw ParameterError("decay_fit: need 1 < x_lo < x_hi");
  if (n_probes < 10) throw ParameterError("decay_fit: need at least 10 probes");
}

}  // namespace

DecayFitReport decay_fit(const EnvelopeSpec& spec, double x_lo, double x_hi,
                         std::size_t n_probes) {
  check_fit_window(x_lo, x_hi, n_probes);
  if (x_hi > spec.x_max())
    throw ParameterError("decay_fit: x_hi exceeds the x_max the envelope was built for");
  auto xs = log_spaced(x_lo, x_hi, n_probes);
  std::size_t perturbed = 0;
  for (double& x : xs) {
    if (near_factor_zero(spec, x)) {
      x = midpoint_between_zeros(spec, x);
      ++perturbed;
    }
  }
  std::vector<double> log_abs(xs.size());
  std::vector<int> sign(xs.size());
  envelope_log_abs(spec, xs, log_abs, sign);
  auto r = regress_decay(std::move(xs), std::move(log_abs));
  r.x_lo = x_lo;
  r.x_hi = x_hi;
  r.perturbed_probes = perturbed;
  return r;
}

DecayFitReport decay_fit(const std::function<double(double)>& log_abs_f, double x_lo,
                         double x_hi, std::size_t n_probes) {
  check_fit_window(x_lo, x_hi, n_probes);
  auto xs = log_spaced(x_lo, x_hi, n_probes);
  std::vector<double> log_abs(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) log_abs[i] = log_abs_f(xs[i]);
  auto r = regress_decay(std::move(xs), std::move(log_abs));
  r.x_lo = x_lo;
  r.x_hi = x_hi;
  return r;
}

}  // namespace bandlab
