#include "bandlab/blcore.hpp"

#include <cmath>
#include <string>

#include "bandlab/error.hpp"
#include "bandlab/kernels.hpp"
#include "kernel_detail.hpp"

namespace bandlab {

double sinc(double x) {
  if (!std::isfinite(x)) throw DomainError("sinc: non-finite argument");
  return kernels::detail::sinc_unchecked(x);
}

std::complex<double> sinc(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("sinc: non-finite complex argument");
  if (z.imag() == 0.0) return {sinc(z.real()), 0.0};
  if (std::abs(z) < 1e-4) {
    const auto z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sin(z) / z;
}

SampleSequence::SampleSequence(long first_index, std::vector<double> values)
    : first_index_(first_index), values_(std::move(values)) {
  if (values_.empty()) throw ParameterError("SampleSequence: empty value list");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]))
      throw ParameterError("SampleSequence: non-finite sample at index " +
                           std::to_string(first_index_ + static_cast<long>(i)));
  }
}

double SampleSequence::at(long n) const noexcept {
  if (n < first_index_ || n > last_index()) return 0.0;
  return values_[static_cast<std::size_t>(n - first_index_)];
}

void EvalWindow::validate() const {
  if (!(x_min < x_max)) throw ParameterError("EvalWindow: need x_min < x_max");
  if (n_points < 2) throw ParameterError("EvalWindow: need n_points >= 2");
}

double EvalWindow::point(std::size_t i) const noexcept {
  // Weighted endpoints: exact at both ends and at 0 for symmetric windows.
  const double m = static_cast<double>(n_points - 1);
  const double t = static_cast<double>(i);
  return (x_min * (m - t) + x_max * t) / m;
}

std::vector<double> EvalWindow::points() const {
  validate();
  std::vector<double> xs(n_points);
  for (std::size_t i = 0; i < n_points; ++i) xs[i] = point(i);
  return xs;
}

SampleSequence sample_on_grid(const RealFunction& f, long n_min, long n_max) {
  if (n_min > n_max) throw ParameterError("sample_on_grid: n_min > n_max");
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (long n = n_min; n <= n_max; ++n) {
    const double x = SampleSequence::position(n);
    const double v = f(x);
    if (!std::isfinite(v))
      throw EvaluationError("sample_on_grid: non-finite value at grid index " +
                                std::to_string(n),
                            x);
    values.push_back(v);
  }
  return SampleSequence(n_min, std::move(values));
}

double reconstruct(const SampleSequence& s, double x) {
  if (!std::isfinite(x)) throw DomainError("reconstruct: non-finite abscissa");
  return kernels::detail::cardinal_series_one(s.first_index(), s.values(), x);
}

std::vector<double> reconstruct(const SampleSequence& s, std::span<const double> xs) {
  for (const double x : xs)
    if (!std::isfinite(x)) throw DomainError("reconstruct: non-finite abscissa");
  std::vector<double> out(xs.size());
  kernels::cardinal_series(s.first_index(), s.values(), xs, out);
  return out;
}

double parseval_energy(const SampleSequence& s) {
  double acc = 0.0;
  for (const double v : s.values()) acc += v * v;
  return kPi * acc;
}

}  // namespace bandlab
