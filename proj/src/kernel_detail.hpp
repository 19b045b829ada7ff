#pragma once

// Per-output-element bodies shared by the serial and OpenMP kernels.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>

#include "bandlab/blcore.hpp"
#include "bandlab/kernels.hpp"

namespace bandlab::kernels::detail {

inline double sinc_unchecked(double x) noexcept {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

inline constexpr std::size_t kResyncInterval = 64;

inline cplx exponential_sum_one(UniformNodes nodes, std::span<const cplx> coeff,
                                double freq, int sign) noexcept {
  const double s = sign < 0 ? -1.0 : 1.0;
  const double rot_re = std::cos(freq * nodes.step);
  const double rot_im = s * std::sin(freq * nodes.step);
  const std::size_t n = coeff.size();
  double acc_re = 0.0;
  double acc_im = 0.0;
  for (std::size_t j0 = 0; j0 < n; j0 += kResyncInterval) {
    const double theta = freq * (nodes.start + static_cast<double>(j0) * nodes.step);
    double ph_re = std::cos(theta);
    double ph_im = s * std::sin(theta);
    const std::size_t j1 = std::min(n, j0 + kResyncInterval);
    for (std::size_t j = j0; j < j1; ++j) {
      const double c_re = coeff[j].real();
      const double c_im = coeff[j].imag();
      acc_re += c_re * ph_re - c_im * ph_im;
      acc_im += c_re * ph_im + c_im * ph_re;
      const double next_re = ph_re * rot_re - ph_im * rot_im;
      ph_im = ph_re * rot_im + ph_im * rot_re;
      ph_re = next_re;
    }
  }
  return {acc_re, acc_im};
}

inline double cardinal_series_one(long first_index, std::span<const double> values,
                                  double x) noexcept {
  double acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const long n = first_index + static_cast<long>(i);
    acc += values[i] * sinc_unchecked(x - kPi * static_cast<double>(n));
  }
  return acc;
}

struct LogSign {
  double log_abs;
  int sign;
};

// Running product of |sinc| factors, folded into a log only when it nears
// the bottom of the double range.
inline LogSign log_abs_sinc_product_one(std::span<const double> coeff, double x) noexcept {
  constexpr double kFoldBelow = 1e-280;
  double log_acc = 0.0;
  double prod = 1.0;
  int sign = 1;
  for (const double a : coeff) {
    double s = sinc_unchecked(a * x);
    if (s == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
    if (s < 0.0) {
      sign = -sign;
      s = -s;
    }
    prod *= s;
    if (prod < kFoldBelow) {
      log_acc += std::log(prod);
      prod = 1.0;
    }
  }
  return {log_acc + std::log(prod), sign};
}

}  // namespace bandlab::kernels::detail
