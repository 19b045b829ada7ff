#pragma once

// Data-parallel inner loops. Every kernel exists twice: a serial reference
// and an OpenMP version that parallelizes over the outer (output) index only.
// Each output element is accumulated in the same fixed left-to-right order in
// both versions, so results are bit-identical for any thread count.

#include <complex>
#include <span>

namespace bandlab::kernels {

using cplx = std::complex<double>;

/// Uniform node set t_j = start + j*step, j = 0..count-1.
struct UniformNodes {
  double start = 0.0;
  double step = 1.0;
};

namespace serial {

/// out[i] = sum_j coeff[j] * exp(sign * i * freq[i] * t_j).
/// The phase is advanced by complex rotation and re-anchored with a direct
/// sincos every 64 nodes.
void exponential_sum(UniformNodes nodes, std::span<const cplx> coeff,
                     std::span<const double> freq, int sign, std::span<cplx> out);

/// out[i] = sum_n values[n - first_index] * sinc(xs[i] - pi n).
void cardinal_series(long first_index, std::span<const double> values,
                     std::span<const double> xs, std::span<double> out);

/// log|prod_k sinc(coeff[k] * xs[i])| and the sign of the product.
/// A factor that vanishes exactly yields -inf and sign 0.
void log_abs_sinc_product(std::span<const double> coeff, std::span<const double> xs,
                          std::span<double> log_abs, std::span<int> sign);

}  // namespace serial

namespace parallel {

void exponential_sum(UniformNodes nodes, std::span<const cplx> coeff,
                     std::span<const double> freq, int sign, std::span<cplx> out);

void cardinal_series(long first_index, std::span<const double> values,
                     std::span<const double> xs, std::span<double> out);

void log_abs_sinc_product(std::span<const double> coeff, std::span<const double> xs,
                          std::span<double> log_abs, std::span<int> sign);

}  // namespace parallel

// The library calls the parallel versions.
using parallel::cardinal_series;
using parallel::exponential_sum;
using parallel::log_abs_sinc_product;

}  // namespace bandlab::kernels
