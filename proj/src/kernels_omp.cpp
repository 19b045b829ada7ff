#include "bandlab/kernels.hpp"

#include <cstdint>

#include "kernel_detail.hpp"

namespace bandlab::kernels::parallel {

void exponential_sum(UniformNodes nodes, std::span<const cplx> coeff,
                     std::span<const double> freq, int sign, std::span<cplx> out) {
  const auto n = static_cast<std::int64_t>(freq.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    out[i] = detail::exponential_sum_one(nodes, coeff, freq[i], sign);
}

void cardinal_series(long first_index, std::span<const double> values,
                     std::span<const double> xs, std::span<double> out) {
  const auto n = static_cast<std::int64_t>(xs.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    out[i] = detail::cardinal_series_one(first_index, values, xs[i]);
}

void log_abs_sinc_product(std::span<const double> coeff, std::span<const double> xs,
                          std::span<double> log_abs, std::span<int> sign) {
  const auto n = static_cast<std::int64_t>(xs.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto r = detail::log_abs_sinc_product_one(coeff, xs[i]);
    log_abs[i] = r.log_abs;
    sign[i] = r.sign;
  }
}

}  // namespace bandlab::kernels::parallel
