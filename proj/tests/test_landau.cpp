#include <cmath>
#include <numbers>
#include <vector>

#include "bandlab/error.hpp"
#include "bandlab/landau.hpp"
#include "doctest.h"

using namespace bandlab;

namespace {

constexpr double pi = std::numbers::pi;

// n log|sin(t)/t| with t = (x - d)/n, written out without the library.
double witness_log(int n, double d, double x) {
  const double t = (x - d) / n;
  return t == 0.0 ? 0.0 : n * std::log(std::abs(std::sin(t) / t));
}

// Dense-scan sup over [x_min, 0] with a fixed absolute step.
double brute_sup(int n, double d, double x_min, double step) {
  double best = witness_log(n, d, 0.0);
  for (double x = -step; x >= x_min; x -= step) best = std::max(best, witness_log(n, d, x));
  return best;
}

}  // namespace

TEST_CASE("sinc_power_log_abs") {
  CHECK(sinc_power_log_abs({7, 12.0}, 12.0) == 0.0);
  CHECK(sinc_power_log_abs({1, pi}, 0.0) < -30.0);  // sinc(-pi) is zero up to rounding
  CHECK(sinc_power_log_abs({10, 50.0}, 0.0) ==
        doctest::Approx(10.0 * std::log(std::abs(std::sin(5.0)) / 5.0)).epsilon(1e-14));
  CHECK(sinc_power_log_abs({10, 50.0}, 0.0) == doctest::Approx(-16.52).epsilon(1e-3));
  CHECK_THROWS_AS(sinc_power_log_abs({0, 1.0}, 0.0), ParameterError);
  CHECK_THROWS_AS(sinc_power_log_abs({1, -1.0}, 0.0), ParameterError);
}

TEST_CASE("negative_axis_sup: closed-form and bound checks") {
  CHECK(negative_axis_sup({1, pi / 2}, -100.0) == doctest::Approx(std::log(2.0 / pi)).epsilon(1e-14));
  for (const int n : {1, 3, 10, 19}) {
    const double d = 50.0;
    const double s = negative_axis_sup({n, d}, -std::max(d, 3 * pi * n));
    CHECK(s <= n * std::log(std::min(1.0, n / d)) + 1e-12);
  }
}

TEST_CASE("negative_axis_sup agrees with a dense scan") {
  for (const int n : {2, 8, 19, 40}) {
    const double d = 50.0;
    const double x_min = -std::max(d, 3 * pi * n);
    const double got = negative_axis_sup({n, d}, x_min);
    const double brute = brute_sup(n, d, x_min, 1e-3);
    CHECK(got >= brute - 1e-12);
    CHECK(got == doctest::Approx(brute).epsilon(1e-6));
  }
}

TEST_CASE("negative_axis_sup is stable under grid refinement") {
  for (const int n : {5, 19, 60}) {
    const double a = negative_axis_sup({n, 80.0}, -std::max(80.0, 3 * pi * n), 50);
    const double b = negative_axis_sup({n, 80.0}, -std::max(80.0, 3 * pi * n), 100);
    CHECK(std::abs(a - b) < 1e-8);
  }
}

TEST_CASE("lower_bound_at matches an enumeration oracle") {
  const double d = 50.0;
  double best = 0.0;
  int best_n = 0;
  for (int n = 1; n <= 200; ++n) {
    const double g = -brute_sup(n, d, -std::max(d, 3 * pi * n), 0.02);
    if (g > best) {
      best = g;
      best_n = n;
    }
  }
  const auto lb = lower_bound_at(d, 200);
  CHECK(lb.best_n == best_n);
  CHECK(lb.log_bound == doctest::Approx(best).epsilon(1e-5));
  CHECK(lb.log_bound == doctest::Approx(29.009).epsilon(1e-4));
  CHECK(lb.best_n == 19);
}

TEST_CASE("lower_bound_at near the simple-witness heuristic d/e" * doctest::should_fail()) {
  const auto lb = lower_bound_at(50.0, 200);
  CHECK(std::abs(lb.log_bound - 50.0 / std::exp(1.0)) <= 0.15 * 50.0 / std::exp(1.0));
}

TEST_CASE("lower_bound_at: monotone in n_max, vanishing as d -> 0") {
  double prev = 0.0;
  for (const int n_max : {1, 5, 10, 20, 40, 80}) {
    const auto lb = lower_bound_at(60.0, n_max);
    CHECK(lb.log_bound >= prev);
    prev = lb.log_bound;
  }
  CHECK(lower_bound_at(1e-6, 50).log_bound < 1e-9);
  CHECK_THROWS_AS(lower_bound_at(0.0, 10), ParameterError);
  CHECK_THROWS_AS(lower_bound_at(10.0, 0), ParameterError);
}

TEST_CASE("normalized witness is bounded by 1 on the negative axis") {
  const double d = 40.0;
  const auto lb = lower_bound_at(d, 120);
  const SincPowerParams p{lb.best_n, d};
  const double log_sup = -lb.log_bound;
  for (double x = -1000.0; x <= 0.0; x += 0.01)
    CHECK(witness_log(p.n, p.d, x) - log_sup <= 1e-10);
}

TEST_CASE("rate_fit: exponential growth with a stable rate") {
  std::vector<double> ds;
  for (int i = 1; i <= 10; ++i) ds.push_back(20.0 * i);
  const auto c = rate_fit(ds, 400);
  for (const double v : c.log_lower_bound) CHECK(v >= 0.0);
  CHECK(c.fit_r2 > 0.99);
  CHECK(c.fitted_rate > 0.0);
  CHECK(c.fitted_rate < 4.8);
  // Independent least squares on the reported curve.
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    mx += ds[i];
    my += c.log_lower_bound[i];
  }
  mx /= ds.size();
  my /= ds.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    sxy += (ds[i] - mx) * (c.log_lower_bound[i] - my);
    sxx += (ds[i] - mx) * (ds[i] - mx);
  }
  CHECK(c.fitted_rate == doctest::Approx(sxy / sxx).epsilon(1e-12));

  const auto c2 = rate_fit(ds, 800, 100);
  CHECK(std::abs(c2.fitted_rate - c.fitted_rate) < 0.02 * c.fitted_rate);
}

TEST_CASE("rate_fit within the 1/e heuristic band" * doctest::should_fail()) {
  std::vector<double> ds;
  for (int i = 1; i <= 10; ++i) ds.push_back(20.0 * i);
  const auto c = rate_fit(ds, 400);
  CHECK(c.fitted_rate >= 0.30);
  CHECK(c.fitted_rate <= 0.45);
}

TEST_CASE("rate_fit preconditions") {
  const std::vector<double> two = {10.0, 20.0};
  CHECK_THROWS_AS(rate_fit(two, 10), ParameterError);
  const std::vector<double> unsorted = {10.0, 30.0, 20.0};
  CHECK_THROWS_AS(rate_fit(unsorted, 10), ParameterError);
}
