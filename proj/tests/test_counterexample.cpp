#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "bandlab/counterexample.hpp"
#include "bandlab/error.hpp"
#include "doctest.h"

using namespace bandlab;

namespace {

constexpr double pi = std::numbers::pi;

const CounterexampleParams& base() {
  static const CounterexampleParams p = make_counterexample(10.0);
  return p;
}

CounterexampleParams with_a(double a) {
  CounterexampleParams p = base();
  p.a = a;
  return p;
}

// Zeros of cos(a sqrt(-x)) on [x_min, 0): a sqrt(-x) = pi (m + 1/2).
std::size_t g_zero_count(double a, double x_min) {
  return static_cast<std::size_t>(std::floor(a * std::sqrt(-x_min) / pi + 0.5));
}

// Zeros of psi on [x_min, 0): a_k |x| = pi m.
std::size_t psi_zero_count(const EnvelopeSpec& s, double x_min) {
  std::size_t n = 0;
  for (const double a : s.coefficients()) n += static_cast<std::size_t>(std::floor(a * -x_min / pi));
  return n;
}

}  // namespace

TEST_CASE("g_eval on the real axis") {
  for (const double a : {0.5, 3.0, 40.0}) CHECK(g_eval(a, 0.0) == 1.0);
  CHECK(std::abs(g_eval(1.0, -pi * pi / 4)) < 1e-15);
  CHECK(g_eval(10.0, 1.0) == doctest::Approx((std::exp(10.0) + std::exp(-10.0)) / 2).epsilon(1e-15));
  CHECK(g_eval(10.0, 1.0) == doctest::Approx(11013.2329).epsilon(1e-8));
  for (double x = -100.0; x < 0.0; x += 0.77) CHECK(std::abs(g_eval(7.0, x)) <= 1.0);
  CHECK_THROWS_AS(g_eval(2000.0, 1.0), OverflowError);
  CHECK_THROWS_AS(g_eval(-1.0, 1.0), ParameterError);
  CHECK_THROWS_AS(g_eval(1.0, std::nan("")), DomainError);
}

TEST_CASE("g_eval in the complex plane") {
  const std::complex<double> neg(-3.0, 0.0);
  const auto v = g_eval(2.0, neg);
  CHECK(std::abs(v.imag()) < 1e-15);
  CHECK(std::abs(v.real()) <= 1.0);
  CHECK(v.real() == doctest::Approx(std::cos(2.0 * std::sqrt(3.0))));
  for (const auto z : {std::complex<double>(1.0, 2.0), std::complex<double>(-4.0, -1.0)}) {
    const auto w = std::sqrt(z);
    CHECK(std::abs(std::cosh(3.0 * w) - std::cosh(-3.0 * w)) < 1e-12 * std::abs(std::cosh(3.0 * w)));
    CHECK(std::abs(g_eval(3.0, z) - std::cosh(3.0 * w)) < 1e-12 * std::abs(std::cosh(3.0 * w)));
  }
  CHECK(std::abs(g_eval(2.0, std::complex<double>(0.0, 1.0))) <= std::exp(2.0));
}

TEST_CASE("g_log_abs") {
  CHECK(g_log_abs(100.0, {1.0, 0.0}) == doctest::Approx(100.0 - std::log(2.0)).epsilon(1e-15));
  CHECK(g_log_abs(100.0, {1.0, 0.0}) == doctest::Approx(99.3069).epsilon(1e-6));
  CHECK(g_log_abs(5.0, {0.0, 0.0}) == 0.0);
  for (double x = -50.0; x < 0.0; x += 1.3) {
    const double v = g_log_abs(4.0, {x, 0.0});
    CHECK(v <= 0.0);
    CHECK(v == doctest::Approx(std::log(std::abs(std::cos(4.0 * std::sqrt(-x))))));
  }
  for (const auto z : {std::complex<double>(2.0, 3.0), std::complex<double>(-9.0, 0.5),
                       std::complex<double>(30.0, -40.0)}) {
    const double want = std::log(std::abs(std::cosh(1.5 * std::sqrt(z))));
    CHECK(g_log_abs(1.5, z) == doctest::Approx(want).epsilon(1e-13));
  }
  // Far beyond the double range in linear scale.
  CHECK(g_log_abs(1e4, {1e4, 0.0}) == doctest::Approx(1e6 - std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("f_log10_abs") {
  const auto& p = base();
  CHECK(f_log10_abs(p, {0.0, 0.0}) == 0.0);
  for (const auto z : {std::complex<double>(3.0, 0.0), std::complex<double>(-7.0, 1.0)}) {
    const double sum = (g_log_abs(p.a, z) + envelope_log_abs(p.envelope, z)) / std::log(10.0);
    CHECK(f_log10_abs(p, z) == doctest::Approx(sum).epsilon(1e-15));
  }
  CHECK(f_log10_abs(with_a(40.0), {1.0, 0.0}) >= 10.0);
  CHECK(f_eval(p, 2.5) == doctest::Approx(std::cosh(10.0 * std::sqrt(2.5)) * envelope_eval(p.envelope, 2.5)));
  CHECK_THROWS_AS(f_eval(with_a(5000.0), 1.0), OverflowError);
}

TEST_CASE("bounded side stays within 1") {
  for (const double a : {1.0, 10.0, 100.0, 1000.0}) {
    const auto r = bounded_side_audit(with_a(a), -100.0, 20000);
    CHECK(r.max_abs <= 1.0 + 1e-12);
  }
  const auto wide = bounded_side_audit(with_a(40.0), -1000.0, 100000);
  CHECK(wide.max_abs <= 1.0 + 1e-12);
  CHECK_THROWS_AS(bounded_side_audit(base(), 0.0, 1000), ParameterError);
  CHECK_THROWS_AS(bounded_side_audit(base(), -10.0, 50), ParameterError);
}

TEST_CASE("superoscillation: sign changes on [-40, 0] follow the zero count") {
  const auto& env = base().envelope;
  std::size_t counts[2] = {0, 0};
  double spacing[2] = {0, 0};
  int i = 0;
  for (const double a : {10.0, 100.0}) {
    const auto r = bounded_side_audit(with_a(a), -40.0, 20000);
    CHECK(r.sign_changes == g_zero_count(a, -40.0) + psi_zero_count(env, -40.0));
    counts[i] = r.sign_changes;
    spacing[i] = r.min_sign_change_spacing;
    ++i;
  }
  CHECK(static_cast<double>(counts[1]) / counts[0] == doctest::Approx(10.0).epsilon(0.15));
  CHECK(spacing[1] < spacing[0]);
}

TEST_CASE("growth table") {
  const std::vector<double> as = {5, 10, 20, 40};
  const auto t = growth_table(base(), 1.0, as);
  REQUIRE(t.log10_abs_f.size() == 4);
  for (std::size_t i = 1; i < 4; ++i) CHECK(t.log10_abs_f[i] > t.log10_abs_f[i - 1]);
  CHECK(t.log10_abs_f[3] >= 10.0);
  const double inc = t.log10_abs_f[2] - t.log10_abs_f[1];
  CHECK(inc == doctest::Approx(std::log10(std::cosh(20.0) / std::cosh(10.0))).epsilon(1e-12));
  CHECK(std::abs(inc - 10.0 / std::log(10.0)) < 0.2);
  CHECK(t.bounded_side_max <= 1.0 + 1e-12);
  CHECK(t.envelope_fingerprint == base().envelope.fingerprint());

  CHECK_THROWS_AS(growth_table(base(), 0.0, as), ParameterError);
  const std::vector<double> bad = {5, 5, 10};
  CHECK_THROWS_AS(growth_table(base(), 1.0, bad), ParameterError);
  const double zero_of_psi = pi / base().envelope.coefficients()[0];
  CHECK_THROWS_AS(growth_table(base(), zero_of_psi, as), ParameterError);
}

TEST_CASE("strip bound for the counterexample") {
  const std::vector<double> ys = {-4, -2, -1, 1, 2, 4};
  const EvalWindow w{-50.0, 50.0, 1001};
  double last_constant = -1e300;
  for (const double a : {5.0, 10.0, 20.0}) {
    const auto r = strip_bound_verify(with_a(a), ys, w);
    CHECK(r.type_halfrate == 0.5);
    for (const double v : r.sup_log_ratio) {
      CHECK(std::isfinite(v));
      // log|g| <= a sqrt|z| and log|psi| <= |y|/2.
      CHECK(v <= a * std::sqrt(std::hypot(50.0, 4.0)) + 1e-9);
    }
    CHECK(r.bounded_uniformly());
    CHECK(r.log_constant() > last_constant);
    last_constant = r.log_constant();
  }
}

TEST_CASE("strip bound with negligible growth reduces to the envelope") {
  const std::vector<double> ys = {1, 2, 4};
  const EvalWindow w{-50.0, 50.0, 501};
  const auto r = strip_bound_verify(with_a(1e-12), ys, w);
  const LogAbsFunction la = [](std::complex<double> z) { return envelope_log_abs(base().envelope, z); };
  const auto e = strip_bound_check(la, 0.5, ys, w);
  for (std::size_t i = 0; i < ys.size(); ++i)
    CHECK(r.sup_log_ratio[i] == doctest::Approx(e.sup_log_ratio[i]).epsilon(1e-9));
}

TEST_CASE("magnitude window needs an envelope designed far enough out") {
  CHECK_THROWS_AS(magnitude_window(with_a(10.0), 40.0), ResourceError);
}

TEST_CASE("magnitude window brackets the peak") {
  const auto p = make_counterexample(10.0, 20000.0);
  const auto w = magnitude_window(p, 40.0);
  CHECK(w.x_lo < w.x_at_max);
  CHECK(w.x_at_max < w.x_hi);
  CHECK(f_log10_abs(p, {w.x_at_max, 0.0}) * std::log(10.0) == doctest::Approx(w.log_max));
  // Outside the window |f| has dropped by more than the dynamic range.
  for (const double x : {w.x_hi + 1.0, w.x_hi * 1.5, w.x_lo - 1.0})
    CHECK(f_log10_abs(p, {x, 0.0}) * std::log(10.0) < w.log_max - 40.0);
}
