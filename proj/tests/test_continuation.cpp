#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstring>
#include <numbers>
#include <vector>

#include "bandlab/continuation.hpp"
#include "bandlab/error.hpp"
#include "doctest.h"

using namespace bandlab;

namespace {

constexpr double pi = std::numbers::pi;

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = a + (b - a) * static_cast<double>(i) / (n - 1);
  return v;
}

std::vector<double> sample_fn(const std::vector<double>& x, double (*f)(double)) {
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = f(x[i]);
  return y;
}

double runge(double x) { return 1.0 / (1.0 + x * x); }

}  // namespace

TEST_CASE("Lorenz: sub-critical rho decays to the origin") {
  LorenzSpec s;
  s.rho = 0.0;
  s.transient = 0.0;
  const LorenzSolution sol(s, 0.0, 20.0);
  const auto st = sol.state(20.0);
  for (const double v : st) CHECK(std::abs(v) < 1e-3);
  LorenzSpec z = s;
  z.initial_state = {0.0, 0.0, 0.0};
  const LorenzSolution still(z, 0.0, 5.0);
  for (const double v : still.state(5.0)) CHECK(v == 0.0);
}

TEST_CASE("Lorenz: halving the step changes the x-component by < 1e-6 over 10 units") {
  LorenzSpec s;
  s.transient = 0.0;
  s.component = 0;
  LorenzSpec half = s;
  half.max_step = s.max_step / 2;
  const LorenzSolution a(s, 0.0, 10.0);
  const LorenzSolution b(half, 0.0, 10.0);
  double worst = 0.0;
  double biggest = 0.0;
  for (double t = 0.0; t <= 10.0; t += 0.01) {
    worst = std::max(worst, std::abs(a.value(t, 0) - b.value(t, 0)));
    const auto st = a.state(t);
    biggest = std::max(biggest, std::sqrt(st[0] * st[0] + st[1] * st[1] + st[2] * st[2]));
  }
  CHECK(worst < 1e-6);
  CHECK(biggest < 100.0);
}

TEST_CASE("Lorenz: default trajectory stays bounded and is bit-reproducible") {
  SignalSpec spec;
  spec.kind = SignalSpec::Kind::lorenz_component;
  spec.t0 = -10.0;
  spec.n_samples = 500;
  const auto a = lorenz_trajectory(spec);
  const auto b = lorenz_trajectory(spec);
  REQUIRE(a.values.size() == 500);
  CHECK(std::memcmp(a.values.data(), b.values.data(), 500 * sizeof(double)) == 0);
  const LorenzSolution sol(spec.lorenz, spec.t0, 0.0);
  CHECK(sol.t_begin() == doctest::Approx(spec.t0 - spec.lorenz.transient));
  for (double t = sol.t_begin(); t <= 0.0; t += 0.05) {
    const auto st = sol.state(t);
    CHECK(std::sqrt(st[0] * st[0] + st[1] * st[1] + st[2] * st[2]) < 100.0);
  }
  CHECK(a.t.front() == -10.0);
  CHECK(a.t.back() == 0.0);
}

TEST_CASE("Lorenz: readback between steps matches a direct sub-step") {
  LorenzSpec s;
  s.transient = 0.0;
  const LorenzSolution a(s, 0.0, 2.0);
  // Oracle: one classical RK4 step of length t - t_k from the stored node t_k;
  // its local error is O((t - t_k)^5), far below the Hermite O(h^4) bound.
  auto rhs = [&](const std::array<double, 3>& u) {
    return std::array<double, 3>{s.sigma * (u[1] - u[0]), u[0] * (s.rho - u[2]) - u[1],
                                 u[0] * u[1] - s.beta * u[2]};
  };
  auto shifted = [](std::array<double, 3> u, const std::array<double, 3>& k, double c) {
    for (int i = 0; i < 3; ++i) u[i] += c * k[i];
    return u;
  };
  for (double t = 0.00037; t < 2.0; t += 0.0531) {
    const double tk = std::floor(t / a.step()) * a.step();
    const double dt = t - tk;
    const auto u = a.state(tk);
    const auto k1 = rhs(u);
    const auto k2 = rhs(shifted(u, k1, dt / 2));
    const auto k3 = rhs(shifted(u, k2, dt / 2));
    const auto k4 = rhs(shifted(u, k3, dt));
    const double want = u[2] + dt / 6 * (k1[2] + 2 * k2[2] + 2 * k3[2] + k4[2]);
    CHECK(std::abs(a.value(t, 2) - want) < 1e-9 * std::max(1.0, std::abs(want)));
  }
  CHECK_THROWS_AS(a.value(2.5, 0), ParameterError);
  CHECK_THROWS_AS(a.value(1.0, 3), ParameterError);
}

TEST_CASE("Lorenz: divergence reports the time") {
  LorenzSpec s;
  s.sigma = 1e3;
  s.max_step = 0.5;
  s.transient = 0.0;
  CHECK_THROWS_AS(LorenzSolution(s, 0.0, 1000.0), EvaluationError);
}

TEST_CASE("SignalSpec validation") {
  SignalSpec s;
  s.t1 = s.t0;
  CHECK_THROWS_AS(s.validate(), ParameterError);
  s = SignalSpec{};
  s.n_samples = 10;
  CHECK_THROWS_AS(s.validate(), ParameterError);
  s = SignalSpec{};
  s.cosine_terms = {CosineTerm{1.0, 0.0, 0.0}};
  CHECK_THROWS_AS(s.validate(), ParameterError);
}

TEST_CASE("aaa_fit: constant data") {
  const auto x = linspace(-1, 1, 50);
  const std::vector<double> f(50, 3.25);
  const auto r = aaa_fit(x, f, 1e-13);
  CHECK(r.degree() == 0);
  CHECK(r.achieved_error == 0.0);
  for (const double t : {-7.0, 0.1, 42.0}) CHECK(rational_eval(r, t) == 3.25);
}

TEST_CASE("aaa_fit: a rational function is recovered exactly") {
  const auto x = linspace(-5, 5, 400);
  const auto f = sample_fn(x, runge);
  const auto r = aaa_fit(x, f, 1e-13);
  CHECK(r.achieved_error <= 1e-13);
  CHECK(r.support_points.size() <= 4);
  CHECK(rational_eval(r, 10.0) == doctest::Approx(1.0 / 101.0).epsilon(1e-10));
  for (std::size_t j = 0; j < r.support_points.size(); ++j)
    CHECK(rational_eval(r, r.support_points[j]) == r.support_values[j]);
  // Poles at +-i.
  int found = 0;
  for (const auto& p : rational_poles(r))
    if (std::abs(std::complex<double>(p.re, std::abs(p.im)) - std::complex<double>(0, 1)) < 1e-8) ++found;
  CHECK(found == 2);
}

TEST_CASE("aaa_fit: cosine over twenty periods") {
  const auto x = linspace(-40 * pi, 0, 2000);
  const auto f = sample_fn(x, [](double t) { return std::cos(t); });
  const auto r = aaa_fit(x, f, 1e-13);
  CHECK(r.achieved_error <= 1e-13);
  CHECK(r.degree() <= 60);
  CHECK(r.data_scale == doctest::Approx(1.0));
  CHECK(r.interval_lo == x.front());
  CHECK(r.interval_hi == x.back());
}

TEST_CASE("aaa_fit: degree cap and preconditions") {
  const auto x = linspace(-40 * pi, 0, 2000);
  const auto f = sample_fn(x, [](double t) { return std::cos(t); });
  CHECK(aaa_fit(x, f, 1e-13, 10).degree() <= 10);
  const std::vector<double> one = {1.0};
  CHECK_THROWS_AS(aaa_fit(one, one, 1e-3), ParameterError);
  CHECK_THROWS_AS(aaa_fit(x, f, 0.0), ParameterError);
  const std::vector<double> short_f(10, 0.0);
  CHECK_THROWS_AS(aaa_fit(x, short_f, 1e-3), ParameterError);
}

TEST_CASE("dominant wavelength of monochromatic signals") {
  const auto x = linspace(-40 * pi, 0, 2000);
  const auto c1 = sample_fn(x, [](double t) { return std::cos(t); });
  const auto c3 = sample_fn(x, [](double t) { return std::cos(3 * t) + 5.0; });
  CHECK(dominant_wavelength(x, c1) == doctest::Approx(2 * pi).epsilon(0.02));
  CHECK(dominant_wavelength(x, c3) == doctest::Approx(2 * pi / 3).epsilon(0.02));
  const std::vector<double> flat(2000, 1.0);
  CHECK_THROWS_AS(dominant_wavelength(x, flat), ParameterError);
  auto bent = x;
  bent[7] += 0.1;
  CHECK_THROWS_AS(dominant_wavelength(bent, c1), ParameterError);
}

TEST_CASE("dominant wavelength of the Lorenz z-component") {
  SignalSpec spec;
  spec.kind = SignalSpec::Kind::lorenz_component;
  spec.t0 = -100.0;
  spec.n_samples = 20000;
  const auto sig = sample_signal(spec);
  const auto est = dominant_wavelength_estimate(sig.t, sig.values);
  CHECK(est.method == WavelengthMethod::spectral_peak);
  CHECK(est.wavelength > 0.7);
  CHECK(est.wavelength < 0.9);
}

TEST_CASE("dominant wavelength of the Lorenz x-component" * doctest::should_fail()) {
  // Lobe switching dominates the x spectrum.
  SignalSpec spec;
  spec.kind = SignalSpec::Kind::lorenz_component;
  spec.lorenz.component = 0;
  spec.t0 = -100.0;
  spec.n_samples = 20000;
  const auto sig = sample_signal(spec);
  const double lambda = dominant_wavelength(sig.t, sig.values);
  CHECK(lambda > 0.7);
  CHECK(lambda < 0.9);
}

TEST_CASE("horizon: exact rational truth runs to the cap") {
  const auto x = linspace(-5, 0, 300);
  const auto f = sample_fn(x, runge);
  const auto r = aaa_fit(x, f, 1e-13);
  const auto h = horizon_measure(runge, r, 0.0, 1.0, 1e-6);
  CHECK(h.capped);
  CHECK(h.horizon_wavelengths == doctest::Approx(10.0));
}

TEST_CASE("horizon: cosine extrapolates about one wavelength") {
  SignalSpec spec;
  const auto sig = sample_signal(spec);
  const auto truth = signal_function(spec, 100.0);
  const double lambda = dominant_wavelength(sig.t, sig.values);
  const auto r = aaa_fit(sig.t, sig.values, 1e-13);
  const auto loose = horizon_measure(truth, r, 0.0, lambda, 1e-2);
  const auto strict = horizon_measure(truth, r, 0.0, lambda, 1e-6);
  CHECK(loose.horizon_wavelengths >= 0.5);
  CHECK(loose.horizon_wavelengths <= 2.0);
  CHECK(strict.horizon_abs < loose.horizon_abs);
  CHECK(loose.digits == doctest::Approx(13.0));
  CHECK_FALSE(loose.capped);
  // The error at the reported horizon exceeds the threshold, one step before does not.
  const double step = lambda / 200;
  CHECK(std::abs(rational_eval(r, loose.horizon_abs) - truth(loose.horizon_abs)) > 1e-2);
  CHECK(std::abs(rational_eval(r, loose.horizon_abs - step) - truth(loose.horizon_abs - step)) <= 1e-2);
}

TEST_CASE("rate_constant") {
  CHECK(rate_constant(13) == doctest::Approx(4.7636).epsilon(2e-4));
  CHECK(std::abs(rate_constant(13) - 13 * std::log(10.0) / (2 * pi)) < 1e-15);
  CHECK(rate_constant(26) == 2 * rate_constant(13));
  CHECK(rate_constant(1e-12) > 0.0);
  CHECK(rate_constant(1e-12) < 1e-12);
  CHECK_THROWS_AS(rate_constant(0.0), ParameterError);
  CHECK_THROWS_AS(rate_constant(-1.0), ParameterError);
}
