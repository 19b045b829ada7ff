#include <cmath>
#include <string>

#include "bandlab/continuation.hpp"
#include "bandlab/error.hpp"

namespace bandlab {

namespace {

using State = std::array<double, 3>;

State lorenz_rhs(const LorenzSpec& p, const State& s) {
  return {p.sigma * (s[1] - s[0]), s[0] * (p.rho - s[2]) - s[1], s[0] * s[1] - p.beta * s[2]};
}

State axpy(const State& s, double h, const State& k) {
  return {s[0] + h * k[0], s[1] + h * k[1], s[2] + h * k[2]};
}

}  // namespace

LorenzSolution::LorenzSolution(const LorenzSpec& spec, double t_start, double t_end)
    : spec_(spec) {
  if (!(spec.max_step > 0.0) || !(spec.transient >= 0.0))
    throw ParameterError("LorenzSolution: need max_step > 0 and transient >= 0");
  if (spec.component < 0 || spec.component > 2)
    throw ParameterError("LorenzSolution: component must be 0, 1 or 2");
  if (!(spec.time_offset >= 0.0)) throw ParameterError("LorenzSolution: need time_offset >= 0");
  t_begin_ = t_start - spec.transient - spec.time_offset;
  t_end_ = t_end;
  if (!(t_end_ > t_begin_)) throw ParameterError("LorenzSolution: empty time span");

  const auto n_steps =
      static_cast<std::size_t>(std::ceil((t_end_ - t_begin_) / spec.max_step - 1e-9));
  step_ = (t_end_ - t_begin_) / static_cast<double>(n_steps);
  states_.reserve(n_steps + 1);
  State s = spec.initial_state;
  states_.push_back(s);
  const double h = step_;
  for (std::size_t i = 0; i < n_steps; ++i) {
    const State k1 = lorenz_rhs(spec, s);
    const State k2 = lorenz_rhs(spec, axpy(s, 0.5 * h, k1));
    const State k3 = lorenz_rhs(spec, axpy(s, 0.5 * h, k2));
    const State k4 = lorenz_rhs(spec, axpy(s, h, k3));
    for (int c = 0; c < 3; ++c) s[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
    if (!std::isfinite(s[0]) || !std::isfinite(s[1]) || !std::isfinite(s[2])) {
      const double t = t_begin_ + static_cast<double>(i + 1) * h;
      throw EvaluationError("LorenzSolution: state diverged at t = " + std::to_string(t), t);
    }
    states_.push_back(s);
  }
}

std::array<double, 3> LorenzSolution::state(double t) const {
  if (!(t >= t_begin_ - 1e-12) || !(t <= t_end_ + 1e-12))
    throw ParameterError("LorenzSolution: t outside the integrated span");
  const double u = (t - t_begin_) / step_;
  auto i = static_cast<std::size_t>(std::floor(u));
  if (i >= states_.size() - 1) i = states_.size() - 2;
  const double s = u - static_cast<double>(i);
  if (s == 0.0) return states_[i];
  // Cubic Hermite with node derivatives from the vector field.
  const State& y0 = states_[i];
  const State& y1 = states_[i + 1];
  const State d0 = lorenz_rhs(spec_, y0);
  const State d1 = lorenz_rhs(spec_, y1);
  const double h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
  const double h10 = s * (1.0 - s) * (1.0 - s);
  const double h01 = s * s * (3.0 - 2.0 * s);
  const double h11 = s * s * (s - 1.0);
  State out;
  for (int c = 0; c < 3; ++c)
    out[c] = h00 * y0[c] + h10 * step_ * d0[c] + h01 * y1[c] + h11 * step_ * d1[c];
  return out;
}

double LorenzSolution::value(double t, int component) const {
  if (component < 0 || component > 2) throw ParameterError("LorenzSolution: bad component");
  return state(t)[static_cast<std::size_t>(component)];
}

SampledSignal lorenz_trajectory(const SignalSpec& spec) {
  spec.validate();
  if (spec.kind != SignalSpec::Kind::lorenz_component)
    throw ParameterError("lorenz_trajectory: signal is not a Lorenz component");
  const LorenzSolution sol(spec.lorenz, spec.t0, spec.t1);
  SampledSignal out;
  out.t.resize(spec.n_samples);
  out.values.resize(spec.n_samples);
  const double dt = (spec.t1 - spec.t0) / static_cast<double>(spec.n_samples - 1);
  for (std::size_t i = 0; i < spec.n_samples; ++i) {
    const double t = (i + 1 == spec.n_samples) ? spec.t1 : spec.t0 + static_cast<double>(i) * dt;
    out.t[i] = t;
    out.values[i] = sol.value(t, spec.lorenz.component);
  }
  return out;
}

}  // namespace bandlab
