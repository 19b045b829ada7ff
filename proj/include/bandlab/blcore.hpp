#pragma once

// Real-line signals band-limited to [-1, 1]: the sinc kernel, samples on
// the Nyquist grid pi*Z and the cardinal series that rebuilds a signal
// from them.

#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace bandlab {

inline constexpr double kPi = std::numbers::pi;

using RealFunction = std::function<double(double)>;

/// sin(x)/x with the removable singularity at 0 handled by a Taylor branch.
/// Throws DomainError for non-finite x.
double sinc(double x);

/// Entire extension sin(z)/z.
std::complex<double> sinc(std::complex<double> z);

/// Values f(pi*n) for the contiguous index range
/// [first_index, first_index + size() - 1]. The grid step is always pi.
class SampleSequence {
 public:
  SampleSequence(long first_index, std::vector<double> values);

  static constexpr double grid_step() { return kPi; }

  long first_index() const noexcept { return first_index_; }
  long last_index() const noexcept {
    return first_index_ + static_cast<long>(values_.size()) - 1;
  }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }

  /// Sample at absolute index n; zero outside the stored range.
  double at(long n) const noexcept;

  /// Grid abscissa pi*n.
  static double position(long n) noexcept { return kPi * static_cast<double>(n); }

 private:
  long first_index_;
  std::vector<double> values_;
};

/// Uniform evaluation grid shared by the figure emitters.
struct EvalWindow {
  double x_min = 0.0;
  double x_max = 1.0;
  std::size_t n_points = 2;

  /// Throws ParameterError unless x_min < x_max and n_points >= 2.
  void validate() const;
  double step() const noexcept {
    return (x_max - x_min) / static_cast<double>(n_points - 1);
  }
  double point(std::size_t i) const noexcept;
  std::vector<double> points() const;
};

/// values[i] = f(pi*(n_min + i)). Throws EvaluationError naming the index of
/// the first non-finite value.
SampleSequence sample_on_grid(const RealFunction& f, long n_min, long n_max);

/// Cardinal series sum_n s(n) sinc(x - pi n) over the stored indices.
double reconstruct(const SampleSequence& s, double x);

/// Batched reconstruction, parallel over the evaluation points.
std::vector<double> reconstruct(const SampleSequence& s, std::span<const double> xs);

/// pi * sum |s(n)|^2, the L2 energy of the reconstructed signal.
double parseval_energy(const SampleSequence& s);

}  // namespace bandlab
