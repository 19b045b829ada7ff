#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "bandlab/continuation.hpp"
#include "bandlab/error.hpp"

namespace bandlab {

namespace {

using cplx = std::complex<double>;

// Smallest right singular vector of the Loewner matrix built from the
// non-support rows.
std::vector<double> solve_weights(std::span<const double> x, std::span<const double> f,
                                  const std::vector<bool>& is_support,
                                  const std::vector<double>& zs, const std::vector<double>& fs) {
  const auto m = static_cast<Eigen::Index>(zs.size());
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_support[i]) rows.push_back(i);
  if (rows.empty()) return std::vector<double>(zs.size(), 1.0);

  Eigen::MatrixXd A(static_cast<Eigen::Index>(rows.size()), m);
  for (Eigen::Index r = 0; r < A.rows(); ++r) {
    const std::size_t i = rows[static_cast<std::size_t>(r)];
    for (Eigen::Index c = 0; c < m; ++c) {
      const auto j = static_cast<std::size_t>(c);
      A(r, c) = (f[i] - fs[j]) / (x[i] - zs[j]);
    }
  }
  // One-sided Jacobi after a pivoted QR: small singular values to high
  // relative accuracy, which sets the attainable fit floor.
  Eigen::JacobiSVD<Eigen::MatrixXd, Eigen::ColPivHouseholderQRPreconditioner> svd(
      A, Eigen::ComputeFullV);
  const Eigen::VectorXd w = svd.matrixV().col(m - 1);
  std::vector<double> out(static_cast<std::size_t>(m));
  for (Eigen::Index c = 0; c < m; ++c) out[static_cast<std::size_t>(c)] = w(c);
  return out;
}

bool usable(const std::vector<double>& w) {
  bool any = false;
  for (const double v : w) {
    if (!std::isfinite(v)) return false;
    any = any || v != 0.0;
  }
  return any;
}

double residual_max(const RationalApproximant& r, std::span<const double> x,
                    std::span<const double> f, const std::vector<bool>& is_support,
                    std::size_t* argmax = nullptr) {
  double worst = 0.0;
  std::size_t where = x.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_support[i]) continue;
    double e = std::abs(rational_eval(r, x[i]) - f[i]);
    if (std::isnan(e)) e = std::numeric_limits<double>::infinity();
    if (where == x.size() || e > worst) {
      worst = e;
      where = i;
    }
  }
  if (argmax) *argmax = where;
  return worst;
}

}  // namespace

void RationalApproximant::validate() const {
  if (support_points.empty()) throw ParameterError("RationalApproximant: no support points");
  if (support_points.size() != support_values.size() || support_points.size() != weights.size())
    throw ParameterError("RationalApproximant: list lengths differ");
  if (!usable(weights)) throw ParameterError("RationalApproximant: weights all zero or non-finite");
}

double rational_eval(const RationalApproximant& r, double x) {
  if (r.support_points.size() == 1) return r.support_values[0];
  double num = 0.0;
  double den = 0.0;
  for (std::size_t j = 0; j < r.support_points.size(); ++j) {
    const double diff = x - r.support_points[j];
    if (diff == 0.0) return r.support_values[j];
    const double c = r.weights[j] / diff;
    num += c * r.support_values[j];
    den += c;
  }
  if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
  const double v = num / den;
  return std::isfinite(v) ? v : std::numeric_limits<double>::quiet_NaN();
}

std::vector<Pole> rational_poles(const RationalApproximant& r) {
  r.validate();
  const auto m = static_cast<Eigen::Index>(r.support_points.size());
  Eigen::MatrixXd E = Eigen::MatrixXd::Zero(m + 1, m + 1);
  Eigen::MatrixXd B = Eigen::MatrixXd::Identity(m + 1, m + 1);
  B(0, 0) = 0.0;
  for (Eigen::Index j = 0; j < m; ++j) {
    const auto k = static_cast<std::size_t>(j);
    E(0, j + 1) = r.weights[k];
    E(j + 1, 0) = 1.0;
    E(j + 1, j + 1) = r.support_points[k];
  }
  Eigen::GeneralizedEigenSolver<Eigen::MatrixXd> ges(E, B, false);
  std::vector<Pole> poles;
  if (ges.info() != Eigen::Success) return poles;
  const auto alphas = ges.alphas();
  const auto betas = ges.betas();
  for (Eigen::Index i = 0; i < alphas.size(); ++i) {
    if (std::abs(betas(i)) <= 1e-14 * std::abs(alphas(i))) continue;
    const cplx p = alphas(i) / betas(i);
    cplx num = 0.0;
    cplx dden = 0.0;
    for (std::size_t j = 0; j < r.support_points.size(); ++j) {
      const cplx diff = p - r.support_points[j];
      num += r.weights[j] * r.support_values[j] / diff;
      dden -= r.weights[j] / (diff * diff);
    }
    poles.push_back({p.real(), p.imag(), std::abs(num / dden)});
  }
  std::sort(poles.begin(), poles.end(), [](const Pole& a, const Pole& b) {
    return a.re != b.re ? a.re < b.re : a.im < b.im;
  });
  return poles;
}

RationalApproximant aaa_fit(std::span<const double> x, std::span<const double> f, double tol,
                            std::size_t max_degree) {
  if (x.size() != f.size()) throw ParameterError("aaa_fit: x and f lengths differ");
  if (x.size() < 2) throw ParameterError("aaa_fit: need at least 2 samples");
  if (!(tol > 0.0)) throw ParameterError("aaa_fit: tol must be > 0");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!std::isfinite(x[i]) || !std::isfinite(f[i]))
      throw ParameterError("aaa_fit: non-finite sample");
  const auto [xmin_it, xmax_it] = std::minmax_element(x.begin(), x.end());
  if (*xmin_it == *xmax_it) throw ParameterError("aaa_fit: need at least 2 distinct points");

  RationalApproximant r;
  r.interval_lo = *xmin_it;
  r.interval_hi = *xmax_it;
  r.tolerance = tol;
  for (const double v : f) r.data_scale = std::max(r.data_scale, std::abs(v));
  const double target = tol * r.data_scale;

  std::vector<bool> is_support(x.size(), false);
  const double mean = std::accumulate(f.begin(), f.end(), 0.0) / static_cast<double>(f.size());
  // First support point: the sample farthest from the mean.
  std::size_t next = 0;
  for (std::size_t i = 1; i < f.size(); ++i)
    if (std::abs(f[i] - mean) > std::abs(f[next] - mean)) next = i;

  for (std::size_t m = 1; m <= max_degree + 1 && m <= x.size(); ++m) {
    if (is_support[next]) break;
    is_support[next] = true;
    r.support_points.push_back(x[next]);
    r.support_values.push_back(f[next]);
    auto w = solve_weights(x, f, is_support, r.support_points, r.support_values);
    if (!usable(w))
      throw NumericalError("aaa_fit: degenerate weight solve", static_cast<int>(m - 1));
    r.weights = std::move(w);
    r.achieved_error = residual_max(r, x, f, is_support, &next);
    if (r.achieved_error <= target || next == x.size()) break;
  }

  // Froissart doublets: tiny-residue poles on the observation interval.
  const double band = 1e-2 * (r.interval_hi - r.interval_lo);
  std::vector<std::size_t> drop;
  for (const auto& p : rational_poles(r)) {
    if (p.re < r.interval_lo || p.re > r.interval_hi || std::abs(p.im) > band) continue;
    if (p.residue_abs >= target) continue;
    std::size_t nearest = 0;
    for (std::size_t j = 1; j < r.support_points.size(); ++j)
      if (std::abs(r.support_points[j] - p.re) < std::abs(r.support_points[nearest] - p.re))
        nearest = j;
    drop.push_back(nearest);
  }
  std::sort(drop.begin(), drop.end());
  drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
  if (!drop.empty() && drop.size() < r.support_points.size()) {
    for (auto it = drop.rbegin(); it != drop.rend(); ++it) {
      const auto k = static_cast<long>(*it);
      for (std::size_t i = 0; i < x.size(); ++i)
        if (is_support[i] && x[i] == r.support_points[*it]) is_support[i] = false;
      r.support_points.erase(r.support_points.begin() + k);
      r.support_values.erase(r.support_values.begin() + k);
    }
    auto w = solve_weights(x, f, is_support, r.support_points, r.support_values);
    if (!usable(w))
      throw NumericalError("aaa_fit: degenerate weight solve after cleanup",
                           static_cast<int>(r.support_points.size()) - 1);
    r.weights = std::move(w);
    r.removed_doublets = drop.size();
    r.achieved_error = residual_max(r, x, f, is_support);
  }
  return r;
}

}  // namespace bandlab
