#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <numbers>

#include "bandlab/blcore.hpp"
#include "bandlab/continuation.hpp"
#include "bandlab/counterexample.hpp"
#include "bandlab/envelope.hpp"
#include "bandlab/error.hpp"
#include "bandlab/landau.hpp"
#include "bandlab/spectral.hpp"

namespace bandlab::cli {

namespace {

using K = ParamSet::Kind;

constexpr const char* kSpecVersion = "1";
constexpr const char* kVersion = "1.0";

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// "10" -> "10", "2.5" -> "2p5", "-1" -> "m1".
std::string tag(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  std::string s = buf;
  for (auto& c : s) {
    if (c == '.') c = 'p';
    if (c == '-') c = 'm';
    if (c == '+') c = 'P';
  }
  return s;
}

std::size_t positive_count(const ParamSet& p, const std::string& key, std::size_t min_value) {
  const long v = p.integer(key);
  if (v < static_cast<long>(min_value))
    throw UsageError("'" + key + "' must be at least " + std::to_string(min_value));
  return static_cast<std::size_t>(v);
}

Json json_list(const std::vector<double>& v) {
  Json a = Json::array();
  for (const double x : v) a.push_back(number(x));
  return a;
}

Json leakage_json(const LeakageReport& r) {
  return Json{{"total_energy", number(r.total_energy)},
              {"in_band_energy", number(r.in_band_energy)},
              {"leakage_fraction", number(r.leakage_fraction)},
              {"band_edge", r.band_edge},
              {"window_halfwidth", r.window_halfwidth},
              {"x_step", r.x_step},
              {"k_min", r.k_min},
              {"k_max", r.k_max},
              {"k_points", r.k_points}};
}

Json strip_json(const StripBoundReport& r) {
  return Json{{"type_halfrate", r.type_halfrate},
              {"x_window", {r.x_window.x_min, r.x_window.x_max, r.x_window.n_points}},
              {"y_values", json_list(r.y_values)},
              {"sup_log_ratio", json_list(r.sup_log_ratio)},
              {"argsup_x", json_list(r.argsup_x)},
              {"log_constant", number(r.log_constant())},
              {"bounded_uniformly", r.bounded_uniformly()}};
}

void emit(RunContext& ctx, const std::string& stem, const Table& t) {
  ctx.written.push_back(write_table(ctx.out_dir, stem, t, ctx.format, report_header(ctx)));
}

void emit_report(RunContext& ctx, const std::string& stem, const Json& j) {
  ctx.written.push_back(write_report(ctx.out_dir, stem, j));
}

EvalWindow window_from(const ParamSet& p, const std::string& lo, const std::string& hi,
                       const std::string& n) {
  EvalWindow w{p.real(lo), p.real(hi), positive_count(p, n, 2)};
  if (!(w.x_min < w.x_max)) throw UsageError("'" + lo + "' must be below '" + hi + "'");
  return w;
}

// ---------------------------------------------------------------- sinc-fig

void declare_sinc_fig(ParamSet& p) {
  p.declare("x_min", K::real, "-30", "left end of the plotting window");
  p.declare("x_max", K::real, "30", "right end of the plotting window");
  p.declare("n_points", K::integer, "3001", "number of evaluation points");
}

int run_sinc_fig(RunContext& ctx) {
  const auto xs = window_from(ctx.params, "x_min", "x_max", "n_points").points();
  std::vector<double> ys(xs.size());
  std::transform(xs.begin(), xs.end(), ys.begin(), [](double x) { return sinc(x); });
  Table t;
  t.add("x", xs);
  t.add("sinc", std::move(ys));
  emit(ctx, "sinc", t);
  return kSuccess;
}

// ----------------------------------------------------------------- recover

void declare_recover(ParamSet& p) {
  p.declare("shift", K::real, "0.5", "test signal is sinc(x - shift)");
  p.declare("n_min", K::integer, "-40", "first Nyquist sample index");
  p.declare("n_max", K::integer, "40", "last Nyquist sample index");
  p.declare("x_min", K::real, "-20", "left end of the evaluation window");
  p.declare("x_max", K::real, "20", "right end of the evaluation window");
  p.declare("n_points", K::integer, "801", "number of evaluation points");
}

int run_recover(RunContext& ctx) {
  const auto& p = ctx.params;
  const double shift = p.real("shift");
  const RealFunction truth = [shift](double x) { return sinc(x - shift); };
  const auto samples = sample_on_grid(truth, p.integer("n_min"), p.integer("n_max"));
  const auto xs = window_from(p, "x_min", "x_max", "n_points").points();
  const auto rec = reconstruct(samples, xs);
  std::vector<double> tr(xs.size());
  std::vector<double> err(xs.size());
  double max_err = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    tr[i] = truth(xs[i]);
    err[i] = std::abs(rec[i] - tr[i]);
    max_err = std::max(max_err, err[i]);
  }
  Table t;
  t.add("x", xs);
  t.add("truth", std::move(tr));
  t.add("recovered", rec);
  t.add("abs_err", std::move(err));
  emit(ctx, "recover", t);

  Json j = report_header(ctx);
  j["n_samples"] = samples.size();
  j["max_abs_err"] = number(max_err);
  j["parseval_energy"] = number(parseval_energy(samples));
  j["exact_energy"] = std::numbers::pi;
  emit_report(ctx, "recover_summary", j);
  return kSuccess;
}

// ---------------------------------------------------------------- spectrum

void declare_spectrum(ParamSet& p) {
  p.declare("target", K::text, "envelope", "sinc | envelope | sinc-power | gaussian");
  p.declare("window_halfwidth", K::real, "200", "x-window half-width L");
  p.declare("x_step", K::real, "0.05", "quadrature step h (< pi)");
  p.declare("k_half_width", K::real, "8", "k grid covers [-K, K]");
  p.declare("k_points", K::integer, "4001", "points in the k grid (odd keeps k = 0)");
  p.declare("band_edge", K::real, "1", "leakage counts energy with |k| above this");
  p.declare("sigma", K::real, "0.75", "envelope decay exponent");
  p.declare("band_budget", K::real, "0.5", "envelope band");
  p.declare("envelope_x_max", K::real, "100", "envelope design range");
  p.declare("power_n", K::integer, "10", "sinc-power exponent and dilation");
  p.declare("power_d", K::real, "0", "sinc-power translate");
}

int run_spectrum(RunContext& ctx) {
  const auto& p = ctx.params;
  const std::string target = p.text("target");
  RealFunction f;
  if (target == "sinc") {
    f = [](double x) { return sinc(x); };
  } else if (target == "envelope") {
    const auto env = build_envelope(p.real("sigma"), p.real("band_budget"), p.real("envelope_x_max"));
    f = [env](double x) { return envelope_eval(env, x); };
  } else if (target == "sinc-power") {
    const long n = p.integer("power_n");
    if (n < 1) throw UsageError("'power_n' must be at least 1");
    const double d = p.real("power_d");
    f = [n, d](double x) {
      return std::pow(sinc((x - d) / static_cast<double>(n)), static_cast<double>(n));
    };
  } else if (target == "gaussian") {
    f = [](double x) { return std::exp(-0.5 * x * x); };
  } else {
    throw UsageError("unknown spectrum target '" + target + "'");
  }
  const auto k_grid =
      UniformGrid::symmetric(p.real("k_half_width"), positive_count(p, "k_points", 3));
  const auto S = forward_transform(f, p.real("window_halfwidth"), p.real("x_step"), k_grid);
  const auto leak = band_leakage(S, p.real("band_edge"));

  Table t;
  std::vector<double> re(S.F_values.size()), im(re.size()), ab(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) {
    re[i] = S.F_values[i].real();
    im[i] = S.F_values[i].imag();
    ab[i] = std::abs(S.F_values[i]);
  }
  t.add("k", S.k_values);
  t.add("re", std::move(re));
  t.add("im", std::move(im));
  t.add("abs", std::move(ab));
  emit(ctx, "spectrum", t);

  Json j = report_header(ctx);
  j["target"] = target;
  j["leakage"] = leakage_json(leak);
  if (S.k_values.size() % 2 == 1)
    j["two_pi_F0"] = number(2.0 * std::numbers::pi * S.F_values[S.k_values.size() / 2].real());
  emit_report(ctx, "spectrum_summary", j);
  return kSuccess;
}

// ---------------------------------------------------------------- envelope

void declare_envelope(ParamSet& p) {
  p.declare("sigma", K::real, "0.75", "decay exponent in (1/2, 1)");
  p.declare("band_budget", K::real, "0.5", "sum of the factor coefficients");
  p.declare("x_max", K::real, "100", "range over which the decay is designed");
  p.declare("fit_lo", K::real, "10", "left end of the decay fit");
  p.declare("fit_hi", K::real, "100", "right end of the decay fit");
  p.declare("n_probes", K::integer, "200", "log-spaced probes in the decay fit");
  p.declare("profile_points", K::integer, "2001", "points of the profile on [0, x_max]");
}

int run_envelope(RunContext& ctx) {
  const auto& p = ctx.params;
  const auto env = build_envelope(p.real("sigma"), p.real("band_budget"), p.real("x_max"));
  const auto xs = EvalWindow{0.0, env.x_max(), positive_count(p, "profile_points", 2)}.points();
  std::vector<double> la(xs.size());
  std::vector<int> sg(xs.size());
  envelope_log_abs(env, xs, la, sg);
  std::vector<double> psi(xs.size()), l10(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    psi[i] = sg[i] == 0 ? 0.0 : sg[i] * std::exp(la[i]);
    l10[i] = la[i] / std::numbers::ln10;
  }
  Table t;
  t.add("x", xs);
  t.add("psi", std::move(psi));
  t.add("log10_abs_psi", std::move(l10));
  emit(ctx, "envelope", t);

  const auto fit = decay_fit(env, p.real("fit_lo"), p.real("fit_hi"),
                             positive_count(p, "n_probes", 10));
  Json j = report_header(ctx);
  j["n_terms"] = env.n_terms();
  j["scale_c"] = env.scale_c();
  j["band"] = env.band();
  j["fingerprint"] = hex64(env.fingerprint());
  j["decay_fit"] = Json{{"fitted_exponent", number(fit.fitted_exponent)},
                        {"fit_intercept", number(fit.fit_intercept)},
                        {"x_lo", fit.x_lo},
                        {"x_hi", fit.x_hi},
                        {"perturbed_probes", fit.perturbed_probes},
                        {"x_probes", json_list(fit.x_probes)},
                        {"log_abs_psi", json_list(fit.log_abs_psi)}};
  emit_report(ctx, "envelope_summary", j);
  return kSuccess;
}

// ---------------------------------------------------------- counterexample

void declare_counterexample(ParamSet& p) {
  p.declare("a_list", K::real_list, "10,100", "growth parameters plotted");
  p.declare("sigma", K::real, "0.75", "envelope decay exponent");
  p.declare("envelope_x_max", K::real, "100", "envelope design range");
  p.declare("bounded_x_min", K::real, "-40", "left end of the bounded-side plot");
  p.declare("bounded_points", K::integer, "20000", "points on [bounded_x_min, 0]");
  p.declare("growth_x_max", K::real, "25", "right end of the log-scale plot");
  p.declare("growth_points", K::integer, "2500", "points on (0, growth_x_max]");
  p.declare("table_x_eval", K::real, "1", "where the growth table evaluates f");
  p.declare("table_a_list", K::real_list, "5,10,20,40", "strictly increasing a values");
  p.declare("audit_x_min", K::real, "-1000", "left end of the bounded-side audit");
  p.declare("audit_points", K::integer, "100000", "points in the bounded-side audit");
}

int run_counterexample(RunContext& ctx) {
  const auto& p = ctx.params;
  const auto a_list = p.real_list("a_list");
  const auto base = make_counterexample(a_list.front(), p.real("envelope_x_max"), p.real("sigma"));
  const double bx = p.real("bounded_x_min");
  if (!(bx < 0.0)) throw UsageError("'bounded_x_min' must be negative");
  const double gx = p.real("growth_x_max");
  if (!(gx > 0.0)) throw UsageError("'growth_x_max' must be positive");
  const std::size_t nb = positive_count(p, "bounded_points", 100);
  const std::size_t ng = positive_count(p, "growth_points", 2);

  Json per_a = Json::array();
  for (const double a : a_list) {
    CounterexampleParams cp = base;
    cp.a = a;
    cp.validate();

    const auto xb = EvalWindow{bx, 0.0, nb}.points();
    std::vector<double> fb(xb.size());
    for (std::size_t i = 0; i < xb.size(); ++i) fb[i] = f_eval(cp, xb[i]);
    Table tb;
    tb.add("x", xb);
    tb.add("f", std::move(fb));
    emit(ctx, "counterexample_a" + tag(a) + "_bounded", tb);

    std::vector<double> xg(ng), lg(ng);
    for (std::size_t i = 0; i < ng; ++i) {
      xg[i] = gx * static_cast<double>(i + 1) / static_cast<double>(ng);
      lg[i] = f_log10_abs(cp, {xg[i], 0.0});
    }
    Table tg;
    tg.add("x", std::move(xg));
    tg.add("log10_abs_f", std::move(lg));
    emit(ctx, "counterexample_a" + tag(a) + "_growth", tg);

    const auto audit = bounded_side_audit(cp, bx, nb);
    per_a.push_back(Json{{"a", a},
                         {"bounded_side_max", audit.max_abs},
                         {"sign_changes", audit.sign_changes},
                         {"min_sign_change_spacing", number(audit.min_sign_change_spacing)}});
  }

  const auto table_a = p.real_list("table_a_list");
  const auto gt = growth_table(base, p.real("table_x_eval"), table_a,
                               AuditGrid{p.real("audit_x_min"), positive_count(p, "audit_points", 100)});
  Json j = report_header(ctx);
  j["envelope"] = Json{{"sigma", base.envelope.sigma()},
                       {"n_terms", base.envelope.n_terms()},
                       {"band", base.envelope.band()},
                       {"fingerprint", hex64(base.envelope.fingerprint())}};
  j["plots"] = std::move(per_a);
  j["growth_table"] = Json{{"x_eval", gt.x_eval},
                           {"a_values", json_list(gt.a_values)},
                           {"log10_abs_f", json_list(gt.log10_abs_f)},
                           {"bounded_side_max", gt.bounded_side_max},
                           {"envelope_fingerprint", hex64(gt.envelope_fingerprint)}};
  emit_report(ctx, "growth", j);
  return kSuccess;
}

// ------------------------------------------------------------------ landau

void declare_landau(ParamSet& p) {
  p.declare("d_min", K::real, "20", "first distance");
  p.declare("d_max", K::real, "200", "last distance");
  p.declare("d_step", K::real, "20", "distance increment");
  p.declare("n_max", K::integer, "400", "largest witness power searched");
  p.declare("points_per_lobe", K::integer, "50", "sup-search resolution per sinc lobe");
}

int run_landau(RunContext& ctx) {
  const auto& p = ctx.params;
  const double d0 = p.real("d_min");
  const double d1 = p.real("d_max");
  const double dd = p.real("d_step");
  if (!(d0 > 0.0) || !(d1 >= d0) || !(dd > 0.0))
    throw UsageError("need 0 < d_min <= d_max and d_step > 0");
  std::vector<double> ds;
  for (long i = 0;; ++i) {
    const double d = d0 + static_cast<double>(i) * dd;
    if (d > d1 * (1.0 + 1e-12)) break;
    ds.push_back(d);
  }
  const auto n_max = static_cast<int>(positive_count(p, "n_max", 1));
  const auto ppl = static_cast<int>(positive_count(p, "points_per_lobe", 4));
  const auto curve = rate_fit(ds, n_max, ppl);

  std::vector<double> argmax(curve.argmax_n.begin(), curve.argmax_n.end());
  Table t;
  t.add("d", curve.d_values);
  t.add("log_lower_bound", curve.log_lower_bound);
  t.add("argmax_n", std::move(argmax));
  emit(ctx, "landau", t);

  Json j = report_header(ctx);
  j["d_values"] = json_list(curve.d_values);
  j["log_lower_bound"] = json_list(curve.log_lower_bound);
  j["argmax_n"] = curve.argmax_n;
  j["fitted_rate"] = number(curve.fitted_rate);
  j["fit_intercept"] = number(curve.fit_intercept);
  j["fit_r2"] = number(curve.fit_r2);
  j["n_max"] = curve.n_max;
  emit_report(ctx, "landau_summary", j);
  return kSuccess;
}

// ------------------------------------------------------------ continuation

void declare_continuation(ParamSet& p) {
  p.declare("signal", K::text, "cosine", "cosine | lorenz");
  p.declare("frequency", K::real, "1", "cosine angular frequency");
  p.declare("lorenz_component", K::integer, "2", "0 = x, 1 = y, 2 = z");
  p.declare("lorenz_transient", K::real, "20", "time discarded before the observation starts");
  p.declare("t0", K::real, format_double(-40.0 * std::numbers::pi), "start of observation");
  p.declare("t1", K::real, "0", "end of observation");
  p.declare("n_samples", K::integer, "2000", "uniform samples on [t0, t1]");
  p.declare("tol_list", K::real_list, "1e-13,1e-10,1e-7", "relative fit tolerances");
  p.declare("threshold", K::real, "1e-2", "relative error defining the horizon");
  p.declare("max_degree", K::integer, "100", "degree cap of the rational fit");
  p.declare("curve_wavelengths", K::real, "3", "extent of the plotted extrapolation");
  p.declare("curve_points", K::integer, "2000", "points in the plotted curve");
}

int run_continuation(RunContext& ctx) {
  const auto& p = ctx.params;
  SignalSpec spec;
  const std::string kind = p.text("signal");
  if (kind == "cosine") {
    spec.kind = SignalSpec::Kind::cosine_mix;
    spec.cosine_terms = {CosineTerm{1.0, p.real("frequency"), 0.0}};
  } else if (kind == "lorenz") {
    spec.kind = SignalSpec::Kind::lorenz_component;
    spec.lorenz.component = static_cast<int>(p.integer("lorenz_component"));
    spec.lorenz.transient = p.real("lorenz_transient");
  } else {
    throw UsageError("unknown signal '" + kind + "'");
  }
  spec.t0 = p.real("t0");
  spec.t1 = p.real("t1");
  spec.n_samples = positive_count(p, "n_samples", 50);
  const auto tols = p.real_list("tol_list");
  const double threshold = p.real("threshold");
  const double curve_wl = p.real("curve_wavelengths");
  if (!(curve_wl > 0.0)) throw UsageError("'curve_wavelengths' must be positive");

  const auto sig = sample_signal(spec);
  const auto wl = dominant_wavelength_estimate(sig.t, sig.values);
  const double lambda = wl.wavelength;
  const auto truth = signal_function(spec, spec.t1 + (std::max(curve_wl, 10.0) + 1.0) * lambda);

  Json horizons = Json::array();
  std::vector<RationalApproximant> fits;
  for (const double tol : tols) {
    fits.push_back(aaa_fit(sig.t, sig.values, tol, positive_count(p, "max_degree", 1)));
    const auto& r = fits.back();
    const auto h = horizon_measure(truth, r, spec.t1, lambda, threshold);
    horizons.push_back(Json{{"tolerance", tol},
                            {"digits", h.digits},
                            {"degree", r.degree()},
                            {"removed_doublets", r.removed_doublets},
                            {"achieved_error", number(r.achieved_error)},
                            {"horizon_abs", h.horizon_abs},
                            {"horizon_wavelengths", h.horizon_wavelengths},
                            {"capped", h.capped},
                            {"rate_constant", number(h.digits > 0.0 ? rate_constant(h.digits)
                                                                    : std::nan(""))}});
  }

  // Observation interval followed by the extrapolated stretch, first tolerance.
  const auto np = positive_count(p, "curve_points", 2);
  const auto xs = EvalWindow{spec.t0, spec.t1 + curve_wl * lambda, np}.points();
  std::vector<double> tr(np), ex(np), er(np);
  for (std::size_t i = 0; i < np; ++i) {
    tr[i] = truth(xs[i]);
    ex[i] = rational_eval(fits.front(), xs[i]);
    er[i] = std::abs(ex[i] - tr[i]);
  }
  Table t;
  t.add("x", xs);
  t.add("truth", std::move(tr));
  t.add("extrapolant", std::move(ex));
  t.add("abs_err", std::move(er));
  emit(ctx, "continuation", t);

  Json j = report_header(ctx);
  j["wavelength"] = lambda;
  j["wavelength_method"] =
      wl.method == WavelengthMethod::spectral_peak ? "spectral_peak" : "zero_crossings";
  j["peak_to_median"] = number(wl.peak_to_median);
  j["horizons"] = std::move(horizons);
  j["rate_constant_13"] = rate_constant(13.0);
  emit_report(ctx, "continuation_summary", j);
  return kSuccess;
}

// ------------------------------------------------------------------ verify

void declare_verify(ParamSet& p) {
  p.declare("target", K::text, "envelope", "envelope | counterexample | landau-witness");
  p.declare("sigma", K::real, "0.75", "envelope decay exponent");
  p.declare("envelope_x_max", K::real, "100", "envelope design range (envelope target)");
  p.declare("a", K::real, "10", "counterexample growth parameter");
  p.declare("counterexample_x_max", K::real, "20000",
            "envelope design range for the counterexample");
  p.declare("power_n", K::integer, "10", "witness power");
  p.declare("power_d", K::real, "50", "witness translate");
  p.declare("envelope_leakage_max", K::real, "1e-8", "envelope leakage threshold");
  p.declare("counterexample_leakage_max", K::real, "1e-6", "counterexample leakage threshold");
  p.declare("witness_leakage_max", K::real, "1e-6", "witness leakage threshold");
  p.declare("y_list", K::real_list, "-4,-2,-1,1,2,4", "strips tested");
  p.declare("strip_x_min", K::real, "-50", "left end of the strip window");
  p.declare("strip_x_max", K::real, "50", "right end of the strip window");
  p.declare("strip_points", K::integer, "2001", "points per strip");
  p.declare("strip_slack", K::real, "1e-9", "allowed growth of the strip sup with |y|");
}

struct Metric {
  std::string name;
  double value;
  double threshold;
  bool pass;
};

// Largest excess of a strip level's sup over the smallest-|y| level.
double strip_growth(const StripBoundReport& r) {
  double ref_level = std::numeric_limits<double>::infinity();
  double ref = 0.0;
  for (std::size_t i = 0; i < r.y_values.size(); ++i) {
    const double level = std::abs(r.y_values[i]);
    if (level < ref_level) {
      ref_level = level;
      ref = r.sup_log_ratio[i];
    } else if (level == ref_level) {
      ref = std::max(ref, r.sup_log_ratio[i]);
    }
  }
  double worst = -std::numeric_limits<double>::infinity();
  for (const double v : r.sup_log_ratio) worst = std::max(worst, v - ref);
  return worst;
}

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

int run_verify(RunContext& ctx) {
  const auto& p = ctx.params;
  const std::string target = p.text("target");
  const auto ys = p.real_list("y_list");
  const auto window = window_from(p, "strip_x_min", "strip_x_max", "strip_points");
  const double slack = p.real("strip_slack");
  const auto k_grid = SpectralGridDefaults::k_grid();

  std::vector<Metric> metrics;
  Json detail;
  StripBoundReport strip;
  if (target == "envelope") {
    const auto env = build_envelope(p.real("sigma"), 0.5, p.real("envelope_x_max"));
    const auto S = forward_transform([&env](double x) { return envelope_eval(env, x); },
                                     SpectralGridDefaults::window_halfwidth,
                                     SpectralGridDefaults::x_step, k_grid);
    const auto leak = band_leakage(S, env.band_budget() + 0.1);
    const double thr = p.real("envelope_leakage_max");
    metrics.push_back({"leakage_fraction", leak.leakage_fraction, thr, leak.leakage_fraction < thr});
    const LogAbsFunction la = [&env](std::complex<double> z) { return envelope_log_abs(env, z); };
    strip = strip_bound_check(la, 0.5, ys, window);
    metrics.push_back({"strip_log_constant", strip.log_constant(), 1.0, strip.log_constant() <= 1.0});
    detail["leakage"] = leakage_json(leak);
    detail["fingerprint"] = hex64(env.fingerprint());
  } else if (target == "counterexample") {
    const auto cp = make_counterexample(p.real("a"), p.real("counterexample_x_max"), p.real("sigma"));
    const auto leak = band_leakage(counterexample_spectrum(cp, k_grid));
    const double thr = p.real("counterexample_leakage_max");
    metrics.push_back({"leakage_fraction", leak.leakage_fraction, thr, leak.leakage_fraction < thr});
    strip = strip_bound_verify(cp, ys, window);
    detail["leakage"] = leakage_json(leak);
    detail["fingerprint"] = hex64(cp.envelope.fingerprint());
  } else if (target == "landau-witness") {
    const SincPowerParams sp{static_cast<int>(p.integer("power_n")), p.real("power_d")};
    sp.validate();
    const auto S = forward_transform(
        [&sp](double x) {
          return std::pow(sinc((x - sp.d) / sp.n), static_cast<double>(sp.n));
        },
        SpectralGridDefaults::window_halfwidth, SpectralGridDefaults::x_step, k_grid);
    const auto leak = band_leakage(S);
    const double thr = p.real("witness_leakage_max");
    metrics.push_back({"leakage_fraction", leak.leakage_fraction, thr, leak.leakage_fraction < thr});
    const LogAbsFunction la = [&sp](std::complex<double> z) {
      return static_cast<double>(sp.n) * log_abs_sinc((z - sp.d) / static_cast<double>(sp.n));
    };
    strip = strip_bound_check(la, 1.0, ys, window);
    detail["leakage"] = leakage_json(leak);
  } else {
    throw UsageError("unknown verify target '" + target + "'");
  }
  const bool finite = all_finite(strip.sup_log_ratio);
  metrics.push_back({"strip_all_finite", finite ? 1.0 : 0.0, 1.0, finite});
  const double growth = strip_growth(strip);
  metrics.push_back({"strip_growth_with_abs_y", growth, slack, finite && growth <= slack});
  detail["strip"] = strip_json(strip);

  Json j = report_header(ctx);
  j["target"] = target;
  Json jm = Json::array();
  bool ok = true;
  for (const auto& m : metrics) {
    jm.push_back(Json{{"name", m.name}, {"value", number(m.value)}, {"threshold", m.threshold},
                      {"pass", m.pass}});
    if (!m.pass) {
      ok = false;
      std::cerr << "verify " << target << ": " << m.name << " = " << format_double(m.value)
                << " fails threshold " << format_double(m.threshold) << "\n";
    }
  }
  j["metrics"] = std::move(jm);
  j["pass"] = ok;
  j["detail"] = std::move(detail);
  emit_report(ctx, "verify_" + target, j);
  return ok ? kSuccess : kVerificationFailed;
}

}  // namespace

const std::vector<Command>& commands() {
  static const std::vector<Command> all = {
      {"sinc-fig", "sinc curve data", declare_sinc_fig, run_sinc_fig},
      {"recover", "recover sinc(x - shift) from Nyquist samples", declare_recover, run_recover},
      {"spectrum", "discretized Fourier transform and band leakage", declare_spectrum,
       run_spectrum},
      {"envelope", "envelope profile and decay-exponent fit", declare_envelope, run_envelope},
      {"counterexample", "one-sided bounded family: plots and growth table",
       declare_counterexample, run_counterexample},
      {"landau", "sinc-power lower bounds and their exponential rate", declare_landau,
       run_landau},
      {"continuation", "rational extrapolation horizon", declare_continuation,
       run_continuation},
      {"verify", "band-leakage and strip-bound certificates", declare_verify, run_verify},
  };
  return all;
}

std::vector<std::string> command_names() {
  std::vector<std::string> out;
  for (const auto& c : commands()) out.push_back(c.name);
  return out;
}

Json report_header(const RunContext& ctx) {
  Json params = Json::object();
  for (const auto& [k, v] : ctx.params.echo()) params[k] = v;
  return Json{{"spec_version", kSpecVersion},
              {"command", ctx.command},
              {"generated_by",
               Json{{"program", "bandlab"},
                    {"version", kVersion},
                    {"format", ctx.format == Format::csv ? "csv" : "json"},
                    {"parameters", std::move(params)}}}};
}

}  // namespace bandlab::cli
