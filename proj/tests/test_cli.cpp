#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cli/commands.hpp"
#include "cli/output.hpp"
#include "cli/params.hpp"
#include "doctest.h"

namespace fs = std::filesystem;
using namespace bandlab::cli;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("bandlab_test_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const Command& find(const std::string& name) {
  for (const auto& c : commands())
    if (c.name == name) return c;
  throw std::logic_error("no command " + name);
}

int run(const std::string& name, const fs::path& out, const std::vector<std::string>& overrides,
        Format format = Format::csv) {
  RunContext ctx;
  ctx.command = name;
  ctx.out_dir = out;
  ctx.format = format;
  find(name).declare(ctx.params);
  apply_overrides(ctx.params, overrides);
  return find(name).run(ctx);
}

}  // namespace

TEST_CASE("ParamSet: typed values and strict keys") {
  ParamSet p;
  p.declare("r", ParamSet::Kind::real, "1.5", "");
  p.declare("n", ParamSet::Kind::integer, "3", "");
  p.declare("l", ParamSet::Kind::real_list, "1,2", "");
  p.declare("t", ParamSet::Kind::text, "abc", "");
  CHECK(p.real("r") == 1.5);
  CHECK(p.integer("n") == 3);
  CHECK(p.real_list("l") == std::vector<double>{1, 2});
  CHECK(p.text("t") == "abc");
  p.set("r", "-2e-3", "test");
  CHECK(p.real("r") == -2e-3);
  CHECK_THROWS_AS(p.set("nope", "1", "test"), UsageError);
  CHECK_THROWS_AS(p.set("r", "1.5x", "test"), UsageError);
  CHECK_THROWS_AS(p.set("r", "nan", "test"), UsageError);
  CHECK_THROWS_AS(p.set("n", "2.5", "test"), UsageError);
  CHECK_THROWS_AS(p.set("l", "1,,2", "test"), UsageError);
  CHECK_THROWS_AS(apply_overrides(p, {"r"}), UsageError);
  apply_overrides(p, {" n = 7 "});
  CHECK(p.integer("n") == 7);
}

TEST_CASE("config file: comments, scoping, strictness") {
  TempDir dir("config");
  const std::vector<std::string> names = {"sinc-fig", "landau"};
  ParamSet p;
  p.declare("x_min", ParamSet::Kind::real, "0", "");
  p.declare("n_points", ParamSet::Kind::integer, "10", "");
  {
    std::ofstream(dir.path / "ok.cfg") << "# header\n\nx_min = -5   # trailing\nsinc-fig.n_points=11\n"
                                          "landau.n_max = 3\n";
  }
  apply_config_file(p, dir.path / "ok.cfg", "sinc-fig", names);
  CHECK(p.real("x_min") == -5.0);
  CHECK(p.integer("n_points") == 11);

  { std::ofstream(dir.path / "bad.cfg") << "x_mim = 1\n"; }
  CHECK_THROWS_AS(apply_config_file(p, dir.path / "bad.cfg", "sinc-fig", names), UsageError);
  { std::ofstream(dir.path / "noeq.cfg") << "x_min\n"; }
  CHECK_THROWS_AS(apply_config_file(p, dir.path / "noeq.cfg", "sinc-fig", names), UsageError);
  { std::ofstream(dir.path / "scope.cfg") << "bogus.x_min = 1\n"; }
  CHECK_THROWS_AS(apply_config_file(p, dir.path / "scope.cfg", "sinc-fig", names), UsageError);
  CHECK_THROWS_AS(apply_config_file(p, dir.path / "missing.cfg", "sinc-fig", names), UsageError);
}

TEST_CASE("CSV formatting round-trips doubles") {
  Table t;
  t.add("a", {0.1, 1.0 / 3.0, -2.5e-300});
  t.add("b", {1.0, std::nan(""), -std::numeric_limits<double>::infinity()});
  const std::string csv = to_csv(t);
  CHECK(csv.find('\r') == std::string::npos);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "a,b");
  std::getline(in, line);
  CHECK(line == "0.10000000000000001,1");
  std::getline(in, line);
  CHECK(std::stod(line.substr(0, line.find(','))) == 1.0 / 3.0);
  CHECK(line.substr(line.find(',') + 1) == "nan");
  std::getline(in, line);
  CHECK(std::stod(line.substr(0, line.find(','))) == -2.5e-300);
  CHECK(line.substr(line.find(',') + 1) == "-inf");
  CHECK_THROWS(t.add("c", {1.0}));
}

TEST_CASE("atomic write replaces the file and leaves no temp") {
  TempDir dir("atomic");
  const auto p = dir.path / "sub" / "f.txt";
  write_atomic(p, "one\n");
  write_atomic(p, "two\n");
  CHECK(slurp(p) == "two\n");
  CHECK_FALSE(fs::exists(dir.path / "sub" / "f.txt.tmp"));
}

TEST_CASE("sinc-fig: header, row count, value at the origin") {
  TempDir dir("sinc");
  CHECK(run("sinc-fig", dir.path, {}) == kSuccess);
  std::istringstream in(slurp(dir.path / "sinc.csv"));
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,sinc");
  std::size_t rows = 0;
  bool saw_origin = false;
  while (std::getline(in, line)) {
    ++rows;
    if (line == "0,1") saw_origin = true;
  }
  CHECK(rows == 3001);
  CHECK(saw_origin);
}

TEST_CASE("json tables carry the report header") {
  TempDir dir("json");
  CHECK(run("sinc-fig", dir.path, {"n_points=11"}, Format::json) == kSuccess);
  const auto j = Json::parse(slurp(dir.path / "sinc.json"));
  CHECK(j["spec_version"] == "1");
  CHECK(j["generated_by"]["parameters"]["n_points"] == "11");
  CHECK(j["table"]["columns"] == Json({"x", "sinc"}));
  CHECK(j["table"]["sinc"].size() == 11);
  CHECK(j["table"]["sinc"][5] == 1.0);
  CHECK(slurp(dir.path / "sinc.json").find("time") == std::string::npos);
}

TEST_CASE("counterexample: plots, growth table, zero counts") {
  TempDir dir("cex");
  CHECK(run("counterexample", dir.path, {"audit_points=1000"}) == kSuccess);
  for (const char* f : {"counterexample_a10_bounded.csv", "counterexample_a10_growth.csv",
                        "counterexample_a100_bounded.csv", "counterexample_a100_growth.csv"})
    CHECK(fs::exists(dir.path / f));
  const auto j = Json::parse(slurp(dir.path / "growth.json"));
  const auto col = j["growth_table"]["log10_abs_f"];
  for (std::size_t i = 1; i < col.size(); ++i) CHECK(col[i].get<double>() > col[i - 1].get<double>());
  CHECK(j["growth_table"]["envelope_fingerprint"] == j["envelope"]["fingerprint"]);
  for (const auto& plot : j["plots"]) CHECK(plot["bounded_side_max"].get<double>() <= 1.0);
  const double ratio = j["plots"][1]["sign_changes"].get<double>() / j["plots"][0]["sign_changes"].get<double>();
  CHECK(ratio == doctest::Approx(10.0).epsilon(0.15));

  std::istringstream in(slurp(dir.path / "counterexample_a10_bounded.csv"));
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,f");
}

TEST_CASE("continuation: curve columns and rate constant") {
  TempDir dir("cont");
  CHECK(run("continuation", dir.path, {"tol_list=1e-13", "curve_points=200"}) == kSuccess);
  std::istringstream in(slurp(dir.path / "continuation.csv"));
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,truth,extrapolant,abs_err");
  const auto j = Json::parse(slurp(dir.path / "continuation_summary.json"));
  CHECK(j["rate_constant_13"].get<double>() == doctest::Approx(4.7636).epsilon(2e-4));
  const double hw = j["horizons"][0]["horizon_wavelengths"].get<double>();
  CHECK(hw >= 0.5);
  CHECK(hw <= 2.0);
}

TEST_CASE("landau: report fields") {
  TempDir dir("landau");
  CHECK(run("landau", dir.path, {"n_max=200"}) == kSuccess);
  const auto j = Json::parse(slurp(dir.path / "landau_summary.json"));
  CHECK(j.contains("fitted_rate"));
  CHECK(j["fit_r2"].get<double>() > 0.99);
  CHECK(j["fitted_rate"].get<double>() < 4.8);
}

TEST_CASE("verify: passing and failing thresholds") {
  TempDir dir("verify");
  CHECK(run("verify", dir.path, {"target=landau-witness"}) == kSuccess);
  const auto j = Json::parse(slurp(dir.path / "verify_landau-witness.json"));
  CHECK(j["pass"] == true);
  CHECK(j["metrics"][0]["value"].get<double>() < 1e-6);
  CHECK(run("verify", dir.path, {"target=envelope", "envelope_leakage_max=1e-40"}) ==
        kVerificationFailed);
  CHECK_THROWS_AS(run("verify", dir.path, {"target=nothing"}), UsageError);
}

TEST_CASE("spectrum: Gaussian target leaks, envelope does not") {
  TempDir dir("spec");
  CHECK(run("spectrum", dir.path, {"target=gaussian", "window_halfwidth=20"}) == kSuccess);
  auto j = Json::parse(slurp(dir.path / "spectrum_summary.json"));
  CHECK(j["leakage"]["leakage_fraction"].get<double>() > 1e-3);
  CHECK(run("spectrum", dir.path, {"target=envelope"}) == kSuccess);
  j = Json::parse(slurp(dir.path / "spectrum_summary.json"));
  CHECK(j["leakage"]["leakage_fraction"].get<double>() < 1e-8);
}
