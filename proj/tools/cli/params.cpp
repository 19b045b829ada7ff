#include "cli/params.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace bandlab::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool parse_real(const std::string& s, double& out) {
  if (s.empty()) return false;
  errno = 0;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size() && errno == 0 && std::isfinite(out);
}

bool parse_integer(const std::string& s, long& out) {
  if (s.empty()) return false;
  errno = 0;
  char* end = nullptr;
  out = std::strtol(s.c_str(), &end, 10);
  return end == s.c_str() + s.size() && errno == 0;
}

bool parse_list(const std::string& s, std::vector<double>& out) {
  out.clear();
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    if (!parse_real(trim(item), v)) return false;
    out.push_back(v);
  }
  return !out.empty();
}

const char* kind_name(ParamSet::Kind k) {
  switch (k) {
    case ParamSet::Kind::real: return "real";
    case ParamSet::Kind::integer: return "integer";
    case ParamSet::Kind::real_list: return "comma-separated reals";
    case ParamSet::Kind::text: return "text";
  }
  return "?";
}

bool valid(ParamSet::Kind kind, const std::string& v) {
  double r = 0.0;
  long i = 0;
  std::vector<double> l;
  switch (kind) {
    case ParamSet::Kind::real: return parse_real(v, r);
    case ParamSet::Kind::integer: return parse_integer(v, i);
    case ParamSet::Kind::real_list: return parse_list(v, l);
    case ParamSet::Kind::text: return !v.empty();
  }
  return false;
}

}  // namespace

void ParamSet::declare(std::string key, Kind kind, std::string default_value, std::string help) {
  entries_[std::move(key)] = Entry{kind, std::move(default_value), std::move(help)};
}

void ParamSet::set(const std::string& key, const std::string& value, std::string_view origin) {
  auto it = entries_.find(key);
  if (it == entries_.end())
    throw UsageError(std::string(origin) + ": unknown key '" + key + "'");
  if (!valid(it->second.kind, value))
    throw UsageError(std::string(origin) + ": '" + key + "' expects " +
                     kind_name(it->second.kind) + ", got '" + value + "'");
  it->second.value = value;
}

const ParamSet::Entry& ParamSet::entry(const std::string& key, Kind kind) const {
  auto it = entries_.find(key);
  if (it == entries_.end() || it->second.kind != kind)
    throw std::logic_error("parameter '" + key + "' not declared as " + kind_name(kind));
  return it->second;
}

double ParamSet::real(const std::string& key) const {
  double v = 0.0;
  parse_real(entry(key, Kind::real).value, v);
  return v;
}

long ParamSet::integer(const std::string& key) const {
  long v = 0;
  parse_integer(entry(key, Kind::integer).value, v);
  return v;
}

std::vector<double> ParamSet::real_list(const std::string& key) const {
  std::vector<double> v;
  parse_list(entry(key, Kind::real_list).value, v);
  return v;
}

std::string ParamSet::text(const std::string& key) const { return entry(key, Kind::text).value; }

std::vector<std::pair<std::string, std::string>> ParamSet::echo() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [k, e] : entries_) out.emplace_back(k, e.value);
  return out;
}

std::string ParamSet::describe() const {
  std::ostringstream os;
  for (const auto& [k, e] : entries_)
    os << "  " << k << " = " << e.value << "\n      " << e.help << " (" << kind_name(e.kind)
       << ")\n";
  return os.str();
}

void apply_config_file(ParamSet& params, const std::filesystem::path& file,
                       std::string_view subcommand, const std::vector<std::string>& all_subcommands) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot read config file '" + file.string() + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    const std::string origin = file.string() + ":" + std::to_string(lineno);
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw UsageError(origin + ": expected key=value");
    std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    const auto dot = key.find('.');
    if (dot != std::string::npos) {
      const std::string scope = key.substr(0, dot);
      if (std::find(all_subcommands.begin(), all_subcommands.end(), scope) == all_subcommands.end())
        throw UsageError(origin + ": unknown section '" + scope + "'");
      if (scope != subcommand) continue;
      key = key.substr(dot + 1);
    }
    params.set(key, value, origin);
  }
}

void apply_overrides(ParamSet& params, const std::vector<std::string>& overrides) {
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos || eq == 0)
      throw UsageError("override '" + o + "' is not of the form key=value");
    params.set(trim(std::string_view(o).substr(0, eq)), trim(std::string_view(o).substr(eq + 1)),
               "command line");
  }
}

}  // namespace bandlab::cli
