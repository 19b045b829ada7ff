#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bandlab::cli {

/// Bad invocation: unknown key, malformed value, unreadable config. Exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Typed key=value parameters of one subcommand. Every key must be declared
/// with a default before it can be set; values are checked when set.
class ParamSet {
 public:
  enum class Kind { real, integer, real_list, text };

  void declare(std::string key, Kind kind, std::string default_value, std::string help);

  /// Throws UsageError for an undeclared key or a value that does not parse
  /// as the declared kind. `origin` names the source in the message.
  void set(const std::string& key, const std::string& value, std::string_view origin);

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  double real(const std::string& key) const;
  long integer(const std::string& key) const;
  std::vector<double> real_list(const std::string& key) const;
  std::string text(const std::string& key) const;

  /// Current values in key order, exactly as given.
  std::vector<std::pair<std::string, std::string>> echo() const;

  /// "key = default  help" lines for --show-params.
  std::string describe() const;

 private:
  struct Entry {
    Kind kind;
    std::string value;
    std::string help;
  };
  const Entry& entry(const std::string& key, Kind kind) const;
  std::map<std::string, Entry> entries_;
};

/// Reads key=value lines; '#' starts a comment, blank lines are skipped.
/// A key may be scoped as "<subcommand>.<key>"; keys scoped to another
/// subcommand are skipped, every other key must be declared.
void apply_config_file(ParamSet& params, const std::filesystem::path& file,
                       std::string_view subcommand, const std::vector<std::string>& all_subcommands);

/// Applies "key=value" command-line overrides.
void apply_overrides(ParamSet& params, const std::vector<std::string>& overrides);

}  // namespace bandlab::cli
