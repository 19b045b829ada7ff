#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace bandlab::cli {

using Json = nlohmann::ordered_json;

enum class Format { csv, json };

/// Failure to create or write an output file. Exit 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Column-major numeric table.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> data;

  void add(std::string name, std::vector<double> values);
  std::size_t rows() const { return data.empty() ? 0 : data.front().size(); }
};

/// %.17g; "nan", "inf", "-inf" for non-finite values.
std::string format_double(double v);

std::string to_csv(const Table& t);

/// {"columns": [...], "<column>": [...], ...}; non-finite values become null.
Json to_json(const Table& t);

/// Writes to a sibling temp file and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// Writes `stem`.csv or `stem`.json; returns the path written.
std::filesystem::path write_table(const std::filesystem::path& dir, const std::string& stem,
                                  const Table& t, Format format, const Json& header);

std::filesystem::path write_report(const std::filesystem::path& dir, const std::string& stem,
                                   const Json& report);

/// JSON number or null.
Json number(double v);

}  // namespace bandlab::cli
