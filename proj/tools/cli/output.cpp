#include "cli/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace bandlab::cli {

void Table::add(std::string name, std::vector<double> values) {
  if (!data.empty() && values.size() != rows())
    throw std::logic_error("Table: column '" + name + "' has the wrong length");
  columns.push_back(std::move(name));
  data.push_back(std::move(values));
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) out += ',';
    out += t.columns[c];
  }
  out += '\n';
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      if (c) out += ',';
      out += format_double(t.data[c][r]);
    }
    out += '\n';
  }
  return out;
}

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json to_json(const Table& t) {
  Json j;
  j["columns"] = t.columns;
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    Json col = Json::array();
    for (const double v : t.data[c]) col.push_back(number(v));
    j[t.columns[c]] = std::move(col);
  }
  return j;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  const auto dir = path.parent_path();
  if (!dir.empty()) {
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
  }
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::filesystem::remove(tmp, ec);
      throw IoError("write to '" + tmp.string() + "' failed");
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot rename onto '" + path.string() + "': " + ec.message());
  }
}

std::filesystem::path write_table(const std::filesystem::path& dir, const std::string& stem,
                                  const Table& t, Format format, const Json& header) {
  if (format == Format::csv) {
    const auto path = dir / (stem + ".csv");
    write_atomic(path, to_csv(t));
    return path;
  }
  Json j = header;
  j["table"] = to_json(t);
  const auto path = dir / (stem + ".json");
  write_atomic(path, j.dump(2) + "\n");
  return path;
}

std::filesystem::path write_report(const std::filesystem::path& dir, const std::string& stem,
                                   const Json& report) {
  const auto path = dir / (stem + ".json");
  write_atomic(path, report.dump(2) + "\n");
  return path;
}

}  // namespace bandlab::cli
