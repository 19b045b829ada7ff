#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cli/output.hpp"
#include "cli/params.hpp"

namespace bandlab::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageOrIo = 2,
  kComputationFailed = 3,
};

struct RunContext {
  std::string command;
  ParamSet params;
  std::filesystem::path out_dir = ".";
  Format format = Format::csv;
  std::vector<std::filesystem::path> written;
};

struct Command {
  std::string name;
  std::string summary;
  void (*declare)(ParamSet&);
  int (*run)(RunContext&);
};

const std::vector<Command>& commands();
std::vector<std::string> command_names();

/// spec_version, command and the parameter echo; no timestamps or paths.
Json report_header(const RunContext& ctx);

}  // namespace bandlab::cli
