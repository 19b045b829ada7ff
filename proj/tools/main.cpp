#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bandlab/error.hpp"
#include "cli/commands.hpp"

namespace cli = bandlab::cli;

namespace {

struct SubOptions {
  std::string config;
  std::string out = ".";
  std::string format = "csv";
  std::vector<std::string> overrides;
  bool show_params = false;
};

int run(const cli::Command& cmd, const SubOptions& opt) {
  cli::RunContext ctx;
  ctx.command = cmd.name;
  cmd.declare(ctx.params);
  if (opt.show_params) {
    std::cout << cmd.name << " parameters:\n" << ctx.params.describe();
    return cli::kSuccess;
  }
  if (!opt.config.empty())
    cli::apply_config_file(ctx.params, opt.config, cmd.name, cli::command_names());
  cli::apply_overrides(ctx.params, opt.overrides);
  ctx.out_dir = opt.out;
  ctx.format = opt.format == "json" ? cli::Format::json : cli::Format::csv;
  const int code = cmd.run(ctx);
  for (const auto& p : ctx.written) std::cout << p.string() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bandlab: band-limited function experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "bandlab 1.0");

  std::vector<SubOptions> options(cli::commands().size());
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < cli::commands().size(); ++i) {
    const auto& cmd = cli::commands()[i];
    auto& o = options[i];
    auto* sub = app.add_subcommand(cmd.name, cmd.summary);
    sub->add_option("--config", o.config, "key=value config file")->check(CLI::ExistingFile);
    sub->add_option("--out", o.out, "output directory")->capture_default_str();
    sub->add_option("--format", o.format, "table format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_flag("--show-params", o.show_params, "list parameters with defaults and exit");
    sub->add_option("overrides", o.overrides, "key=value parameter overrides");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kSuccess : cli::kUsageOrIo;
  }

  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!subs[i]->parsed()) continue;
    const auto& name = cli::commands()[i].name;
    try {
      return run(cli::commands()[i], options[i]);
    } catch (const cli::UsageError& e) {
      std::cerr << "bandlab " << name << ": " << e.what() << "\n";
      return cli::kUsageOrIo;
    } catch (const cli::IoError& e) {
      std::cerr << "bandlab " << name << ": " << e.what() << "\n";
      return cli::kUsageOrIo;
    } catch (const bandlab::ParameterError& e) {
      std::cerr << "bandlab " << name << ": invalid parameter: " << e.what() << "\n";
      return cli::kUsageOrIo;
    } catch (const bandlab::DomainError& e) {
      std::cerr << "bandlab " << name << ": invalid parameter: " << e.what() << "\n";
      return cli::kUsageOrIo;
    } catch (const std::exception& e) {
      std::cerr << "bandlab " << name << ": computation failed: " << e.what() << "\n";
      return cli::kComputationFailed;
    }
  }
  return cli::kUsageOrIo;
}
