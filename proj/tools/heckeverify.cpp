// heckeverify — exact verification of rank-1 and triangular Hecke
// eigensheaf identities at the monodromy level.
//
// Subcommands:
//   gl1-check    rank-1 eigensheaf construction and eigen identities
//   gagm-check   triangular (Ga x Gm) candidate family and Hecke_2 verdicts
//   classify     sort a rank-2 representation by its Galois group
//   selftest     seeded invariant suites
//
// Exit codes: 0 all checks passed, 1 some check failed, 2 bad configuration,
// 3 internal invariant violation.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hecke/hecke.hpp"

namespace {

struct CommandOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  bool pretty = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw hecke::ConfigError("", "cannot open config file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

hecke::RunConfig load_config(const CommandOptions& options, hecke::Scenario scenario) {
  hecke::RunConfig config;
  if (!options.config_path.empty()) {
    config = hecke::parse_config(read_file(options.config_path));
    if (config.scenario != scenario) {
      throw hecke::ConfigError("/scenario",
                               "config scenario does not match the subcommand");
    }
  } else if (scenario == hecke::Scenario::Selftest) {
    config.scenario = hecke::Scenario::Selftest;
  } else {
    throw hecke::ConfigError("", "this subcommand requires --config <path>");
  }
  if (options.seed) {
    config.seed = *options.seed;
  }
  if (options.out) {
    config.out = *options.out;
  }
  return config;
}

int execute(const CommandOptions& options, hecke::Scenario scenario) {
  const hecke::RunConfig config = load_config(options, scenario);
  const hecke::RunReport report = hecke::run(config);
  const std::string payload = hecke::render(report, options.pretty);

  if (config.out) {
    std::ofstream out(*config.out, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write report to " << *config.out << "\n";
      return 2;
    }
    out << payload;
    std::cerr << hecke::render_text(report);
  } else {
    std::cout << payload;
    std::cerr << hecke::render_text(report);
  }
  return hecke::exit_code(report);
}

void attach_options(CLI::App* cmd, CommandOptions& options, bool config_required) {
  auto* config_opt =
      cmd->add_option("--config", options.config_path, "path to a JSON run configuration");
  if (config_required) {
    config_opt->required();
  }
  cmd->add_option("--seed", options.seed, "override the configuration seed");
  cmd->add_option("--out", options.out, "write the JSON report to this path");
  cmd->add_flag("--pretty", options.pretty, "indent the JSON report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hecke eigensheaf verification engine"};
  app.require_subcommand(1);

  CommandOptions gl1_options;
  CLI::App* gl1 = app.add_subcommand("gl1-check", "verify a rank-1 eigensheaf family");
  attach_options(gl1, gl1_options, /*config_required=*/true);

  CommandOptions gagm_options;
  CLI::App* gagm =
      app.add_subcommand("gagm-check", "verify a triangular candidate family");
  attach_options(gagm, gagm_options, /*config_required=*/true);

  CommandOptions classify_options;
  CLI::App* classify =
      app.add_subcommand("classify", "classify a rank-2 representation");
  attach_options(classify, classify_options, /*config_required=*/true);

  CommandOptions selftest_options;
  CLI::App* selftest = app.add_subcommand("selftest", "run the seeded invariant suites");
  attach_options(selftest, selftest_options, /*config_required=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (gl1->parsed()) {
      return execute(gl1_options, hecke::Scenario::Gl1);
    }
    if (gagm->parsed()) {
      return execute(gagm_options, hecke::Scenario::Gagm);
    }
    if (classify->parsed()) {
      return execute(classify_options, hecke::Scenario::Classify);
    }
    return execute(selftest_options, hecke::Scenario::Selftest);
  } catch (const hecke::ConfigError& e) {
    std::cerr << "config error at '" << e.path() << "': " << e.what() << "\n";
    return 2;
  } catch (const hecke::InvariantViolation& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const hecke::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 3;
  }
}
