#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void add_flags(CLI::App& cmd, semishor::cli::RunConfig& config) {
  cmd.add_option("--N", config.n, "Number to factor");
  cmd.add_option("--x", config.x, "Base coprime to N (random from the seed when absent)");
  cmd.add_option("--l", config.l, "Register width, q = 2^l (default: smallest with 2^l >= N^2)");
  cmd.add_option("--k", config.k, "Residue class index, or 'all' for the marginal");
  cmd.add_option("--mode", config.mode, "quantum | semi-paper | semi-strict | envelope");
  cmd.add_option("--seed", config.seed, "Seed for every random draw");
  cmd.add_option("--max-trials", config.max_trials, "Measurement budget for factor");
  cmd.add_option("--out", config.out, "Output file (default stdout)");
  cmd.add_option("--format", config.format, "csv | json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, semishor::cli::Format>{{"csv", semishor::cli::Format::csv},
                                                       {"json", semishor::cli::Format::json}}));
  cmd.add_option("--zhat", config.zhat, "Effective phase for the envelope mode");
  cmd.add_option("--lambda0", config.lambda0, "Initial coherent point: re, re,im or re+imi");
  cmd.add_option("--dphi", config.dphi, "Flow increment per step (default pi/200)");
  cmd.add_option("--steps", config.steps, "Number of flow steps");
  cmd.add_option("--suite", config.suite, "Suite for verify or oracle");
  cmd.add_option("--tol", config.tol, "Tolerance override for every check");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and semiclassical simulation of Shor's period finding"};
  app.require_subcommand(1);
  semishor::cli::RunConfig config;

  const std::pair<const char*, const char*> commands[] = {
      {"dist", "Probability of every measured c_hat"},
      {"factor", "Sample measurements until N factors"},
      {"verify", "Run an invariant suite"},
      {"phase", "Coherent-point precession trajectory"},
      {"oracle", "Run an oracle agreement suite"},
  };
  for (const auto& [name, help] : commands) {
    auto* cmd = app.add_subcommand(name, help);
    add_flags(*cmd, config);
    cmd->callback([&config, name = std::string(name)] { config.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : semishor::cli::kInvalidArguments;
  }
  return semishor::cli::run(config, std::cout, std::cerr);
}
