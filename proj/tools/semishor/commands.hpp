#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "semishor/distribution.hpp"

namespace semishor::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInvalidArguments = 1,
  kVerificationFailure = 2,
  kFactoringFailure = 3,
};

enum class Format { csv, json };

struct RunConfig {
  std::string command;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> x;   // drawn from the seed when absent
  std::optional<unsigned> l;        // smallest l with 2^l >= N^2 when absent
  std::optional<std::string> k;     // a class index, or "all" for the marginal
  std::string mode = "quantum";
  std::uint64_t seed = 0;
  unsigned max_trials = 100;
  std::string out;                  // empty: stdout
  Format format = Format::csv;
  std::optional<double> zhat;
  std::string lambda0 = "1";
  std::optional<double> dphi;
  unsigned steps = 400;
  std::string suite = "all";
  std::optional<double> tol;
};

struct FactorReport {
  std::uint64_t n = 0;
  std::uint64_t x = 0;
  unsigned l = 0;
  std::string mode;
  std::uint64_t seed = 0;
  unsigned trials = 0;
  std::vector<std::uint64_t> measured_c;
  std::optional<std::uint64_t> recovered_L;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> factors;
  bool lucky_gcd = false;
};

/// Smallest l with 2^l >= n^2.
unsigned default_width(std::uint64_t n);

/// Parses "re", "re,im" or "re+imi" / "re-imi".
std::optional<std::pair<double, double>> parse_complex(const std::string& text);

/// The deterministic sampler shared by cmd_factor: a uniform double from
/// the top 53 bits of one 64-bit draw, then inverse-CDF lookup.
std::uint64_t sample_index(const std::vector<double>& cumulative, std::uint64_t draw);

/// The factoring pipeline without any I/O. Throws InvalidArgument on a bad
/// configuration.
FactorReport factor(const RunConfig& config);

/// Command entry points; each writes its output (or its error message) and
/// returns the process exit code.
int cmd_dist(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_factor(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_phase(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.command, honouring config.out.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// The distribution cmd_dist would emit.
DistributionTable build_distribution(const RunConfig& config);

}  // namespace semishor::cli
