#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <random>
#include <regex>

#include <fmt/format.h>
#include <json.hpp>

#include "semishor/errors.hpp"
#include "semishor/numtheory.hpp"
#include "semishor/phasespace.hpp"
#include "semishor/quantum.hpp"
#include "semishor/semiclassical.hpp"
#include "semishor/verification.hpp"

namespace semishor::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr unsigned kMaxCliWidth = 24;

std::string num(double v) { return fmt::format("{:.17g}", v); }

double unit_interval(std::uint64_t draw) { return static_cast<double>(draw >> 11) * 0x1.0p-53; }

std::uint64_t require_n(const RunConfig& config) {
  if (!config.n) throw InvalidArgument("--N is required");
  const std::uint64_t n = *config.n;
  if (n < 2 || n >= numtheory::kMaxModulus) throw InvalidArgument("--N must satisfy 2 <= N < 2^31");
  return n;
}

unsigned resolve_width(const RunConfig& config, std::uint64_t n) {
  const unsigned l = config.l ? *config.l : default_width(n);
  if (l < 1 || l > kMaxCliWidth) throw InvalidArgument("--l must lie in [1, 24]");
  if ((std::uint64_t{1} << l) < n) throw InvalidArgument("--l too small: 2^l < N");
  return l;
}

// Uniform over the integers in (1, n) coprime to n.
std::uint64_t draw_coprime(std::uint64_t n, std::mt19937_64& rng) {
  std::vector<std::uint64_t> pool;
  for (std::uint64_t v = 2; v < n; ++v) {
    if (std::gcd(v, n) == 1) pool.push_back(v);
  }
  if (pool.empty()) throw InvalidArgument("no x in (1, N) is coprime to N");
  const auto idx = static_cast<std::size_t>(unit_interval(rng()) * static_cast<double>(pool.size()));
  return pool[std::min(idx, pool.size() - 1)];
}

std::uint64_t resolve_x(const RunConfig& config, std::uint64_t n, std::mt19937_64& rng) {
  if (!config.x) return draw_coprime(n, rng);
  if (*config.x <= 1 || *config.x >= n) throw InvalidArgument("--x must satisfy 1 < x < N");
  return *config.x;
}

DistributionMode resolve_mode(const RunConfig& config) {
  const auto mode = parse_distribution_mode(config.mode);
  if (!mode) throw InvalidArgument("--mode must be quantum, semi-paper, semi-strict or envelope");
  if (*mode == DistributionMode::envelope && !config.zhat) {
    throw InvalidArgument("--mode envelope needs --zhat");
  }
  return *mode;
}

DistributionTable distribution_for(std::uint64_t n, std::uint64_t x, unsigned l,
                                   DistributionMode mode, KMode k_mode, std::uint64_t k,
                                   std::optional<double> zhat) {
  using semiclassical::EvalMode;
  switch (mode) {
    case DistributionMode::quantum:
      return quantum::quantum_distribution(n, x, l, k_mode, k);
    case DistributionMode::semi_paper:
      return semiclassical::semiclassical_distribution(n, x, l, {EvalMode::paper_formula, 0}, k_mode, k);
    case DistributionMode::semi_strict:
      return semiclassical::semiclassical_distribution(n, x, l, {EvalMode::strict_integral, 0}, k_mode, k);
    case DistributionMode::envelope:
      return semiclassical::envelope_distribution(n, x, l, zhat.value_or(0.0), k_mode, k);
  }
  throw InvalidArgument("unknown mode");
}

std::string label(std::uint64_t p, std::uint64_t r) { return fmt::format("{} {}", p, r); }

int report_error(std::ostream& err, const std::exception& e) {
  err << "error: " << e.what() << '\n';
  return kInvalidArguments;
}

void write_suite(const verification::SuiteReport& report, Format format, std::ostream& out) {
  if (format == Format::json) {
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name}, {"measured", c.measured}, {"tolerance", c.tolerance}, {"passed", c.passed}});
    }
    out << json{{"suite", report.suite}, {"passed", report.passed()}, {"checks", checks}}.dump(2) << '\n';
    return;
  }
  out << "suite,check,measured,tolerance,status\n";
  for (const auto& c : report.checks) {
    out << report.suite << ",\"" << c.name << "\"," << num(c.measured) << ',' << num(c.tolerance) << ','
        << (c.passed ? "PASS" : "FAIL") << '\n';
  }
}

}  // namespace

unsigned default_width(std::uint64_t n) {
  unsigned l = 1;
  const auto target = static_cast<long double>(n) * static_cast<long double>(n);
  while (std::ldexp(1.0L, static_cast<int>(l)) < target) ++l;
  return l;
}

std::optional<std::pair<double, double>> parse_complex(const std::string& text) {
  static const std::regex number(R"(\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*)");
  static const std::regex pair(R"(\s*([^,]+),([^,]+)\s*)");
  static const std::regex algebraic(
      R"(\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*[ij])?\s*)");
  std::smatch m;
  auto to_double = [](const std::string& s) -> std::optional<double> {
    std::smatch mm;
    if (!std::regex_match(s, mm, number)) return std::nullopt;
    return std::stod(mm[1].str());
  };
  if (std::regex_match(text, m, pair)) {
    auto re = to_double(m[1].str());
    auto im = to_double(m[2].str());
    if (re && im) return std::make_pair(*re, *im);
    return std::nullopt;
  }
  if (std::regex_match(text, m, algebraic) && (m[1].matched || m[2].matched)) {
    const double re = m[1].matched ? std::stod(m[1].str()) : 0.0;
    double im = 0.0;
    if (m[2].matched) {
      im = m[3].matched ? std::stod(m[3].str()) : 1.0;
      if (m[2].str() == "-") im = -im;
    }
    return std::make_pair(re, im);
  }
  return std::nullopt;
}

std::uint64_t sample_index(const std::vector<double>& cumulative, std::uint64_t draw) {
  if (cumulative.empty()) throw InvalidArgument("cannot sample an empty distribution");
  const double u = unit_interval(draw) * cumulative.back();
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  return static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(it - cumulative.begin(),
                                                              static_cast<std::ptrdiff_t>(cumulative.size()) - 1));
}

DistributionTable build_distribution(const RunConfig& config) {
  const std::uint64_t n = require_n(config);
  const unsigned l = resolve_width(config, n);
  const DistributionMode mode = resolve_mode(config);
  std::mt19937_64 rng(config.seed);
  const std::uint64_t x = resolve_x(config, n, rng);

  KMode k_mode = KMode::fixed;
  std::uint64_t k = 0;
  if (config.k) {
    if (*config.k == "all") {
      k_mode = KMode::marginal;
    } else {
      try {
        std::size_t used = 0;
        k = std::stoull(*config.k, &used);
        if (used != config.k->size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw InvalidArgument("--k must be a non-negative integer or 'all'");
      }
    }
  }
  return distribution_for(n, x, l, mode, k_mode, k, config.zhat);
}

FactorReport factor(const RunConfig& config) {
  const std::uint64_t n = require_n(config);
  if (n % 2 == 0) throw InvalidArgument("N must be odd");
  if (numtheory::is_prime(n)) throw InvalidArgument("N must be composite");
  if (numtheory::perfect_power(n)) throw InvalidArgument("N must not be a prime power or perfect power");
  const unsigned l = resolve_width(config, n);
  const DistributionMode mode = resolve_mode(config);
  if (config.max_trials < 1) throw InvalidArgument("--max-trials must be >= 1");

  std::mt19937_64 rng(config.seed);
  FactorReport report;
  report.n = n;
  report.l = l;
  report.mode = std::string(to_string(mode));
  report.seed = config.seed;
  report.x = resolve_x(config, n, rng);

  if (const std::uint64_t g = std::gcd(report.x, n); g != 1) {
    report.lucky_gcd = true;
    report.factors = std::make_pair(std::min(g, n / g), std::max(g, n / g));
    return report;
  }

  const auto table = distribution_for(n, report.x, l, mode, KMode::marginal, 0, config.zhat);
  std::vector<double> cumulative(table.rows.size());
  double running = 0.0;
  for (std::size_t c = 0; c < table.rows.size(); ++c) {
    running += table.rows[c].normalized;
    cumulative[c] = running;
  }

  for (unsigned t = 0; t < config.max_trials; ++t) {
    const std::uint64_t c = sample_index(cumulative, rng());
    report.trials = t + 1;
    report.measured_c.push_back(c);
    const auto result = numtheory::recover_period(BitRegister(c, l), report.x, n);
    if (result.accepted && !report.recovered_L) report.recovered_L = result.candidate_L;
    if (result.factors) {
      report.recovered_L = result.candidate_L;
      const auto [p, r] = *result.factors;
      report.factors = std::make_pair(std::min(p, r), std::max(p, r));
      break;
    }
  }
  return report;
}

int cmd_dist(const RunConfig& config, std::ostream& out, std::ostream& err) {
  DistributionTable table;
  try {
    table = build_distribution(config);
  } catch (const std::exception& e) {
    return report_error(err, e);
  }

  double sum = 0.0;
  bool nonnegative = true;
  for (const auto& row : table.rows) {
    sum += row.normalized;
    nonnegative = nonnegative && row.probability >= 0.0;
  }
  if (!nonnegative || std::abs(sum - 1.0) > 1e-9) {
    err << "error: normalized column sums to " << num(sum) << '\n';
    return kVerificationFailure;
  }

  const std::string k_text = table.k_mode == KMode::marginal ? "all" : std::to_string(table.k);
  if (config.format == Format::json) {
    json rows = json::array();
    for (const auto& row : table.rows) {
      rows.push_back({{"c_hat", row.c_hat},
                      {"probability", row.probability},
                      {"normalized_probability", row.normalized},
                      {"is_good_c", row.is_good_c}});
    }
    json doc{{"command", "dist"}, {"q", table.q},        {"N", table.n},
             {"x", table.x},      {"L", table.period},   {"k", k_text},
             {"mode", to_string(table.mode)},            {"state_norm", table.state_norm},
             {"rows", rows}};
    out << doc.dump(2) << '\n';
    return kSuccess;
  }

  out << fmt::format("# q={},N={},x={},L={},k={},mode={},state_norm={}\n", table.q, table.n, table.x,
                     table.period, k_text, to_string(table.mode), num(table.state_norm));
  out << "c_hat,probability,normalized_probability,is_good_c\n";
  for (const auto& row : table.rows) {
    out << row.c_hat << ',' << num(row.probability) << ',' << num(row.normalized) << ','
        << (row.is_good_c ? 1 : 0) << '\n';
  }
  return kSuccess;
}

int cmd_factor(const RunConfig& config, std::ostream& out, std::ostream& err) {
  FactorReport report;
  try {
    report = factor(config);
  } catch (const std::exception& e) {
    return report_error(err, e);
  }

  if (config.format == Format::json) {
    json doc{{"command", "factor"}, {"N", report.n},         {"x", report.x},
             {"l", report.l},       {"mode", report.mode},   {"seed", report.seed},
             {"trials", report.trials}, {"measured_c", report.measured_c},
             {"recovered_L", report.recovered_L ? json(*report.recovered_L) : json(nullptr)},
             {"factors", report.factors ? json::array({report.factors->first, report.factors->second}) : json(nullptr)},
             {"lucky_gcd", report.lucky_gcd}};
    out << doc.dump(2) << '\n';
  } else {
    std::string measured;
    for (std::size_t i = 0; i < report.measured_c.size(); ++i) {
      measured += (i ? " " : "") + std::to_string(report.measured_c[i]);
    }
    out << "field,value\n";
    out << "N," << report.n << "\nx," << report.x << "\nl," << report.l << "\nmode," << report.mode
        << "\nseed," << report.seed << "\ntrials," << report.trials << "\nmeasured_c," << measured
        << "\nrecovered_L," << (report.recovered_L ? std::to_string(*report.recovered_L) : "")
        << "\nfactors,"
        << (report.factors ? label(report.factors->first, report.factors->second) : "")
        << "\nlucky_gcd," << (report.lucky_gcd ? 1 : 0) << '\n';
  }
  if (!report.factors) {
    err << "no factor found after " << report.trials << " trials\n";
    return kFactoringFailure;
  }
  return kSuccess;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  verification::SuiteReport report;
  try {
    report = verification::run_verify(config.suite, config.tol);
  } catch (const InvalidArgument& e) {
    return report_error(err, e);
  }
  write_suite(report, config.format, out);
  return report.passed() ? kSuccess : kVerificationFailure;
}

int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& err) {
  verification::SuiteReport report;
  try {
    report = verification::run_oracle(config.suite, config.tol);
  } catch (const InvalidArgument& e) {
    return report_error(err, e);
  }
  write_suite(report, config.format, out);
  return report.passed() ? kSuccess : kVerificationFailure;
}

int cmd_phase(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto lambda = parse_complex(config.lambda0);
  if (!lambda) {
    err << "error: cannot parse --lambda0 '" << config.lambda0 << "'\n";
    return kInvalidArguments;
  }
  const double dphi = config.dphi.value_or(std::numbers::pi / 200.0);
  std::vector<phasespace::TrajectoryPoint> traj;
  try {
    if (config.steps < 1) throw InvalidArgument("--steps must be >= 1");
    if (!std::isfinite(dphi)) throw InvalidArgument("--dphi must be finite");
    const auto p0 = phasespace::CoherentPoint::from_lambda({lambda->first, lambda->second});
    traj = phasespace::evolve(p0, dphi * config.steps, config.steps);
  } catch (const std::exception& e) {
    return report_error(err, e);
  }

  if (config.format == Format::json) {
    json rows = json::array();
    for (const auto& t : traj) {
      rows.push_back({{"step", t.step},
                      {"phi", t.phi},
                      {"re_lambda", t.point.lambda().real()},
                      {"im_lambda", t.point.lambda().imag()},
                      {"J0", t.spin.j0},
                      {"re_Jplus", t.spin.jplus.real()},
                      {"im_Jplus", t.spin.jplus.imag()},
                      {"casimir", t.spin.casimir()}});
    }
    out << json{{"command", "phase"}, {"dphi", dphi}, {"steps", config.steps}, {"rows", rows}}.dump(2) << '\n';
    return kSuccess;
  }
  out << "step,phi,re_lambda,im_lambda,J0,re_Jplus,im_Jplus,casimir\n";
  for (const auto& t : traj) {
    out << t.step << ',' << num(t.phi) << ',' << num(t.point.lambda().real()) << ','
        << num(t.point.lambda().imag()) << ',' << num(t.spin.j0) << ',' << num(t.spin.jplus.real())
        << ',' << num(t.spin.jplus.imag()) << ',' << num(t.spin.casimir()) << '\n';
  }
  return kSuccess;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.out.empty()) {
    file.open(config.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << config.out << " for writing\n";
      return kInvalidArguments;
    }
    sink = &file;
  }
  if (config.command == "dist") return cmd_dist(config, *sink, err);
  if (config.command == "factor") return cmd_factor(config, *sink, err);
  if (config.command == "verify") return cmd_verify(config, *sink, err);
  if (config.command == "phase") return cmd_phase(config, *sink, err);
  if (config.command == "oracle") return cmd_oracle(config, *sink, err);
  err << "error: unknown command '" << config.command << "'\n";
  return kInvalidArguments;
}

}  // namespace semishor::cli
