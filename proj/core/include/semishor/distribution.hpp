#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace semishor {

enum class KMode { fixed, marginal };

enum class DistributionMode { quantum, semi_paper, semi_strict, envelope };

std::string_view to_string(DistributionMode mode);
std::optional<DistributionMode> parse_distribution_mode(std::string_view text);

struct DistributionRow {
  std::uint64_t c_hat = 0;
  double probability = 0.0;
  double normalized = 0.0;
  bool is_good_c = false;
};

/// Probability of each measured c_hat, for one (q, N, x) instance.
///
/// probability holds the raw value (P, the semiclassical P, or an envelope);
/// normalized is probability divided by the column total, so it always sums
/// to one. state_norm is <S'|S'> for semiclassical tables and 1 otherwise.
struct DistributionTable {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  std::uint64_t x = 0;
  std::uint64_t period = 0;
  KMode k_mode = KMode::fixed;
  std::uint64_t k = 0;
  DistributionMode mode = DistributionMode::quantum;
  double state_norm = 1.0;
  std::vector<DistributionRow> rows;

  double total() const;
  double max_probability() const;
};

/// Builds rows from raw per-c_hat probabilities: normalizes the column and
/// flags the good c_hat values of (q, period). Throws UndefinedRatio when the
/// column sums to zero.
void fill_rows(DistributionTable& table, const std::vector<double>& probabilities);

}  // namespace semishor
