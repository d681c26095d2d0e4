#include "semishor/distribution.hpp"

#include <algorithm>
#include <cmath>

#include "semishor/errors.hpp"
#include "semishor/quantum.hpp"

namespace semishor {

std::string_view to_string(DistributionMode mode) {
  switch (mode) {
    case DistributionMode::quantum:
      return "quantum";
    case DistributionMode::semi_paper:
      return "semi-paper";
    case DistributionMode::semi_strict:
      return "semi-strict";
    case DistributionMode::envelope:
      return "envelope";
  }
  return "unknown";
}

std::optional<DistributionMode> parse_distribution_mode(std::string_view text) {
  for (auto mode : {DistributionMode::quantum, DistributionMode::semi_paper,
                    DistributionMode::semi_strict, DistributionMode::envelope}) {
    if (text == to_string(mode)) return mode;
  }
  return std::nullopt;
}

double DistributionTable::total() const {
  double sum = 0.0;
  for (const auto& row : rows) sum += row.probability;
  return sum;
}

double DistributionTable::max_probability() const {
  double best = 0.0;
  for (const auto& row : rows) best = std::max(best, row.probability);
  return best;
}

void fill_rows(DistributionTable& table, const std::vector<double>& probabilities) {
  double total = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0) || !std::isfinite(p)) throw InvalidArgument("probabilities must be finite and >= 0");
    total += p;
  }
  if (total <= 0.0) throw UndefinedRatio("distribution column sums to zero");

  std::vector<bool> good(probabilities.size(), false);
  for (auto c : quantum::good_c_values(table.q, table.period)) {
    if (c < good.size()) good[c] = true;
  }

  table.rows.resize(probabilities.size());
  for (std::size_t c = 0; c < probabilities.size(); ++c) {
    table.rows[c] = {c, probabilities[c], probabilities[c] / total, good[c]};
  }
}

}  // namespace semishor
