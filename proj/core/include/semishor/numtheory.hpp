#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace semishor {

/// An l-bit register value a = sum a_i 2^i, with bit i holding a_i.
///
/// Every state index, amplitude label and symbol index in the library is a
/// BitRegister or a raw integer known to satisfy the same invariant.
class BitRegister {
 public:
  static constexpr unsigned kMaxWidth = 62;

  BitRegister() = default;
  BitRegister(std::uint64_t value, unsigned width);

  std::uint64_t value() const noexcept { return value_; }
  unsigned width() const noexcept { return width_; }
  /// q = 2^width.
  std::uint64_t modulus() const noexcept { return std::uint64_t{1} << width_; }
  int bit(unsigned i) const noexcept { return static_cast<int>((value_ >> i) & 1u); }

  friend bool operator==(const BitRegister&, const BitRegister&) = default;

 private:
  std::uint64_t value_ = 0;
  unsigned width_ = 0;
};

namespace numtheory {

/// Moduli are kept below 2^31 so that products of residues fit in 64 bits.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

/// x^a mod n by square-and-multiply. Negative x is reduced first.
std::uint64_t mod_exp(std::int64_t x, std::uint64_t a, std::uint64_t n);

/// Smallest L >= 1 with x^L = 1 (mod n), by exhaustive stepping.
///
/// O(n). This is the ground-truth oracle for the period, it is never called
/// from the sampling pipeline. Throws NotCoprime when gcd(x, n) != 1.
std::uint64_t multiplicative_order(std::int64_t x, std::uint64_t n);

struct Convergent {
  std::uint64_t numerator;    // d
  std::uint64_t denominator;  // candidate L

  friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// All continued-fraction convergents d/L of c_hat/q with L < n, ordered by
/// increasing L. c_hat = 0 yields the single convergent 0/1.
std::vector<Convergent> continued_fraction_candidates(const BitRegister& c_hat, std::uint64_t n);

enum class FactorFailure { none, odd_period, trivial_root };

struct FactorResult {
  std::optional<std::pair<std::uint64_t, std::uint64_t>> factors;
  FactorFailure reason = FactorFailure::none;

  explicit operator bool() const noexcept { return factors.has_value(); }
};

/// gcd(x^{L/2} - 1, n) and gcd(x^{L/2} + 1, n) when L is even and
/// x^{L/2} != +-1 (mod n). An odd L is rejected first; an even L must satisfy
/// x^L = 1 (mod n).
FactorResult extract_factors(std::int64_t x, std::uint64_t period, std::uint64_t n);

struct PeriodResult {
  std::uint64_t candidate_L = 0;
  std::uint64_t convergent_d = 0;
  bool accepted = false;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> factors;
};

/// Classical post-processing of one measured c_hat: every convergent
/// denominator and its multiples up to max_multiple are tested against
/// x^L = 1 (mod n). Stops at the first candidate that yields factors; if none
/// does, the first accepted candidate (if any) is returned without factors.
PeriodResult recover_period(const BitRegister& c_hat, std::uint64_t x, std::uint64_t n,
                            unsigned max_multiple = 4);

inline unsigned hamming_distance(std::uint64_t b, std::uint64_t c) noexcept {
  return static_cast<unsigned>(std::popcount(b ^ c));
}

/// h(b, c) = prod_i (1 + delta_{b_i c_i}) = 2^{l - HammingDistance(b, c)}.
std::uint64_t h_coefficient(const BitRegister& b, const BitRegister& c);

/// sum_i a_i 2^{l-1-i}.
BitRegister bit_reverse(const BitRegister& a);

inline std::uint64_t bit_reverse_bits(std::uint64_t a, unsigned l) noexcept {
  std::uint64_t out = 0;
  for (unsigned i = 0; i < l; ++i) out |= ((a >> i) & 1u) << (l - 1 - i);
  return out;
}

// Input validation for the factoring front end.
bool is_prime(std::uint64_t n);
/// (base, exponent >= 2) with base^exponent == n, if n is a perfect power.
std::optional<std::pair<std::uint64_t, unsigned>> perfect_power(std::uint64_t n);

}  // namespace numtheory
}  // namespace semishor
