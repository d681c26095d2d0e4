#include "semishor/numtheory.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "detail.hpp"
#include "semishor/errors.hpp"

namespace semishor {

BitRegister::BitRegister(std::uint64_t value, unsigned width) : value_(value), width_(width) {
  if (width > kMaxWidth) {
    throw InvalidArgument("BitRegister width " + std::to_string(width) + " exceeds " +
                          std::to_string(kMaxWidth));
  }
  if (value >> width != 0) {
    throw InvalidArgument("value " + std::to_string(value) + " does not fit in " +
                          std::to_string(width) + " bits");
  }
}

namespace numtheory {
namespace {

void check_modulus(std::uint64_t n) {
  if (n < 2) throw InvalidArgument("modulus must be >= 2, got " + std::to_string(n));
  if (n >= kMaxModulus) {
    throw InvalidArgument("modulus " + std::to_string(n) + " is not below 2^31");
  }
}

std::uint64_t reduce(std::int64_t x, std::uint64_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(((x % m) + m) % m);
}

// Exact b^e, or nullopt once it exceeds limit.
std::optional<std::uint64_t> bounded_pow(std::uint64_t b, unsigned e, std::uint64_t limit) {
  detail::u128 acc = 1;
  for (unsigned i = 0; i < e; ++i) {
    acc *= b;
    if (acc > limit) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

std::uint64_t mod_exp(std::int64_t x, std::uint64_t a, std::uint64_t n) {
  check_modulus(n);
  std::uint64_t base = reduce(x, n);
  std::uint64_t result = 1 % n;
  while (a != 0) {
    if (a & 1u) result = result * base % n;
    base = base * base % n;
    a >>= 1;
  }
  return result;
}

std::uint64_t multiplicative_order(std::int64_t x, std::uint64_t n) {
  check_modulus(n);
  const std::uint64_t base = reduce(x, n);
  const std::uint64_t g = std::gcd(base, n);
  if (g != 1) throw NotCoprime(base, n, g);

  std::uint64_t value = base;
  std::uint64_t order = 1;
  while (value != 1) {
    value = value * base % n;
    ++order;
  }
  return order;
}

std::vector<Convergent> continued_fraction_candidates(const BitRegister& c_hat, std::uint64_t n) {
  const std::uint64_t q = c_hat.modulus();
  std::vector<Convergent> out;

  std::uint64_t num = c_hat.value();
  std::uint64_t den = q;
  // h_{-1}/k_{-1} = 1/0, h_{-2}/k_{-2} = 0/1
  std::uint64_t h1 = 1, h2 = 0;
  std::uint64_t k1 = 0, k2 = 1;
  while (den != 0) {
    const std::uint64_t a = num / den;
    const std::uint64_t rem = num % den;
    num = den;
    den = rem;

    const std::uint64_t h = a * h1 + h2;
    const std::uint64_t k = a * k1 + k2;
    if (k >= n) break;
    out.push_back({h, k});
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
  }
  return out;
}

FactorResult extract_factors(std::int64_t x, std::uint64_t period, std::uint64_t n) {
  check_modulus(n);
  if (period == 0) throw InvalidArgument("L must be positive");
  if (period % 2 != 0) return {std::nullopt, FactorFailure::odd_period};
  if (mod_exp(x, period, n) != 1) {
    throw InvalidArgument("x^L != 1 (mod N) for L = " + std::to_string(period));
  }

  const std::uint64_t half = mod_exp(x, period / 2, n);
  if (half == 1 || half == n - 1) return {std::nullopt, FactorFailure::trivial_root};

  return {std::make_pair(std::gcd(half - 1, n), std::gcd(half + 1, n)), FactorFailure::none};
}

PeriodResult recover_period(const BitRegister& c_hat, std::uint64_t x, std::uint64_t n,
                            unsigned max_multiple) {
  PeriodResult first_accepted;
  for (const auto& conv : continued_fraction_candidates(c_hat, n)) {
    for (unsigned m = 1; m <= max_multiple; ++m) {
      const std::uint64_t candidate = conv.denominator * m;
      if (mod_exp(static_cast<std::int64_t>(x), candidate, n) != 1) continue;

      PeriodResult result{candidate, conv.numerator, true, std::nullopt};
      if (auto f = extract_factors(static_cast<std::int64_t>(x), candidate, n)) {
        result.factors = f.factors;
        return result;
      }
      if (!first_accepted.accepted) first_accepted = result;
    }
  }
  return first_accepted;
}

std::uint64_t h_coefficient(const BitRegister& b, const BitRegister& c) {
  if (b.width() != c.width()) throw InvalidArgument("h_coefficient: register widths differ");
  return std::uint64_t{1} << (b.width() - hamming_distance(b.value(), c.value()));
}

BitRegister bit_reverse(const BitRegister& a) {
  return BitRegister(bit_reverse_bits(a.value(), a.width()), a.width());
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint64_t, unsigned>> perfect_power(std::uint64_t n) {
  if (n < 4) return std::nullopt;
  for (unsigned e = 2; (std::uint64_t{1} << e) <= n; ++e) {
    const auto guess = static_cast<std::uint64_t>(
        std::llround(std::pow(static_cast<double>(n), 1.0 / static_cast<double>(e))));
    for (std::uint64_t b = guess > 1 ? guess - 1 : 2; b <= guess + 1; ++b) {
      if (b < 2) continue;
      if (auto p = bounded_pow(b, e, n); p && *p == n) return std::make_pair(b, e);
    }
  }
  return std::nullopt;
}

}  // namespace numtheory
}  // namespace semishor
