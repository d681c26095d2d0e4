#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semishor {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when gcd(x, N) != 1. The common divisor is a factor of N, so callers
// that are factoring should report it rather than treat it as a failure.
class NotCoprime : public std::domain_error {
 public:
  NotCoprime(std::uint64_t x, std::uint64_t n, std::uint64_t common)
      : std::domain_error("gcd(" + std::to_string(x) + ", " + std::to_string(n) +
                          ") = " + std::to_string(common) + " != 1"),
        gcd_(common) {}

  std::uint64_t gcd() const noexcept { return gcd_; }

 private:
  std::uint64_t gcd_;
};

class ResourceLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

class UndefinedRatio : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace semishor
