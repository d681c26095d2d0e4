#pragma once

// Internal helpers shared by the translation units of the core library.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <numbers>
#include <thread>
#include <vector>

namespace semishor::detail {

__extension__ using u128 = unsigned __int128;

/// exp(2 pi i j / q) for j in [0, q). Phases are always reduced mod q in
/// integer arithmetic before the lookup.
class RootsOfUnity {
 public:
  explicit RootsOfUnity(std::uint64_t q) : q_(q), table_(q) {
    for (std::uint64_t j = 0; j < q; ++j) {
      table_[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                      static_cast<double>(q));
    }
  }

  const std::complex<double>& operator[](std::uint64_t j) const { return table_[j & (q_ - 1)]; }
  std::uint64_t size() const { return q_; }

 private:
  std::uint64_t q_;
  std::vector<std::complex<double>> table_;
};

/// Runs fn(i) for i in [0, count) on a small pool of worker threads. Each
/// index is visited exactly once; callers write results into per-index slots
/// and assemble them after the call returns.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace semishor::detail
