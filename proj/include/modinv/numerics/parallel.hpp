#ifndef MODINV_NUMERICS_PARALLEL_HPP
#define MODINV_NUMERICS_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "modinv/numerics/precision.hpp"

namespace modinv {

/// Runs fn(i) for i in [0, n) on `threads` workers (1 = inline). Worker
/// threads inherit the caller's HighPrec working precision, which is
/// thread-local in MPFR. The first exception thrown by any worker is rethrown.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  const unsigned precision = HighPrec::default_precision();
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      HighPrec::default_precision(precision);
      try {
        for (std::size_t i = t; i < n; i += threads) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace modinv

#endif  // MODINV_NUMERICS_PARALLEL_HPP
