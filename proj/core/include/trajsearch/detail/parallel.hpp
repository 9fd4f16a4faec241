#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

#include "trajsearch/types.hpp"

namespace trajsearch::detail {

inline unsigned resolve_threads(unsigned requested, Index work) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (work < t) t = static_cast<unsigned>(std::max<Index>(work, 1));
  return t;
}

/// Splits [0, n) into `chunks` contiguous ranges and runs fn(chunk, begin, end)
/// on up to `threads` workers. The first exception thrown is rethrown.
template <class Fn>
void for_each_chunk(Index n, unsigned threads, unsigned chunks, Fn&& fn) {
  if (chunks == 0) return;
  auto bounds = [&](unsigned c) { return n / chunks * c + std::min<Index>(c, n % chunks); };
  if (threads <= 1) {
    for (unsigned c = 0; c < chunks; ++c) fn(c, bounds(c), bounds(c + 1));
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (unsigned c = w; c < chunks; c += threads) fn(c, bounds(c), bounds(c + 1));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace trajsearch::detail
