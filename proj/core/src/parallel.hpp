#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace levywn::detail {

inline unsigned worker_count(unsigned requested, std::size_t work) {
  unsigned t = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work, 1)));
}

// body(begin, end) over contiguous chunks of [0, n); the first exception is
// rethrown after all workers join.
template <class Body>
void parallel_chunks(std::size_t n, unsigned threads, Body&& body) {
  const unsigned t = worker_count(threads, n);
  if (t <= 1) {
    body(std::size_t{0}, n);
    return;
  }
  std::exception_ptr error;
  std::mutex m;
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (unsigned w = 0; w < t; ++w) {
    const std::size_t begin = n * w / t;
    const std::size_t end = n * (w + 1) / t;
    pool.emplace_back([&, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(m);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace levywn::detail
