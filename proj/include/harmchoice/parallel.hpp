#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace harmchoice {

/// 0 means "use the available hardware parallelism".
inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(chunk) for every chunk in [0, chunks). Chunks are pulled from a
/// shared counter, so callers must make per-chunk results independent of
/// which worker ran them and reduce them in chunk order.
template <class Fn>
void for_each_chunk(std::size_t chunks, unsigned workers, Fn&& fn) {
  workers = static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), chunks));
  if (workers <= 1) {
    for (std::size_t k = 0; k < chunks; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto body = [&] {
    try {
      for (std::size_t k = next++; k < chunks && !failed; k = next++) fn(k);
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace harmchoice
