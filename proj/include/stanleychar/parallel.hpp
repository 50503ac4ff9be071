#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace stanleychar {

/// Evaluates chunk_fn(0..chunks-1) on up to `threads` workers and folds the
/// results with `combine` in chunk order, so the result never depends on
/// scheduling. The first exception thrown by a worker is rethrown.
template <class T, class ChunkFn, class Combine>
T chunked_reduce(std::size_t chunks, unsigned threads, T init, ChunkFn chunk_fn, Combine combine) {
  std::vector<std::optional<T>> partial(chunks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      try {
        partial[c].emplace(chunk_fn(c));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = chunks;
      }
    }
  };

  unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& value : partial) init = combine(std::move(init), std::move(*value));
  return init;
}

}  // namespace stanleychar
