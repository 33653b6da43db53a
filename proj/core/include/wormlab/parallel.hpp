#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace wormlab {

// Worker count: hardware concurrency, capped by WORMLAB_THREADS (integer >= 1)
// when that variable is set.
int worker_count();

// Splits [0, n) into contiguous chunks, one per worker, and calls
// body(begin, end, chunk_index). Chunk boundaries depend only on n and the
// worker count, so per-chunk results merged in chunk order are deterministic.
template <class Body>
std::size_t parallel_chunks(std::size_t n, Body&& body) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(worker_count(), n));
  if (workers == 1) {
    body(std::size_t{0}, n, std::size_t{0});
    return 1;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = n * w / workers;
    const std::size_t end = n * (w + 1) / workers;
    threads.emplace_back([&body, begin, end, w] { body(begin, end, w); });
  }
  for (auto& t : threads) t.join();
  return workers;
}

}  // namespace wormlab
