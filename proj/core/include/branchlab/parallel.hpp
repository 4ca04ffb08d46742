#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace branchlab {

// Runs fn(block) for block in [0, nBlocks) on up to `threads` workers. Callers store
// per-block results and reduce them in block order, so the outcome never depends on
// the thread count.
inline void parallelBlocks(std::size_t nBlocks, unsigned threads,
                           const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || nBlocks <= 1) {
    for (std::size_t b = 0; b < nBlocks; ++b) fn(b);
    return;
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, nBlocks));
  std::size_t next = 0;
  std::mutex mu;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      std::size_t b;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= nBlocks || error) return;
        b = next++;
      }
      try {
        fn(b);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace branchlab
