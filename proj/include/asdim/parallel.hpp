#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace asdim {

/// Worker count for verification sweeps. Overridden by the ASDIM_WORKERS
/// environment variable; defaults to the hardware concurrency, capped at 8.
inline int worker_count() {
  if (const char* env = std::getenv("ASDIM_WORKERS")) {
    int v = std::atoi(env);
    if (v >= 1) return std::min(v, 64);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

/// Runs fn(begin, end, chunk_index) over [0, n) split into contiguous chunks,
/// one per worker. Callers merge per-chunk results in chunk order, which keeps
/// every reduction deterministic regardless of scheduling.
template <class Fn>
void parallel_chunks(long long n, Fn&& fn) {
  int workers = worker_count();
  if (n <= 0) return;
  if (workers <= 1 || n < 4096) {
    fn(0LL, n, 0);
    return;
  }
  long long chunk = (n + workers - 1) / workers;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    long long lo = w * chunk;
    long long hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&fn, lo, hi, w] { fn(lo, hi, w); });
  }
  for (auto& t : threads) t.join();
}

/// Tiny deterministic RNG (splitmix64). Used instead of <random> engines so
/// seeded artifacts are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(unsigned long long seed) : state_(seed) {}

  unsigned long long next() {
    unsigned long long z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, n); n must be positive.
  unsigned long long below(unsigned long long n) { return next() % n; }

 private:
  unsigned long long state_;
};

}  // namespace asdim
