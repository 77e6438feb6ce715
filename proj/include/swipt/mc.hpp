#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace swipt::mc {

// Trials are processed in fixed blocks. Each block owns its output slot and
// every trial owns an RNG stream derived from (seed, trial index), so the
// block partition -- not the thread schedule -- defines the arithmetic and
// serial and parallel execution produce identical results.
inline constexpr std::size_t kBlockSize = 1024;

inline std::size_t block_count(std::size_t trials) {
  return (trials + kBlockSize - 1) / kBlockSize;
}

// Neumaier-compensated accumulator. Per-block sums are combined across blocks
// in block order, which keeps Monte Carlo reductions exact enough to be
// reproducible bit for bit.
class NeumaierSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Serial reference path: fn(block_index, trial_begin, trial_end).
template <class Fn>
void for_each_block_serial(std::size_t trials, Fn&& fn) {
  const std::size_t nb = block_count(trials);
  for (std::size_t b = 0; b < nb; ++b)
    fn(b, b * kBlockSize, std::min(trials, (b + 1) * kBlockSize));
}

// OpenMP path over the same block partition. fn must write only to state
// owned by its block index.
template <class Fn>
void for_each_block_parallel(std::size_t trials, int threads, Fn&& fn) {
#ifdef _OPENMP
  const long long nb = static_cast<long long>(block_count(trials));
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (long long b = 0; b < nb; ++b) {
    const std::size_t begin = static_cast<std::size_t>(b) * kBlockSize;
    fn(static_cast<std::size_t>(b), begin, std::min(trials, begin + kBlockSize));
  }
#else
  (void)threads;
  for_each_block_serial(trials, std::forward<Fn>(fn));
#endif
}

// threads == 1 selects the serial reference; anything else the OpenMP path
// (threads == 0 meaning all hardware threads).
template <class Fn>
void for_each_block(std::size_t trials, int threads, Fn&& fn) {
  if (threads == 1)
    for_each_block_serial(trials, std::forward<Fn>(fn));
  else
    for_each_block_parallel(trials, threads, std::forward<Fn>(fn));
}

}  // namespace swipt::mc
