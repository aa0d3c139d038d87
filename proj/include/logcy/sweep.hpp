#pragma once

// Exhaustive sweeps over cycles with bounded length and entries. Each sweep
// comes as a serial reference and an OpenMP kernel; accumulators are merged
// with an order-independent combiner, so both give the same result.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <omp.h>

#include "logcy/divisor.hpp"

namespace logcy {

struct SweepRange {
  std::size_t min_length = 2;
  std::size_t max_length = 2;
  long lo = 0;
  long hi = 0;

  std::uint64_t count_for_length(std::size_t k) const {
    std::uint64_t n = 1;
    const auto base = static_cast<std::uint64_t>(hi - lo + 1);
    for (std::size_t i = 0; i < k; ++i) n *= base;
    return n;
  }

  std::uint64_t size() const {
    std::uint64_t n = 0;
    for (std::size_t k = min_length; k <= max_length; ++k) n += count_for_length(k);
    return n;
  }

  /// The index-th cycle in (length, base-(hi-lo+1) digits) order.
  SphereCycle at(std::uint64_t index) const {
    std::size_t k = min_length;
    while (index >= count_for_length(k)) {
      index -= count_for_length(k);
      ++k;
    }
    const auto base = static_cast<std::uint64_t>(hi - lo + 1);
    std::vector<Integer> seq(k);
    for (std::size_t i = k; i-- > 0;) {
      seq[i] = static_cast<long>(index % base) + lo;
      index /= base;
    }
    return SphereCycle(std::move(seq));
  }
};

template <typename Acc, typename Visit, typename Merge>
Acc sweep_reduce_serial(const SweepRange& range, Acc init, Visit visit, Merge merge) {
  Acc acc = init;
  const std::uint64_t n = range.size();
  for (std::uint64_t i = 0; i < n; ++i) visit(acc, range.at(i));
  (void)merge;
  return acc;
}

/// `visit(acc, cycle)` runs concurrently on per-thread accumulators, which
/// are then folded into `init` by `merge(into, from)` in thread-id order.
template <typename Acc, typename Visit, typename Merge>
Acc sweep_reduce_parallel(const SweepRange& range, Acc init, Visit visit, Merge merge, int workers = 0) {
  const auto n = static_cast<std::int64_t>(range.size());
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  std::vector<Acc> partial(static_cast<std::size_t>(threads), init);
#pragma omp parallel num_threads(threads)
  {
    Acc& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 4096)
    for (std::int64_t i = 0; i < n; ++i) visit(local, range.at(static_cast<std::uint64_t>(i)));
  }
  Acc acc = init;
  for (const Acc& p : partial) merge(acc, p);
  return acc;
}

}  // namespace logcy
