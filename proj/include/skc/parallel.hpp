#pragma once

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skc {

// Serial runs the plain reference loop; Parallel splits it across OpenMP
// threads. Both modes must agree bit-for-bit: the reductions used here are
// exact and associative (integer counts, GMP rationals), never floats.
enum class Exec { Serial, Parallel };

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Counts i in [0, count) with pred(i) true.
template <class Pred>
std::uint64_t count_indices(Exec exec, std::int64_t count, Pred&& pred) {
  std::uint64_t hits = 0;
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : hits)
#endif
    for (std::int64_t i = 0; i < count; ++i)
      if (pred(i)) ++hits;
  } else {
    for (std::int64_t i = 0; i < count; ++i)
      if (pred(i)) ++hits;
  }
  return hits;
}

// Sums term(i) over [0, count). T must have exact associative +=.
template <class T, class Term>
T sum_indices(Exec exec, std::int64_t count, T init, Term&& term) {
#ifdef _OPENMP
  if (exec == Exec::Parallel) {
    const int workers = omp_get_max_threads();
    std::vector<T> partial(static_cast<std::size_t>(workers), init);
#pragma omp parallel num_threads(workers)
    {
      T local = init;
#pragma omp for schedule(static) nowait
      for (std::int64_t i = 0; i < count; ++i) local += term(i);
      partial[static_cast<std::size_t>(omp_get_thread_num())] = local;
    }
    T total = init;
    for (const T& p : partial) total += p;
    return total;
  }
#endif
  T total = init;
  for (std::int64_t i = 0; i < count; ++i) total += term(i);
  return total;
}

}  // namespace skc
