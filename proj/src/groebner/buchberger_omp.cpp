#include <omp.h>

#include <exception>

#include "engine.hpp"

namespace conelab {

void set_thread_count(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

// Pairs of the lowest lcm degree are reduced concurrently against a frozen
// basis, then re-reduced and inserted one at a time in a fixed order, so the
// result does not depend on scheduling.
std::vector<Polynomial> groebner_parallel(std::vector<Polynomial> generators, const GbOptions& options,
                                          GbStats* stats) {
  if (generators.empty()) return {};
  detail::Engine engine(generators.front().ring(), options);
  engine.seed(std::move(generators));
  while (!engine.done()) {
    const std::vector<detail::CriticalPair> batch = engine.take_lowest_degree_batch();
    const auto n = static_cast<long>(batch.size());
    std::vector<Polynomial> reduced(batch.size(), Polynomial(nullptr));
    std::vector<std::exception_ptr> failures(batch.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k) {
      try {
        reduced[k] = engine.reduce(engine.spoly(batch[k]));
      } catch (...) {
        failures[k] = std::current_exception();
      }
    }
    for (const auto& f : failures)
      if (f) std::rethrow_exception(f);
    for (auto& r : reduced) {
      Polynomial h = r.is_zero() ? std::move(r) : engine.reduce(std::move(r));
      engine.count_reduction(h.is_zero());
      if (!h.is_zero()) engine.insert(std::move(h));
    }
  }
  return engine.finalize(stats);
}

}  // namespace conelab
