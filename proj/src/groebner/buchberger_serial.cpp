#include "engine.hpp"

namespace conelab {

std::vector<Polynomial> groebner_serial(std::vector<Polynomial> generators, const GbOptions& options, GbStats* stats) {
  if (generators.empty()) return {};
  detail::Engine engine(generators.front().ring(), options);
  engine.seed(std::move(generators));
  while (!engine.done()) {
    const detail::CriticalPair pair = engine.take(engine.select_normal());
    Polynomial h = engine.reduce(engine.spoly(pair));
    engine.count_reduction(h.is_zero());
    if (!h.is_zero()) engine.insert(std::move(h));
  }
  return engine.finalize(stats);
}

}  // namespace conelab
