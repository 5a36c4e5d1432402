#pragma once

// Shared machinery of the serial and OpenMP Buchberger kernels.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "conelab/groebner.hpp"

namespace conelab::detail {

inline constexpr std::size_t kNoComponent = std::numeric_limits<std::size_t>::max();

struct BasisEntry {
  Polynomial poly;
  Monomial lm;
  std::uint64_t mask = 0;
  std::size_t component = kNoComponent;
  bool active = true;
};

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Engine {
 public:
  Engine(RingPtr ring, const GbOptions& options);

  /// Normalizes, drops zeros, and feeds the generators through update().
  void seed(std::vector<Polynomial> generators);

  bool done() const { return pairs_.empty(); }
  /// Index of the pair with the smallest lcm (normal strategy).
  std::size_t select_normal() const;
  /// All pairs of minimal lcm degree, removed from the queue in a
  /// deterministic order.
  std::vector<CriticalPair> take_lowest_degree_batch();
  CriticalPair take(std::size_t index);

  Polynomial spoly(const CriticalPair& pair) const;
  /// Full reduction by the active basis elements.
  Polynomial reduce(Polynomial p) const;
  /// Adds a nonzero reduced polynomial (Gebauer-Moller update).
  void insert(Polynomial h);
  void count_reduction(bool zero);

  std::vector<Polynomial> finalize(GbStats* stats) const;

 private:
  std::size_t component_of(const Monomial& m) const;
  const BasisEntry* find_reducer(const Monomial& m, std::uint64_t mask) const;
  bool disjoint(const Monomial& a, const Monomial& b) const;

  RingPtr ring_;
  GbOptions options_;
  std::vector<BasisEntry> basis_;
  std::vector<CriticalPair> pairs_;
  std::uint64_t reductions_ = 0;
  std::uint64_t zero_reductions_ = 0;
};

}  // namespace conelab::detail
