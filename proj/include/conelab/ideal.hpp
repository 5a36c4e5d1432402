#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "conelab/groebner.hpp"
#include "conelab/hilbert.hpp"
#include "conelab/polynomial.hpp"

namespace conelab {

/// Ideal given by generators, with reduced Gröbner bases cached per monomial
/// order. Copies share the cache.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {});
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  /// Reduced GB in the ring's own order.
  const std::vector<Polynomial>& groebner_basis() const { return groebner_basis(ring_->order()); }
  /// Reduced GB for `order`; the polynomials live in ring()->with_order(order).
  const std::vector<Polynomial>& groebner_basis(const MonomialOrder& order) const;

  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const;

  /// "(g1, g2, ...)" with the given generators.
  std::string to_string() const;

 private:
  struct Cache {
    std::shared_mutex mutex;
    std::map<std::string, std::shared_ptr<const std::vector<Polynomial>>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

Polynomial normal_form(const Polynomial& f, const Ideal& ideal);
bool contains(const Ideal& ideal, const Polynomial& f);
/// Is `inner` a subset of `outer`?
bool contains(const Ideal& outer, const Ideal& inner);
/// Equality of reduced Gröbner bases in the ring's order.
bool equal(const Ideal& a, const Ideal& b);

/// Moves a polynomial between rings by matching variable names; throws
/// RingMismatch when a used variable has no counterpart.
Polynomial transfer(const Polynomial& f, const RingPtr& target);
Ideal transfer(const Ideal& ideal, const RingPtr& target);

/// I ∩ k[remaining variables], as an ideal of the same ring.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop);
/// I : f^∞.
Ideal saturate(const Ideal& ideal, const Polynomial& f);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal quotient(const Ideal& ideal, const Polynomial& g);
Ideal quotient(const Ideal& ideal, const Ideal& by);

/// Kernel of source -> target/target_ideal, y_i |-> images[i].
Ideal ring_map_kernel(const RingPtr& source, const std::vector<Polynomial>& images, const Ideal& target_ideal);

/// Leading monomials of the reduced GB in `order`.
std::vector<Monomial> leading_monomials(const Ideal& ideal, const MonomialOrder& order);

/// Krull dimension of P/I, -1 for the unit ideal.
int krull_dimension(const Ideal& ideal);
/// Monomials outside the leading-term ideal, ascending; requires dimension <= 0.
std::vector<Monomial> standard_monomials(const Ideal& ideal);
std::uint64_t vector_space_dimension(const Ideal& ideal);

/// Hilbert series of P/I for an ideal homogeneous in the given weights.
HilbertSeries hilbert_series(const Ideal& ideal, const std::vector<std::uint32_t>& weights);
/// Hilbert series of the associated graded ring of the weighted-degree
/// filtration; agrees with hilbert_series on homogeneous input.
HilbertSeries affine_hilbert_series(const Ideal& ideal, const std::vector<std::uint32_t>& weights);

struct PrimeLimits {
  std::size_t max_vars = 10;
  std::size_t max_branches = 400;
};

/// Minimal primes of tiny ideals by splitting on factorable GB elements.
/// Components whose GB offers no recognised factorization are taken to be
/// prime. Throws BudgetExceeded when the limits are exceeded.
std::vector<Ideal> minimal_primes(const Ideal& ideal, const PrimeLimits& limits = {});

}  // namespace conelab
