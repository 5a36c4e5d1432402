#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "conelab/monomial.hpp"
#include "conelab/scalar.hpp"

namespace conelab {

class PolynomialRing;
using RingPtr = std::shared_ptr<const PolynomialRing>;

/// k[x_1..x_n] with a default monomial order. Rings are immutable and shared.
class PolynomialRing {
 public:
  static RingPtr make(Field field, std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex());

  const Field& field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t nvars() const { return names_.size(); }
  const MonomialOrder& order() const { return order_; }
  const std::string& order_key() const { return order_key_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Same field and variables, different default order.
  RingPtr with_order(MonomialOrder order) const;

  /// Same field and variable names (orders may differ).
  bool compatible(const PolynomialRing& other) const { return field_ == other.field_ && names_ == other.names_; }
  friend bool operator==(const PolynomialRing& a, const PolynomialRing& b) {
    return &a == &b || (a.compatible(b) && a.order_key_ == b.order_key_);
  }

  std::string to_string() const;

 private:
  PolynomialRing() = default;

  Field field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::string order_key_;
};

struct Term {
  Monomial mono;
  Scalar coef;
};

/// Canonical sparse polynomial: terms strictly descending in the ring's
/// order, no zero coefficients. Equality is structural.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, const Scalar& c, Monomial m);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Constant coefficient (zero if absent).
  Scalar constant_term() const;

  /// Requires a nonzero polynomial; leading term in the ring's own order.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Scalar& leading_coefficient() const { return leading_term().coef; }

  std::uint64_t total_degree() const;
  /// Lowest total degree among the terms (order at the origin).
  std::uint64_t lowest_degree() const;
  bool uses_variable(std::size_t index) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, const Polynomial& f) { return f.scaled(c); }

  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Scalar& c, const Monomial& m) const;
  Polynomial pow(unsigned e) const;
  /// Divides by the leading coefficient (zero stays zero).
  Polynomial monic() const;

  /// f - c*m*g, the workhorse of reduction.
  Polynomial minus_multiple(const Scalar& c, const Monomial& m, const Polynomial& g) const;

  Scalar evaluate(std::span<const Scalar> point) const;
  /// Ring map: variable i of this ring goes to images[i] (all in one target ring).
  Polynomial substitute(const RingPtr& target, std::span<const Polynomial> images) const;
  /// Same variables, possibly different order: re-sorts the terms.
  Polynomial in_ring(const RingPtr& target) const;
  /// Variable i goes to variable var_map[i] of `target`.
  Polynomial embed(const RingPtr& target, std::span<const std::size_t> var_map) const;

  /// Human-readable, order-descending; parses back to the same polynomial.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Leading term with respect to an arbitrary order on the same variables.
Term leading_term(const Polynomial& f, const MonomialOrder& order);

Polynomial partial_derivative(const Polynomial& f, std::size_t var_index);

/// Sum of the terms whose weighted degree is exactly `degree`.
Polynomial homogeneous_component(const Polynomial& f, std::uint64_t degree, std::span<const std::uint32_t> weights);

/// Is every term of weighted degree `degree`?
bool is_homogeneous(const Polynomial& f, std::span<const std::uint32_t> weights);

/// Translate the point p to the origin: x_i -> x_i + p_i.
Polynomial translate(const Polynomial& f, std::span<const Scalar> p);

/// Exact division f / g; throws DomainError when g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// Fresh variable names that do not clash with `taken`: base1, base2, ...
std::vector<std::string> fresh_names(const std::vector<std::string>& taken, const std::string& base, std::size_t count);

}  // namespace conelab
