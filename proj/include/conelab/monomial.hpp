#pragma once

#include <boost/container/small_vector.hpp>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace conelab {

/// Exponent vector, one entry per ring variable. The total degree is cached.
class Monomial {
 public:
  using Exponent = std::uint32_t;
  using Storage = boost::container::small_vector<Exponent, 10>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::span<const Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::uint64_t degree() const { return degree_; }
  std::span<const Exponent> exponents() const { return {exps_.data(), exps_.size()}; }
  bool is_one() const { return degree_ == 0; }

  /// Sets exponent i, keeping the cached degree consistent.
  void set(std::size_t i, Exponent e);

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Weighted degree with one positive weight per variable.
  std::uint64_t weighted_degree(std::span<const std::uint32_t> weights) const;

  /// Throws DomainError if an exponent would overflow.
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  /// Bit i set iff some variable congruent to i mod 64 occurs.
  std::uint64_t support_mask() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.degree_ == b.degree_ && a.exps_ == b.exps_; }
  std::size_t hash() const;

 private:
  Storage exps_;
  std::uint64_t degree_ = 0;
};

/// Monomial order: lex, grevlex, weighted (grevlex tie-break) or a block
/// order whose first block is eliminated.
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Weighted, Block };

  static MonomialOrder lex();
  static MonomialOrder grevlex();
  static MonomialOrder weighted(std::vector<std::uint32_t> weights);
  /// Variables [0, split) form the first block, compared by `outer`;
  /// ties are broken on [split, n) by `inner`.
  static MonomialOrder block(std::size_t split, MonomialOrder outer, MonomialOrder inner);

  Kind kind() const { return kind_; }
  const std::vector<std::uint32_t>& weights() const { return weights_; }
  std::size_t split() const { return split_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return compare(a.exponents(), b.exponents());
  }
  std::strong_ordering compare(std::span<const Monomial::Exponent> a, std::span<const Monomial::Exponent> b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Throws DomainError when the order cannot act on `nvars` variables.
  void validate(std::size_t nvars) const;

  /// Canonical textual form, used as a cache key and in output.
  std::string to_string() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) { return a.to_string() == b.to_string(); }

 private:
  Kind kind_ = Kind::Grevlex;
  std::vector<std::uint32_t> weights_;
  std::size_t split_ = 0;
  std::shared_ptr<const MonomialOrder> outer_;
  std::shared_ptr<const MonomialOrder> inner_;
};

}  // namespace conelab
