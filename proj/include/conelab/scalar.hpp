#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace conelab {

/// Coefficient field: the rationals (characteristic 0) or a prime field.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws DomainError unless p is prime.
  static Field prime(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) : p_(p) {}

  std::uint32_t p_ = 0;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

bool is_prime(std::uint32_t n);

/// Exact field element. Rationals are kept in lowest terms with a positive
/// denominator (GMP canonicalizes); residues live in [0, p).
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  Scalar(const Field& field, long value);
  Scalar(const Field& field, const mpq_class& value);

  static Scalar zero(const Field& field) { return Scalar(field, 0L); }
  static Scalar one(const Field& field) { return Scalar(field, 1L); }

  Field field() const;
  bool is_zero() const;
  bool is_one() const;
  bool is_negative_rational() const;

  /// Only valid in characteristic 0.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint32_t residue() const { return std::get<ModP>(value_).value; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  /// Throws DomainError on division by zero.
  Scalar& operator/=(const Scalar& rhs);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "a/b" for non-integral rationals, plain residue in a prime field.
  std::string to_string() const;

 private:
  struct ModP {
    std::uint32_t value;
    std::uint32_t p;
    friend bool operator==(const ModP&, const ModP&) = default;
  };

  explicit Scalar(ModP v) : value_(v) {}
  void check_same_field(const Scalar& other) const;

  std::variant<mpq_class, ModP> value_;
};

}  // namespace conelab
