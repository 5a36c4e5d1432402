#include "conelab/scalar.hpp"

#include "conelab/errors.hpp"

namespace conelab {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::name() const { return is_rational() ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

namespace {

std::uint32_t reduce_mod(const mpq_class& q, std::uint32_t p) {
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0) throw DomainError("denominator divisible by the field characteristic");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
  mpz_class r = (num * inv) % p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Scalar::Scalar(const Field& field, long value) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    const long p = field.characteristic();
    long r = value % p;
    if (r < 0) r += p;
    value_ = ModP{static_cast<std::uint32_t>(r), field.characteristic()};
  }
}

Scalar::Scalar(const Field& field, const mpq_class& value) {
  if (field.is_rational()) {
    value_ = value;
    std::get<mpq_class>(value_).canonicalize();
  } else {
    value_ = ModP{reduce_mod(value, field.characteristic()), field.characteristic()};
  }
}

Field Scalar::field() const {
  if (const auto* m = std::get_if<ModP>(&value_)) return Field(m->p);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* m = std::get_if<ModP>(&value_)) return m->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* m = std::get_if<ModP>(&value_)) return m->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

bool Scalar::is_negative_rational() const {
  const auto* q = std::get_if<mpq_class>(&value_);
  return q != nullptr && sgn(*q) < 0;
}

void Scalar::check_same_field(const Scalar& other) const {
  const auto* a = std::get_if<ModP>(&value_);
  const auto* b = std::get_if<ModP>(&other.value_);
  if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->p != b->p))
    throw RingMismatch("scalars from different fields");
}

Scalar Scalar::operator-() const {
  if (const auto* m = std::get_if<ModP>(&value_)) return Scalar(ModP{m->value == 0 ? 0 : m->p - m->value, m->p});
  Scalar r = *this;
  std::get<mpq_class>(r.value_) = -std::get<mpq_class>(value_);
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* m = std::get_if<ModP>(&value_)) {
    std::uint64_t s = std::uint64_t(m->value) + std::get<ModP>(rhs.value_).value;
    m->value = static_cast<std::uint32_t>(s % m->p);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* m = std::get_if<ModP>(&value_)) {
    std::uint64_t s = std::uint64_t(m->value) * std::get<ModP>(rhs.value_).value;
    m->value = static_cast<std::uint32_t>(s % m->p);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (const auto* m = std::get_if<ModP>(&value_)) return Scalar(ModP{pow_mod(m->value, m->p - 2, m->p), m->p});
  Scalar r = *this;
  std::get<mpq_class>(r.value_) = 1 / std::get<mpq_class>(value_);
  return r;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

std::string Scalar::to_string() const {
  if (const auto* m = std::get_if<ModP>(&value_)) return std::to_string(m->value);
  const mpq_class& q = std::get<mpq_class>(value_);
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace conelab
