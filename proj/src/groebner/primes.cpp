#include <algorithm>
#include <optional>

#include "conelab/errors.hpp"
#include "conelab/ideal.hpp"

namespace conelab {

namespace {

constexpr std::uint32_t kMaxRootSearchPrime = 100000;

std::vector<std::size_t> used_variables(const Polynomial& f) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i)
    if (f.uses_variable(i)) vars.push_back(i);
  return vars;
}

/// Coefficients c_0..c_d of a polynomial in the single variable `var`.
std::vector<Scalar> univariate_coefficients(const Polynomial& f, std::size_t var) {
  std::vector<Scalar> c(f.total_degree() + 1, Scalar::zero(f.ring()->field()));
  for (const auto& t : f.terms()) c[t.mono[var]] += t.coef;
  return c;
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n > mpz_class("1000000000000")) return out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

Scalar evaluate_univariate(const std::vector<Scalar>& c, const Scalar& x) {
  Scalar acc = Scalar::zero(x.field());
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

/// Some root in the coefficient field, if one is found.
std::optional<Scalar> field_root(const std::vector<Scalar>& c) {
  const Field field = c.front().field();
  if (field.is_rational()) {
    // Rational root theorem on the integer-scaled polynomial.
    mpz_class scale = 1;
    for (const auto& s : c) scale = lcm(scale, s.rational().get_den());
    std::vector<mpz_class> ints;
    for (const auto& s : c) ints.push_back(mpz_class(s.rational() * scale));
    std::size_t low = 0;
    while (low < ints.size() && ints[low] == 0) ++low;
    if (low > 0) return Scalar::zero(field);
    for (const auto& p : divisors(ints.front()))
      for (const auto& q : divisors(ints.back()))
        for (int sign : {1, -1}) {
          const Scalar x(field, mpq_class(sign * p, q));
          if (evaluate_univariate(c, x).is_zero()) return x;
        }
    return std::nullopt;
  }
  if (field.characteristic() > kMaxRootSearchPrime) return std::nullopt;
  for (std::uint32_t r = 0; r < field.characteristic(); ++r) {
    const Scalar x(field, static_cast<long>(r));
    if (evaluate_univariate(c, x).is_zero()) return x;
  }
  return std::nullopt;
}

/// A proper non-unit factor of f, from the recognised shapes: a variable
/// dividing every term, a rational root of a univariate polynomial, or a
/// linear factor of a binary form.
std::optional<Polynomial> proper_factor(const Polynomial& f) {
  const RingPtr& ring = f.ring();
  if (f.is_constant() || f.total_degree() < 2) return std::nullopt;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    Monomial::Exponent low = ~Monomial::Exponent{0};
    for (const auto& t : f.terms()) low = std::min(low, t.mono[i]);
    if (low > 0) return Polynomial::variable(ring, i);
  }
  const auto vars = used_variables(f);
  if (vars.size() == 1) {
    if (auto r = field_root(univariate_coefficients(f, vars[0])))
      return Polynomial::variable(ring, vars[0]) - Polynomial::constant(ring, *r);
  }
  if (vars.size() == 2) {
    const std::vector<std::uint32_t> ones(ring->nvars(), 1);
    if (!is_homogeneous(f, ones)) return std::nullopt;
    // x_j does not divide f, so f(s, 1) has full degree in s.
    const auto [i, j] = std::pair(vars[0], vars[1]);
    if (auto r = field_root(univariate_coefficients(f, i)))
      return Polynomial::variable(ring, i) - Polynomial::variable(ring, j).scaled(*r);
  }
  return std::nullopt;
}

class Splitter {
 public:
  explicit Splitter(const PrimeLimits& limits) : limits_(limits) {}

  void split(const Ideal& ideal) {
    if (++branches_ > limits_.max_branches) throw BudgetExceeded("minimal_primes branch limit exceeded");
    if (ideal.is_unit()) return;
    for (const auto& g : ideal.groebner_basis()) {
      if (auto a = proper_factor(g)) {
        split(Ideal(ideal.ring(), ideal_sum(ideal, Ideal(ideal.ring(), {*a})).groebner_basis()));
        split(Ideal(ideal.ring(), saturate(ideal, *a).groebner_basis()));
        return;
      }
    }
    components_.push_back(Ideal(ideal.ring(), ideal.groebner_basis()));
  }

  std::vector<Ideal> minimal() const {
    std::vector<Ideal> out;
    for (std::size_t a = 0; a < components_.size(); ++a) {
      bool drop = false;
      for (std::size_t b = 0; b < components_.size() && !drop; ++b) {
        if (a == b || !contains(components_[a], components_[b])) continue;
        // b is contained in a: a is not minimal unless they coincide and a comes first.
        drop = !contains(components_[b], components_[a]) || b < a;
      }
      if (!drop) out.push_back(components_[a]);
    }
    std::sort(out.begin(), out.end(), [](const Ideal& x, const Ideal& y) { return x.to_string() < y.to_string(); });
    return out;
  }

 private:
  PrimeLimits limits_;
  std::size_t branches_ = 0;
  std::vector<Ideal> components_;
};

}  // namespace

std::vector<Ideal> minimal_primes(const Ideal& ideal, const PrimeLimits& limits) {
  if (ideal.ring()->nvars() > limits.max_vars)
    throw BudgetExceeded("minimal_primes refuses rings with more than " + std::to_string(limits.max_vars) +
                         " variables");
  Splitter splitter(limits);
  splitter.split(ideal);
  return splitter.minimal();
}

}  // namespace conelab
