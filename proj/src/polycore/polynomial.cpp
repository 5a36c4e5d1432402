#include "conelab/polynomial.hpp"

#include <algorithm>
#include <unordered_set>

#include "conelab/errors.hpp"

namespace conelab {

RingPtr PolynomialRing::make(Field field, std::vector<std::string> names, MonomialOrder order) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw DomainError("duplicate variable name '" + n + "'");
  order.validate(names.size());
  auto ring = std::shared_ptr<PolynomialRing>(new PolynomialRing());
  ring->field_ = field;
  ring->names_ = std::move(names);
  ring->order_ = std::move(order);
  ring->order_key_ = ring->order_.to_string();
  return ring;
}

std::optional<std::size_t> PolynomialRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr PolynomialRing::with_order(MonomialOrder order) const { return make(field_, names_, std::move(order)); }

std::string PolynomialRing::to_string() const {
  std::string s = field_.name() + "[";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) s += ",";
    s += names_[i];
  }
  return s + "]";
}

// ---------------------------------------------------------------------------

namespace {

void canonicalize(const PolynomialRing& ring, std::vector<Term>& terms) {
  const auto& ord = ring.order();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
  terms = std::move(out);
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.mono.size() != ring_->nvars()) throw DomainError("monomial length does not match the ring");
  canonicalize(*ring_, terms_);
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), c});
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  const Field f = ring->field();
  return constant(std::move(ring), Scalar(f, c));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw DomainError("variable index out of range");
  Polynomial p(ring);
  p.terms_.push_back({Monomial::variable(ring->nvars(), index), Scalar::one(ring->field())});
  return p;
}

Polynomial Polynomial::term(RingPtr ring, const Scalar& c, Monomial m) {
  Polynomial p(ring);
  if (m.size() != ring->nvars()) throw DomainError("monomial length does not match the ring");
  if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
  return p;
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  // The constant monomial is the smallest in every order.
  return Scalar::zero(ring_->field());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint64_t Polynomial::lowest_degree() const {
  if (terms_.empty()) return 0;
  std::uint64_t d = terms_.front().mono.degree();
  for (const auto& t : terms_) d = std::min(d, t.mono.degree());
  return d;
}

bool Polynomial::uses_variable(std::size_t index) const {
  return std::ranges::any_of(terms_, [&](const Term& t) { return t.mono[index] != 0; });
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_))
    throw RingMismatch("polynomials from different rings: " + ring_->to_string() + " vs " + other.ring_->to_string());
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_ring(rhs);
  const auto& ord = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    const auto c = ord.compare(terms_[i].mono, rhs.terms_[j].mono);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(rhs.terms_[j++]);
    } else {
      Scalar s = terms_[i].coef + rhs.terms_[j].coef;
      if (!s.is_zero()) out.push_back({std::move(terms_[i].mono), std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  for (; j < rhs.terms_.size(); ++j) out.push_back(rhs.terms_[j]);
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (b.size() < a.size()) return b * a;
  Polynomial result(a.ring_);
  for (const auto& t : a.terms_) result += b.times_term(t.coef, t.mono);
  return result;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Polynomial Polynomial::times_term(const Scalar& c, const Monomial& m) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the relative order of terms.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  return scaled(leading_coefficient().inverse());
}

Polynomial Polynomial::minus_multiple(const Scalar& c, const Monomial& m, const Polynomial& g) const {
  const auto& ord = ring_->order();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  const Scalar neg = -c;
  while (i < terms_.size() && j < g.terms_.size()) {
    Monomial gm = g.terms_[j].mono * m;
    const auto cmp = ord.compare(terms_[i].mono, gm);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back({std::move(gm), g.terms_[j++].coef * neg});
    } else {
      Scalar s = terms_[i].coef + g.terms_[j].coef * neg;
      if (!s.is_zero()) r.terms_.push_back({std::move(gm), std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j) r.terms_.push_back({g.terms_[j].mono * m, g.terms_[j].coef * neg});
  return r;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != ring_->nvars()) throw DomainError("point arity does not match the ring");
  Scalar sum = Scalar::zero(ring_->field());
  for (const auto& t : terms_) {
    Scalar v = t.coef;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (Monomial::Exponent e = 0; e < t.mono[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::substitute(const RingPtr& target, std::span<const Polynomial> images) const {
  if (images.size() != ring_->nvars()) throw DomainError("ring map needs one image per variable");
  for (const auto& im : images)
    if (!(*im.ring() == *target)) throw RingMismatch("ring map images must share the target ring");
  if (!(target->field() == ring_->field())) throw RingMismatch("ring map changes the field");
  // Cache powers of the images; exponents in our inputs are small.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, Monomial::Exponent e) -> const Polynomial& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(constant(target, 1));
    while (p.size() <= e) p.push_back(p.back() * images[i]);
    return p[e];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.coef);
    for (std::size_t i = 0; i < images.size() && !prod.is_zero(); ++i)
      if (t.mono[i] != 0) prod = prod * power(i, t.mono[i]);
    result += prod;
  }
  return result;
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (!ring_->compatible(*target)) throw RingMismatch("in_ring needs the same variables and field");
  Polynomial r(target);
  r.terms_ = terms_;
  if (!(ring_->order_key() == target->order_key())) canonicalize(*target, r.terms_);
  return r;
}

Polynomial Polynomial::embed(const RingPtr& target, std::span<const std::size_t> var_map) const {
  if (var_map.size() != ring_->nvars()) throw DomainError("embedding needs one index per variable");
  if (!(target->field() == ring_->field())) throw RingMismatch("embedding changes the field");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (var_map[i] >= target->nvars()) throw DomainError("embedding index out of range");
      m.set(var_map[i], m[var_map[i]] + t.mono[i]);
    }
    out.push_back({std::move(m), t.coef});
  }
  return Polynomial(target, std::move(out));
}

namespace {

std::string monomial_string(const PolynomialRing& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.names()[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    const bool negative = t.coef.is_negative_rational();
    const Scalar mag = negative ? -t.coef : t.coef;
    if (k == 0) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    const std::string mono = monomial_string(*ring_, t.mono);
    if (mono.empty()) {
      s += mag.to_string();
    } else {
      if (!mag.is_one()) s += mag.to_string() + "*";
      s += mono;
    }
  }
  return s;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!a.ring_->compatible(*b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_->order_key() != b.ring_->order_key()) return a.in_ring(b.ring_) == b;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coef == b.terms_[i].coef)) return false;
  return true;
}

// ---------------------------------------------------------------------------

Term leading_term(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw DomainError("leading term of the zero polynomial");
  order.validate(f.ring()->nvars());
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var_index) {
  const auto& ring = f.ring();
  if (var_index >= ring->nvars()) throw DomainError("partial derivative: variable index out of range");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    const auto e = t.mono[var_index];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var_index, e - 1);
    out.push_back({std::move(m), t.coef * Scalar(ring->field(), static_cast<long>(e))});
  }
  return Polynomial(ring, std::move(out));
}

Polynomial homogeneous_component(const Polynomial& f, std::uint64_t degree, std::span<const std::uint32_t> weights) {
  if (weights.size() != f.ring()->nvars()) throw DomainError("one weight per variable required");
  std::vector<Term> out;
  for (const auto& t : f.terms())
    if (t.mono.weighted_degree(weights) == degree) out.push_back(t);
  return Polynomial(f.ring(), std::move(out));
}

bool is_homogeneous(const Polynomial& f, std::span<const std::uint32_t> weights) {
  if (f.is_zero()) return true;
  const auto d = f.terms().front().mono.weighted_degree(weights);
  return std::ranges::all_of(f.terms(), [&](const Term& t) { return t.mono.weighted_degree(weights) == d; });
}

Polynomial translate(const Polynomial& f, std::span<const Scalar> p) {
  const auto& ring = f.ring();
  if (p.size() != ring->nvars()) throw DomainError("point arity does not match the ring");
  std::vector<Polynomial> images;
  images.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    images.push_back(Polynomial::variable(ring, i) + Polynomial::constant(ring, p[i]));
  return f.substitute(ring, images);
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const auto& lt = g.leading_term();
  Polynomial rest = f;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const auto& head = rest.leading_term();
    if (!lt.mono.divides(head.mono)) throw DomainError("polynomial division is not exact");
    Scalar c = head.coef / lt.coef;
    Monomial m = head.mono / lt.mono;
    rest = rest.minus_multiple(c, m, g);
    quotient.push_back({std::move(m), std::move(c)});
  }
  return Polynomial(f.ring(), std::move(quotient));
}

std::vector<std::string> fresh_names(const std::vector<std::string>& taken, const std::string& base,
                                     std::size_t count) {
  std::unordered_set<std::string> used(taken.begin(), taken.end());
  std::vector<std::string> out;
  std::string stem = base;
  for (;;) {
    out.clear();
    bool clash = false;
    for (std::size_t i = 1; i <= count; ++i) {
      std::string n = stem + std::to_string(i);
      if (used.count(n)) {
        clash = true;
        break;
      }
      out.push_back(std::move(n));
    }
    if (!clash) return out;
    stem += "_";
  }
}

}  // namespace conelab
