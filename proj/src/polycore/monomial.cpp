#include "conelab/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "conelab/errors.hpp"

namespace conelab {

Monomial::Monomial(std::initializer_list<Exponent> exps) : exps_(exps.begin(), exps.end()) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial::Monomial(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  Monomial m(nvars);
  m.set(index, 1);
  return m;
}

void Monomial::set(std::size_t i, Exponent e) {
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

std::uint64_t Monomial::weighted_degree(std::span<const std::uint32_t> weights) const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) d += std::uint64_t(weights[i]) * exps_[i];
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const std::uint64_t e = std::uint64_t(exps_[i]) + other.exps_[i];
    if (e > std::numeric_limits<Exponent>::max()) throw DomainError("exponent overflow in monomial product");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] - other.exps_[i];
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = d;
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r = *this;
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = d;
  return r;
}

std::uint64_t Monomial::support_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) mask |= std::uint64_t{1} << (i % 64);
  return mask;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------------------

MonomialOrder MonomialOrder::lex() {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  return o;
}

MonomialOrder MonomialOrder::grevlex() { return MonomialOrder(); }

MonomialOrder MonomialOrder::weighted(std::vector<std::uint32_t> weights) {
  if (weights.empty() || std::ranges::find(weights, 0u) != weights.end())
    throw DomainError("weighted order needs positive weights");
  MonomialOrder o;
  o.kind_ = Kind::Weighted;
  o.weights_ = std::move(weights);
  return o;
}

MonomialOrder MonomialOrder::block(std::size_t split, MonomialOrder outer, MonomialOrder inner) {
  MonomialOrder o;
  o.kind_ = Kind::Block;
  o.split_ = split;
  o.outer_ = std::make_shared<const MonomialOrder>(std::move(outer));
  o.inner_ = std::make_shared<const MonomialOrder>(std::move(inner));
  return o;
}

namespace {

std::strong_ordering grevlex_tail(std::span<const Monomial::Exponent> a, std::span<const Monomial::Exponent> b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::uint64_t sum(std::span<const Monomial::Exponent> a) {
  return std::accumulate(a.begin(), a.end(), std::uint64_t{0});
}

}  // namespace

std::strong_ordering MonomialOrder::compare(std::span<const Monomial::Exponent> a,
                                            std::span<const Monomial::Exponent> b) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case Kind::Grevlex: {
      const auto da = sum(a), db = sum(b);
      if (da != db) return da <=> db;
      return grevlex_tail(a, b);
    }
    case Kind::Weighted: {
      std::uint64_t wa = 0, wb = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        wa += std::uint64_t(weights_[i]) * a[i];
        wb += std::uint64_t(weights_[i]) * b[i];
      }
      if (wa != wb) return wa <=> wb;
      const auto da = sum(a), db = sum(b);
      if (da != db) return da <=> db;
      return grevlex_tail(a, b);
    }
    case Kind::Block: {
      const auto c = outer_->compare(a.first(split_), b.first(split_));
      if (c != 0) return c;
      return inner_->compare(a.subspan(split_), b.subspan(split_));
    }
  }
  return std::strong_ordering::equal;
}

void MonomialOrder::validate(std::size_t nvars) const {
  switch (kind_) {
    case Kind::Lex:
    case Kind::Grevlex:
      return;
    case Kind::Weighted:
      if (weights_.size() != nvars)
        throw DomainError("weighted order has " + std::to_string(weights_.size()) + " weights for " +
                          std::to_string(nvars) + " variables");
      return;
    case Kind::Block:
      if (split_ > nvars) throw DomainError("block split exceeds the variable count");
      outer_->validate(split_);
      inner_->validate(nvars - split_);
      return;
  }
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Weighted: {
      std::string s = "weighted(";
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(weights_[i]);
      }
      return s + ")";
    }
    case Kind::Block:
      return "block(" + std::to_string(split_) + "," + outer_->to_string() + "," + inner_->to_string() + ")";
  }
  return "";
}

}  // namespace conelab
