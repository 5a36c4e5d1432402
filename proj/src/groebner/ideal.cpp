#include "conelab/ideal.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>

#include "conelab/errors.hpp"

namespace conelab {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!g.ring()->compatible(*ring_)) throw RingMismatch("ideal generator from a different ring");
    if (!g.is_zero()) generators_.push_back(g.in_ring(ring_));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& order) const {
  const std::string key = order.to_string();
  {
    std::shared_lock lock(cache_->mutex);
    if (auto it = cache_->bases.find(key); it != cache_->bases.end()) return *it->second;
  }
  const RingPtr ordered = ring_->order_key() == key ? ring_ : ring_->with_order(order);
  std::vector<Polynomial> gens;
  for (const auto& g : generators_) gens.push_back(g.in_ring(ordered));
  auto basis = std::make_shared<const std::vector<Polynomial>>(reduced_groebner_basis(std::move(gens)));
  std::unique_lock lock(cache_->mutex);
  auto [it, inserted] = cache_->bases.emplace(key, std::move(basis));
  return *it->second;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ", ";
    s += generators_[i].to_string();
  }
  return s + ")";
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal) {
  if (!f.ring()->compatible(*ideal.ring())) throw RingMismatch("normal form across rings");
  return normal_form(f.in_ring(ideal.ring()), ideal.groebner_basis());
}

bool contains(const Ideal& ideal, const Polynomial& f) { return normal_form(f, ideal).is_zero(); }

bool contains(const Ideal& outer, const Ideal& inner) {
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const Polynomial& g) { return contains(outer, g); });
}

bool equal(const Ideal& a, const Ideal& b) {
  if (!a.ring()->compatible(*b.ring())) throw RingMismatch("ideal comparison across rings");
  const auto& ga = a.groebner_basis();
  const auto& gb = b.groebner_basis(a.ring()->order());
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (!(ga[i] == gb[i])) return false;
  return true;
}

Polynomial transfer(const Polynomial& f, const RingPtr& target) {
  const auto& src = f.ring()->names();
  std::vector<std::size_t> map(src.size(), 0);
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (auto j = target->index_of(src[i]))
      map[i] = *j;
    else if (f.uses_variable(i))
      throw RingMismatch("variable " + src[i] + " is missing from " + target->to_string());
  }
  return f.embed(target, map);
}

Ideal transfer(const Ideal& ideal, const RingPtr& target) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(transfer(g, target));
  return Ideal(target, std::move(gens));
}

namespace {

/// Ring with `front` variables moved to the start under an order that
/// eliminates them; returns the ring and the old -> new index map.
std::pair<RingPtr, std::vector<std::size_t>> elimination_ring(const RingPtr& ring,
                                                              const std::vector<std::size_t>& front) {
  const std::size_t n = ring->nvars();
  std::vector<bool> moved(n, false);
  for (auto i : front) {
    if (i >= n) throw DomainError("variable index out of range");
    moved[i] = true;
  }
  std::vector<std::string> names;
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i)
    if (moved[i]) {
      map[i] = names.size();
      names.push_back(ring->names()[i]);
    }
  const std::size_t split = names.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!moved[i]) {
      map[i] = names.size();
      names.push_back(ring->names()[i]);
    }
  auto order = MonomialOrder::block(split, MonomialOrder::grevlex(), MonomialOrder::grevlex());
  return {PolynomialRing::make(ring->field(), std::move(names), std::move(order)), map};
}

/// Elements of a block-order GB free of the first `split` variables.
std::vector<Polynomial> surviving(const std::vector<Polynomial>& gb, std::size_t split) {
  std::vector<Polynomial> out;
  for (const auto& g : gb) {
    bool clean = true;
    for (std::size_t i = 0; i < split && clean; ++i) clean = !g.uses_variable(i);
    if (clean) out.push_back(g);
  }
  return out;
}

/// Ring with one fresh variable prepended, eliminated first.
RingPtr with_front_variable(const RingPtr& ring) {
  std::vector<std::string> names = fresh_names(ring->names(), "t", 1);
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  auto order = MonomialOrder::block(1, MonomialOrder::grevlex(), MonomialOrder::grevlex());
  return PolynomialRing::make(ring->field(), std::move(names), std::move(order));
}

std::vector<std::size_t> shift_map(std::size_t n, std::size_t by) {
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i + by;
  return map;
}

std::vector<Polynomial> back_from_front(const std::vector<Polynomial>& polys, const RingPtr& ring, std::size_t split) {
  std::vector<std::size_t> map(ring->nvars() + split, 0);
  for (std::size_t i = 0; i < ring->nvars(); ++i) map[split + i] = i;
  std::vector<Polynomial> out;
  for (const auto& p : polys) out.push_back(p.embed(ring, map));
  return out;
}

void check_same_ring(const Ideal& a, const Ideal& b) {
  if (!a.ring()->compatible(*b.ring())) throw RingMismatch("ideal operation across rings");
}

}  // namespace

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop) {
  if (drop.empty()) return ideal;
  auto [ring, map] = elimination_ring(ideal.ring(), drop);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.embed(ring, map));
  const Ideal lifted(ring, std::move(gens));
  std::set<std::size_t> unique(drop.begin(), drop.end());
  const auto kept = surviving(lifted.groebner_basis(), unique.size());
  std::vector<std::size_t> inverse(ring->nvars());
  for (std::size_t i = 0; i < map.size(); ++i) inverse[map[i]] = i;
  std::vector<Polynomial> out;
  for (const auto& g : kept) out.push_back(g.embed(ideal.ring(), inverse));
  return Ideal(ideal.ring(), std::move(out));
}

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw DomainError("cannot saturate by the zero polynomial");
  const RingPtr& base = ideal.ring();
  const RingPtr ext = with_front_variable(base);
  const auto map = shift_map(base->nvars(), 1);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.embed(ext, map));
  const Polynomial t = Polynomial::variable(ext, 0);
  gens.push_back(Polynomial::constant(ext, 1) - t * f.in_ring(base).embed(ext, map));
  const Ideal lifted(ext, std::move(gens));
  return Ideal(base, back_from_front(surviving(lifted.groebner_basis(), 1), base, 1));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g.in_ring(a.ring()));
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g.in_ring(a.ring()));
  return Ideal(a.ring(), std::move(gens));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Ideal(a.ring());
  const RingPtr& base = a.ring();
  const RingPtr ext = with_front_variable(base);
  const auto map = shift_map(base->nvars(), 1);
  const Polynomial t = Polynomial::variable(ext, 0);
  const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(t * g.embed(ext, map));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.in_ring(base).embed(ext, map));
  const Ideal lifted(ext, std::move(gens));
  return Ideal(base, back_from_front(surviving(lifted.groebner_basis(), 1), base, 1));
}

Ideal quotient(const Ideal& ideal, const Polynomial& g) {
  if (g.is_zero()) return Ideal::unit(ideal.ring());
  const Polynomial h = g.in_ring(ideal.ring());
  const Ideal both = intersect(ideal, Ideal(ideal.ring(), {h}));
  std::vector<Polynomial> gens;
  for (const auto& f : both.generators()) gens.push_back(exact_divide(f, h));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal quotient(const Ideal& ideal, const Ideal& by) {
  check_same_ring(ideal, by);
  if (by.is_zero()) return Ideal::unit(ideal.ring());
  Ideal result = quotient(ideal, by.generators().front());
  for (std::size_t i = 1; i < by.generators().size(); ++i)
    result = intersect(result, quotient(ideal, by.generators()[i]));
  return result;
}

Ideal ring_map_kernel(const RingPtr& source, const std::vector<Polynomial>& images, const Ideal& target_ideal) {
  const RingPtr& target = target_ideal.ring();
  if (images.size() != source->nvars()) throw DomainError("ring map needs one image per source variable");
  if (!(source->field() == target->field())) throw RingMismatch("ring map changes the field");
  const std::size_t n = target->nvars();
  const std::size_t m = source->nvars();
  std::vector<std::string> names = target->names();
  const auto fresh = fresh_names(names, "_y", m);
  names.insert(names.end(), fresh.begin(), fresh.end());
  auto order = MonomialOrder::block(n, MonomialOrder::grevlex(), MonomialOrder::grevlex());
  const RingPtr combined = PolynomialRing::make(target->field(), names, std::move(order));
  const auto target_map = shift_map(n, 0);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < m; ++i) {
    if (!images[i].ring()->compatible(*target)) throw RingMismatch("ring map image outside the target ring");
    gens.push_back(Polynomial::variable(combined, n + i) - images[i].embed(combined, target_map));
  }
  for (const auto& g : target_ideal.generators()) gens.push_back(g.embed(combined, target_map));
  const Ideal lifted(combined, std::move(gens));
  return Ideal(source, back_from_front(surviving(lifted.groebner_basis(), n), source, n));
}

std::vector<Monomial> leading_monomials(const Ideal& ideal, const MonomialOrder& order) {
  std::vector<Monomial> lms;
  for (const auto& g : ideal.groebner_basis(order)) lms.push_back(g.leading_monomial());
  return lms;
}

int krull_dimension(const Ideal& ideal) {
  if (ideal.is_unit()) return -1;
  const std::size_t n = ideal.ring()->nvars();
  if (n > 64) throw DomainError("dimension computation supports at most 64 variables");
  std::vector<std::uint64_t> supports;
  for (const auto& m : leading_monomials(ideal, ideal.ring()->order())) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] > 0) s |= std::uint64_t{1} << i;
    supports.push_back(s);
  }
  // Largest variable set containing no leading-monomial support.
  for (std::size_t k = n + 1; k-- > 0;) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::uint64_t set = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) set |= std::uint64_t{1} << i;
      if (std::none_of(supports.begin(), supports.end(), [&](std::uint64_t s) { return (s & ~set) == 0; }))
        return static_cast<int>(k);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return -1;
}

std::vector<Monomial> standard_monomials(const Ideal& ideal) {
  const int dim = krull_dimension(ideal);
  if (dim > 0) throw DomainError("ideal is positive-dimensional; the quotient is infinite");
  if (dim < 0) return {};
  const std::size_t n = ideal.ring()->nvars();
  const auto lms = leading_monomials(ideal, ideal.ring()->order());
  auto standard = [&](const Monomial& m) {
    return std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  constexpr std::size_t kLimit = 1000000;
  std::vector<Monomial> found{Monomial(n)};
  std::set<std::vector<Monomial::Exponent>> seen{{std::vector<Monomial::Exponent>(n, 0)}};
  std::deque<Monomial> queue{Monomial(n)};
  while (!queue.empty()) {
    const Monomial m = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      Monomial next = m * Monomial::variable(n, i);
      std::vector<Monomial::Exponent> key(next.exponents().begin(), next.exponents().end());
      if (seen.contains(key) || !standard(next)) continue;
      seen.insert(std::move(key));
      found.push_back(next);
      queue.push_back(std::move(next));
      if (found.size() > kLimit) throw BudgetExceeded("too many standard monomials");
    }
  }
  const auto& ord = ideal.ring()->order();
  std::sort(found.begin(), found.end(), [&](const Monomial& a, const Monomial& b) { return ord.greater(b, a); });
  return found;
}

std::uint64_t vector_space_dimension(const Ideal& ideal) { return standard_monomials(ideal).size(); }

HilbertSeries hilbert_series(const Ideal& ideal, const std::vector<std::uint32_t>& weights) {
  if (weights.size() != ideal.ring()->nvars()) throw DomainError("one weight per variable is required");
  for (const auto& g : ideal.generators())
    if (!is_homogeneous(g, weights)) throw DomainError("ideal is not homogeneous for the given weights");
  return affine_hilbert_series(ideal, weights);
}

HilbertSeries affine_hilbert_series(const Ideal& ideal, const std::vector<std::uint32_t>& weights) {
  if (weights.size() != ideal.ring()->nvars()) throw DomainError("one weight per variable is required");
  const auto lms = leading_monomials(ideal, MonomialOrder::weighted(weights));
  return HilbertSeries(monomial_hilbert_numerator(lms, weights), weights);
}

}  // namespace conelab
