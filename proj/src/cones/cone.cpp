#include <numeric>

#include "conelab/cones.hpp"
#include "conelab/errors.hpp"

namespace conelab {

namespace {

std::vector<std::size_t> prefix_map(std::size_t n) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), 0);
  return map;
}

std::uint64_t fiber_degree(const Monomial& m, std::size_t base_vars) {
  std::uint64_t d = 0;
  for (std::size_t i = base_vars; i < m.size(); ++i) d += m[i];
  return d;
}

/// Cone-ring polynomial of fiber degree 0 read back in the chart ring.
Polynomial to_base(const Polynomial& f, const RingPtr& base) {
  std::vector<std::size_t> map(f.ring()->nvars(), 0);
  for (std::size_t i = 0; i < base->nvars(); ++i) map[i] = i;
  return f.embed(base, map);
}

}  // namespace

RingPtr ConePresentation::fiber_ring(const EmbeddedChart& base, std::size_t fiber_rank) {
  std::vector<std::string> names = base.ambient()->names();
  const auto fresh = fresh_names(names, "u", fiber_rank);
  names.insert(names.end(), fresh.begin(), fresh.end());
  return PolynomialRing::make(base.ambient()->field(), std::move(names));
}

ConePresentation ConePresentation::make(const EmbeddedChart& base, std::size_t fiber_rank,
                                        const std::vector<Polynomial>& relations) {
  return ConePresentation(base, fiber_ring(base, fiber_rank), relations);
}

ConePresentation::ConePresentation(EmbeddedChart base, RingPtr ring, std::vector<Polynomial> relations)
    : base_(std::move(base)), ring_(std::move(ring)), relations_(ring_) {
  const std::size_t n = base_.ambient_dimension();
  const auto& names = base_.ambient()->names();
  if (ring_->nvars() < n || !std::equal(names.begin(), names.end(), ring_->names().begin()) ||
      !(ring_->field() == base_.ambient()->field()))
    throw RingMismatch("cone ring must extend the chart ring");
  const auto grading = fiber_grading();
  std::vector<Polynomial> gens;
  for (const auto& f : base_.equations()) gens.push_back(lift(f));
  for (auto& r : relations) {
    if (!r.ring()->compatible(*ring_)) throw RingMismatch("cone relation from a different ring");
    Polynomial g = r.in_ring(ring_);
    if (g.is_zero()) continue;
    if (!is_homogeneous(g, grading))
      throw DomainError("cone relation " + g.to_string() + " is not homogeneous in the fiber variables");
    if (fiber_degree(g.leading_monomial(), n) == 0 && !contains(base_.ideal(), to_base(g, base_.ambient())))
      throw DomainError("cone relation " + g.to_string() + " has a degree-0 part outside the chart ideal");
    gens.push_back(std::move(g));
  }
  relations_ = Ideal(ring_, std::move(gens));
}

std::vector<std::uint32_t> ConePresentation::fiber_grading() const {
  std::vector<std::uint32_t> w(ring_->nvars(), 1);
  std::fill(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(base_vars()), 0);
  return w;
}

Polynomial ConePresentation::lift(const Polynomial& f) const {
  if (!f.ring()->compatible(*base_.ambient())) throw RingMismatch("lifting a polynomial from another ring");
  return f.embed(ring_, prefix_map(base_vars()));
}

std::string ConePresentation::to_string() const {
  std::string s = "Spec " + ring_->to_string() + "/(";
  bool first = true;
  for (const auto& g : relations_.groebner_basis()) {
    if (!first) s += ", ";
    first = false;
    s += g.to_string();
  }
  return s + ")";
}

ConePresentation abelian_cone(const ModulePresentation& module) {
  const EmbeddedChart chart(module.base());
  const RingPtr ring = ConePresentation::fiber_ring(chart, module.rank());
  const auto map = prefix_map(chart.ambient_dimension());
  std::vector<Polynomial> rels;
  for (const auto& r : module.relations()) {
    Polynomial f(ring);
    for (std::size_t i = 0; i < module.rank(); ++i)
      if (!r[i].is_zero()) f += r[i].embed(ring, map) * Polynomial::variable(ring, chart.ambient_dimension() + i);
    rels.push_back(std::move(f));
  }
  return ConePresentation(chart, ring, std::move(rels));
}

HullResult abelian_hull(const ConePresentation& cone) {
  std::vector<Polynomial> linear;
  for (const auto& g : cone.relations().groebner_basis())
    if (fiber_degree(g.leading_monomial(), cone.base_vars()) <= 1) linear.push_back(g);
  ConePresentation hull(cone.base(), cone.ring(), std::move(linear));
  const bool strict = !equal(hull.relations(), cone.relations());
  return {std::move(hull), strict};
}

ModulePresentation degree_one_module(const ConePresentation& cone) {
  const std::size_t n = cone.base_vars();
  const std::size_t m = cone.fiber_rank();
  const RingPtr& base = cone.base().ambient();
  std::vector<Vector> rels;
  for (const auto& g : cone.relations().groebner_basis()) {
    if (fiber_degree(g.leading_monomial(), n) != 1) continue;
    std::vector<std::vector<Term>> parts(m);
    for (const auto& t : g.terms()) {
      Monomial mono(n);
      std::size_t which = m;
      for (std::size_t i = 0; i < n; ++i) mono.set(i, t.mono[i]);
      for (std::size_t k = 0; k < m; ++k)
        if (t.mono[n + k] > 0) which = k;
      parts[which].push_back({std::move(mono), t.coef});
    }
    Vector v;
    for (auto& p : parts) v.emplace_back(base, std::move(p));
    v = reduce_mod(v, cone.base().ideal());
    if (!is_zero_vector(v)) rels.push_back(std::move(v));
  }
  return ModulePresentation(cone.base().ideal(), m, std::move(rels));
}

BundleReport vector_bundle_report(const ConePresentation& cone) {
  const bool linear = !abelian_hull(cone).is_strict;
  std::optional<std::size_t> rank;
  if (linear) rank = locally_free_rank(degree_one_module(cone));
  return {linear && rank.has_value(), linear, rank};
}

bool is_vector_bundle(const ConePresentation& cone) { return vector_bundle_report(cone).is_bundle; }

int cone_dimension(const ConePresentation& cone) { return krull_dimension(cone.relations()); }

bool same_cone(const ConePresentation& a, const ConePresentation& b) {
  return a.ring()->compatible(*b.ring()) && equal(a.relations(), b.relations());
}

ConePresentation trivial_bundle(const EmbeddedChart& base, std::size_t rank) {
  return ConePresentation::make(base, rank, {});
}

namespace {

void check_same_base(const ConePresentation& a, const ConePresentation& b) {
  if (!a.base().ambient()->compatible(*b.base().ambient()) || !equal(a.base().ideal(), b.base().ideal()))
    throw DomainError("cones over different charts");
}

}  // namespace

ConePresentation cone_fibered_product(const ConePresentation& c1, const ConeMap& to_c3_from_1,
                                      const ConePresentation& c2, const ConeMap& to_c3_from_2,
                                      const ConePresentation& c3) {
  check_same_base(c1, c3);
  check_same_base(c2, c3);
  if (to_c3_from_1.images.size() != c3.fiber_rank() || to_c3_from_2.images.size() != c3.fiber_rank())
    throw DomainError("cone map does not match the target's fiber rank");
  const std::size_t n = c1.base_vars();
  const std::size_t m1 = c1.fiber_rank(), m2 = c2.fiber_rank();
  const RingPtr ring = ConePresentation::fiber_ring(c1.base(), m1 + m2);
  std::vector<std::size_t> map1 = prefix_map(n + m1);
  std::vector<std::size_t> map2 = prefix_map(n + m2);
  for (std::size_t j = 0; j < m2; ++j) map2[n + j] = n + m1 + j;
  std::vector<Polynomial> rels;
  for (const auto& g : c1.relations().generators()) rels.push_back(g.embed(ring, map1));
  for (const auto& g : c2.relations().generators()) rels.push_back(g.embed(ring, map2));
  for (std::size_t k = 0; k < c3.fiber_rank(); ++k)
    rels.push_back(to_c3_from_1.images[k].in_ring(c1.ring()).embed(ring, map1) -
                   to_c3_from_2.images[k].in_ring(c2.ring()).embed(ring, map2));
  return ConePresentation(c1.base(), ring, std::move(rels));
}

ConePresentation cone_product(const ConePresentation& c1, const ConePresentation& c2) {
  const ConePresentation base = trivial_bundle(c1.base(), 0);
  return cone_fibered_product(c1, ConeMap{}, c2, ConeMap{}, base);
}

}  // namespace conelab
