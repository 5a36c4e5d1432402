#include <map>
#include <numeric>

#include "conelab/cones.hpp"
#include "conelab/errors.hpp"

namespace conelab {

namespace {

/// ring with `count` fresh variables appended.
RingPtr append_variables(const RingPtr& ring, const std::string& stem, std::size_t count) {
  std::vector<std::string> names = ring->names();
  const auto fresh = fresh_names(names, stem, count);
  names.insert(names.end(), fresh.begin(), fresh.end());
  return PolynomialRing::make(ring->field(), std::move(names));
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), 0);
  return map;
}

std::vector<Polynomial> variables(const RingPtr& ring, std::size_t from, std::size_t count) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(Polynomial::variable(ring, from + i));
  return out;
}

/// Coefficients of f as a polynomial in the last variable of its ring,
/// each read back in `base` (the ring without that variable).
std::vector<Polynomial> split_last(const Polynomial& f, const RingPtr& base) {
  const std::size_t last = f.ring()->nvars() - 1;
  std::map<Monomial::Exponent, std::vector<Term>> buckets;
  for (const auto& t : f.terms()) {
    Monomial m(base->nvars());
    for (std::size_t i = 0; i < last; ++i) m.set(i, t.mono[i]);
    buckets[t.mono[last]].push_back({std::move(m), t.coef});
  }
  std::vector<Polynomial> out;
  for (auto& [e, terms] : buckets) out.emplace_back(base, std::move(terms));
  return out;
}

/// Images of the cone ring's variables under y -> y + shift (base fixed).
std::vector<Polynomial> translation(const ConePresentation& cone, const RingPtr& target,
                                    const std::vector<Polynomial>& shift) {
  const std::size_t n = cone.base_vars();
  const auto map = identity_map(cone.ring()->nvars());
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < cone.ring()->nvars(); ++i) {
    Polynomial v = Polynomial::variable(cone.ring(), i).embed(target, map);
    if (i >= n) v += shift[i - n];
    images.push_back(std::move(v));
  }
  return images;
}

}  // namespace

bool e_cone_invariance(const ConePresentation& cone, const BundleAction& action) {
  if (action.matrix.rows() != cone.fiber_rank()) throw DomainError("bundle action does not match the fiber rank");
  const RingPtr ext = append_variables(cone.ring(), "eps", 1);
  const Polynomial eps = Polynomial::variable(ext, ext->nvars() - 1);
  const auto map = identity_map(cone.base_vars());
  for (std::size_t k = 0; k < action.rank(); ++k) {
    std::vector<Polynomial> shift;
    for (std::size_t i = 0; i < cone.fiber_rank(); ++i) {
      const Polynomial& d = action.matrix(i, k);
      if (!d.ring()->compatible(*cone.base().ambient()))
        throw RingMismatch("bundle action entries must live in the chart ring");
      shift.push_back(eps * d.embed(ext, map));
    }
    const auto images = translation(cone, ext, shift);
    for (const auto& g : cone.relations().generators())
      for (const auto& c : split_last(g.substitute(ext, images), cone.ring()))
        if (!contains(cone.relations(), c)) return false;
  }
  return true;
}

ExactSequenceReport check_exact_sequence(const ConePresentation& e, const ConePresentation& c,
                                         const ConePresentation& d, const ConeMap& i, const ConeMap& pr) {
  if (!is_vector_bundle(e)) throw DomainError("the left term of a cone sequence must be a vector bundle");
  if (i.images.size() != c.fiber_rank() || pr.images.size() != d.fiber_rank())
    throw DomainError("cone maps do not match the fiber ranks");
  const std::size_t n = c.base_vars();
  const std::size_t mc = c.fiber_rank(), me = e.fiber_rank();
  ExactSequenceReport report{};

  // (a) C -> D is surjective: the pullback S_D -> S_C is injective.
  {
    std::vector<Polynomial> images = variables(c.ring(), 0, n);
    for (const auto& p : pr.images) images.push_back(p.in_ring(c.ring()));
    report.surjective = equal(ring_map_kernel(d.ring(), images, c.relations()), d.relations());
  }

  // Ring T = P[y (C fibers), e (E fibers)] carrying E x C.
  const RingPtr t_ring = append_variables(c.ring(), "e", me);
  std::vector<std::size_t> e_map = identity_map(n + me);
  for (std::size_t k = 0; k < me; ++k) e_map[n + k] = n + mc + k;
  const auto c_map = identity_map(n + mc);
  std::vector<Polynomial> shift;  // i(e), one entry per C fiber
  for (const auto& img : i.images) shift.push_back(img.in_ring(e.ring()).embed(t_ring, e_map));
  std::vector<Polynomial> product_rels;
  for (const auto& g : c.relations().generators()) product_rels.push_back(g.embed(t_ring, c_map));
  for (const auto& g : e.relations().generators()) product_rels.push_back(g.embed(t_ring, e_map));
  const Ideal product(t_ring, product_rels);

  // (b) c + i(e) stays in C.
  {
    const auto images = translation(c, t_ring, shift);
    report.invariant = true;
    for (const auto& g : c.relations().generators())
      if (!contains(product, g.substitute(t_ring, images))) {
        report.invariant = false;
        break;
      }
  }

  // (c) E x C -> C x_D C, (e, c) -> (c, c + i(e)), is an isomorphism.
  {
    const ConePresentation square = cone_fibered_product(c, pr, c, pr, d);
    std::vector<Polynomial> images = variables(t_ring, 0, n + mc);
    for (std::size_t j = 0; j < mc; ++j) images.push_back(Polynomial::variable(t_ring, n + j) + shift[j]);
    const bool injective = equal(ring_map_kernel(square.ring(), images, product), square.relations());

    // Surjective: every e_k lies in the subalgebra generated by x, y, y + i(e).
    std::vector<std::string> names = fresh_names(square.ring()->names(), "_e", me);
    const std::size_t offset = names.size();
    names.insert(names.end(), square.ring()->names().begin(), square.ring()->names().end());
    auto order = MonomialOrder::block(me, MonomialOrder::grevlex(), MonomialOrder::grevlex());
    const RingPtr graph_ring = PolynomialRing::make(c.ring()->field(), names, std::move(order));
    // T-variables into the graph ring: base and y keep their square positions, e goes first.
    std::vector<std::size_t> t_to_graph(t_ring->nvars());
    for (std::size_t v = 0; v < n + mc; ++v) t_to_graph[v] = offset + v;
    for (std::size_t k = 0; k < me; ++k) t_to_graph[n + mc + k] = k;
    std::vector<Polynomial> graph;
    for (const auto& g : product_rels) graph.push_back(g.embed(graph_ring, t_to_graph));
    for (std::size_t j = 0; j < mc; ++j)
      graph.push_back(Polynomial::variable(graph_ring, offset + n + mc + j) -
                      images[n + mc + j].embed(graph_ring, t_to_graph));
    const Ideal graph_ideal(graph_ring, std::move(graph));
    bool surjective = true;
    for (std::size_t k = 0; k < me && surjective; ++k) {
      const Polynomial r = normal_form(Polynomial::variable(graph_ring, k), graph_ideal);
      for (std::size_t v = 0; v < me; ++v)
        if (r.uses_variable(v)) surjective = false;
    }
    report.cartesian = injective && surjective;
  }
  return report;
}

}  // namespace conelab
