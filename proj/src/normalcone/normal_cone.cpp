#include <atomic>
#include <numeric>

#include "conelab/errors.hpp"
#include "conelab/normalcone.hpp"

namespace conelab {

namespace {
std::atomic<bool> g_strict{false};

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), 0);
  return map;
}
}  // namespace

void set_strict_mode(bool on) { g_strict.store(on); }
bool strict_mode() { return g_strict.load(); }

Ideal rees_ideal(const EmbeddedChart& chart) {
  const RingPtr cone_ring = ConePresentation::fiber_ring(chart, chart.equation_count());
  const std::size_t n = chart.ambient_dimension();
  if (chart.equation_count() == 0) return Ideal(cone_ring);
  // Eliminate t from (u_i - t f_i) in k[t, x, u].
  std::vector<std::string> names = fresh_names(cone_ring->names(), "t", 1);
  names.insert(names.end(), cone_ring->names().begin(), cone_ring->names().end());
  auto order = MonomialOrder::block(1, MonomialOrder::grevlex(), MonomialOrder::grevlex());
  const RingPtr ring = PolynomialRing::make(cone_ring->field(), names, std::move(order));
  std::vector<std::size_t> base_map(n);
  std::iota(base_map.begin(), base_map.end(), 1);
  const Polynomial t = Polynomial::variable(ring, 0);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < chart.equation_count(); ++i)
    gens.push_back(Polynomial::variable(ring, 1 + n + i) - t * chart.equations()[i].embed(ring, base_map));
  const Ideal lifted(ring, std::move(gens));
  std::vector<std::size_t> back(ring->nvars(), 0);
  for (std::size_t v = 1; v < ring->nvars(); ++v) back[v] = v - 1;
  std::vector<Polynomial> out;
  for (const auto& g : lifted.groebner_basis())
    if (!g.uses_variable(0)) out.push_back(g.embed(cone_ring, back));
  return Ideal(cone_ring, std::move(out));
}

ConePresentation normal_cone(const EmbeddedChart& chart) {
  const Ideal rees = rees_ideal(chart);
  ConePresentation cone(chart, rees.ring(), rees.generators());
  if (strict_mode() && !chart.ideal().is_unit()) {
    const int dim = cone_dimension(cone);
    if (dim != static_cast<int>(chart.ambient_dimension()))
      throw InvariantViolation("normal cone of " + chart.to_string() + " has dimension " + std::to_string(dim) +
                               ", expected " + std::to_string(chart.ambient_dimension()));
  }
  return cone;
}

ModulePresentation conormal_module(const EmbeddedChart& chart) {
  const RingPtr& ring = chart.ambient();
  std::vector<Vector> columns;
  for (const auto& f : chart.equations()) columns.push_back({f});
  std::vector<Vector> rels;
  for (auto& s : syzygy_module(Ideal(ring), 1, columns)) {
    Vector v = reduce_mod(s, chart.ideal());
    if (!is_zero_vector(v)) rels.push_back(std::move(v));
  }
  return ModulePresentation(chart.ideal(), chart.equation_count(), std::move(rels));
}

ConePresentation normal_sheaf(const EmbeddedChart& chart) {
  const ConePresentation cone = abelian_cone(conormal_module(chart));
  return ConePresentation(chart, cone.ring(), cone.relations().generators());
}

TwoTermComplex conormal_complex(const EmbeddedChart& chart) {
  const std::size_t n = chart.ambient_dimension();
  const std::size_t r = chart.equation_count();
  PolyMatrix d(chart.ambient(), n, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < n; ++k) d(k, i) = normal_form(chart.jacobian()(i, k), chart.ideal());
  return TwoTermComplex(conormal_module(chart), ModulePresentation(chart.ideal(), n), std::move(d));
}

std::string LciReport::summary() const {
  if (lci()) return "C = N; N locally free";
  std::string s;
  if (!cone_equals_sheaf) s = "C != N";
  if (!sheaf_locally_free) s += std::string(s.empty() ? "" : "; ") + "N not locally free";
  return s;
}

LciReport is_lci(const EmbeddedChart& chart) {
  const ConePresentation sheaf = normal_sheaf(chart);
  const bool same = same_cone(normal_cone(chart), sheaf);
  const BundleReport bundle = vector_bundle_report(sheaf);
  return {same, bundle.is_bundle, bundle.rank};
}

Ideal tangent_cone_at_point(const EmbeddedChart& chart, const Point& p) {
  if (!chart.contains(p)) throw DomainError("point is not on " + chart.to_string());
  const RingPtr& base = chart.ambient();
  const std::size_t n = base->nvars();
  std::vector<std::string> names = fresh_names(base->names(), "t", 1);
  names.insert(names.end(), base->names().begin(), base->names().end());
  const RingPtr ring = PolynomialRing::make(base->field(), names);
  // f(p + t x) / t^ord, saturated by t, then t = 0.
  std::vector<Polynomial> family;
  for (const auto& f : chart.equations()) {
    const Polynomial g = translate(f, p);
    if (g.is_zero()) continue;
    const auto low = g.lowest_degree();
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m(n + 1);
      m.set(0, static_cast<Monomial::Exponent>(t.mono.degree() - low));
      for (std::size_t i = 0; i < n; ++i) m.set(i + 1, t.mono[i]);
      terms.push_back({std::move(m), t.coef});
    }
    family.emplace_back(ring, std::move(terms));
  }
  const Ideal flat = saturate(Ideal(ring, std::move(family)), Polynomial::variable(ring, 0));
  std::vector<Polynomial> special;
  std::vector<std::size_t> back(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) back[i + 1] = i;
  for (const auto& g : flat.generators()) {
    std::vector<Term> terms;
    for (const auto& t : g.terms())
      if (t.mono[0] == 0) terms.push_back(t);
    special.push_back(Polynomial(ring, std::move(terms)).embed(base, back));
  }
  const Ideal cone(base, std::move(special));
  return Ideal(base, cone.groebner_basis());
}

bool tm_invariance_check(const EmbeddedChart& chart) {
  return e_cone_invariance(normal_cone(chart), BundleAction{chart.jacobian()});
}

bool product_normal_cone_check(const EmbeddedChart& a, const EmbeddedChart& b) {
  const ChartProduct prod = chart_product(a, b);
  const ConePresentation joint = normal_cone(prod.chart);
  const ConePresentation ca = normal_cone(a);
  const ConePresentation cb = normal_cone(b);
  const std::size_t n = prod.chart.ambient_dimension();
  std::vector<std::size_t> map_a(prod.left_vars), map_b(prod.right_vars);
  for (std::size_t k = 0; k < ca.fiber_rank(); ++k) map_a.push_back(n + k);
  for (std::size_t k = 0; k < cb.fiber_rank(); ++k) map_b.push_back(n + ca.fiber_rank() + k);
  std::vector<Polynomial> gens;
  for (const auto& g : ca.relations().generators()) gens.push_back(g.embed(joint.ring(), map_a));
  for (const auto& g : cb.relations().generators()) gens.push_back(g.embed(joint.ring(), map_b));
  return equal(Ideal(joint.ring(), std::move(gens)), joint.relations());
}

namespace {

/// U in M x A^s as the graph of `section` over U in M.
EmbeddedChart graph_chart(const EmbeddedChart& chart, const std::vector<Polynomial>& section) {
  const RingPtr& base = chart.ambient();
  const std::size_t n = base->nvars();
  std::vector<std::string> names = base->names();
  const auto fresh = fresh_names(names, "z", section.size());
  names.insert(names.end(), fresh.begin(), fresh.end());
  const RingPtr ring = PolynomialRing::make(base->field(), names);
  const auto map = identity_map(n);
  std::vector<Polynomial> eqs;
  for (const auto& f : chart.equations()) eqs.push_back(f.embed(ring, map));
  for (std::size_t j = 0; j < section.size(); ++j) {
    if (!section[j].ring()->compatible(*base)) throw RingMismatch("section must be given on the chart's ambient space");
    eqs.push_back(Polynomial::variable(ring, n + j) - section[j].embed(ring, map));
  }
  return EmbeddedChart(Ideal(ring, std::move(eqs)));
}

}  // namespace

bool lonc_sequence_check(const EmbeddedChart& chart, std::size_t extra_dims, const std::vector<Polynomial>& section) {
  if (section.size() != extra_dims) throw DomainError("section length must equal the number of extra dimensions");
  if (extra_dims == 0) return true;
  const std::size_t n = chart.ambient_dimension();
  const std::size_t r = chart.equation_count();
  const std::size_t s = extra_dims;
  const EmbeddedChart big = graph_chart(chart, section);

  const ConePresentation middle = normal_cone(big);  // fibers: r equations, then s graph equations
  const ConePresentation small = normal_cone(chart);
  // The same cone over the bigger chart.
  const RingPtr right_ring = ConePresentation::fiber_ring(big, r);
  std::vector<std::size_t> to_right = identity_map(n);
  for (std::size_t k = 0; k < r; ++k) to_right.push_back(n + s + k);
  std::vector<Polynomial> right_rels;
  for (const auto& g : small.relations().generators()) right_rels.push_back(g.embed(right_ring, to_right));
  const ConePresentation right(big, right_ring, std::move(right_rels));
  const ConePresentation left = trivial_bundle(big, s);

  ConeMap pr, inc;
  for (std::size_t k = 0; k < r; ++k) {
    pr.images.push_back(middle.fiber_variable(k));
    inc.images.push_back(Polynomial(left.ring()));
  }
  for (std::size_t j = 0; j < s; ++j) inc.images.push_back(left.fiber_variable(j));
  return check_exact_sequence(left, middle, right, inc, pr).exact();
}

EmbeddingComparison double_embedding_compare(const EmbeddedChart& first, const EmbeddedChart& second,
                                             const std::vector<Polynomial>& first_on_second,
                                             const std::vector<Polynomial>& second_on_first) {
  const RingPtr& p1 = first.ambient();
  const RingPtr& p2 = second.ambient();
  if (first_on_second.size() != p1->nvars() || second_on_first.size() != p2->nvars())
    throw DomainError("comparison maps need one image per coordinate");
  for (const auto& f : first_on_second)
    if (!f.ring()->compatible(*p2))
      throw RingMismatch("first chart's coordinates must be given on the second ambient space");
  for (const auto& f : second_on_first)
    if (!f.ring()->compatible(*p1))
      throw RingMismatch("second chart's coordinates must be given on the first ambient space");
  std::vector<Polynomial> a_images, b_images;
  for (const auto& f : first_on_second) a_images.push_back(f.in_ring(p2));
  for (const auto& f : second_on_first) b_images.push_back(f.in_ring(p1));
  // Both maps respect the ideals and compose to the identity.
  for (const auto& f : first.equations())
    if (!contains(second.ideal(), f.substitute(p2, a_images)))
      throw DomainError("supplied maps are not mutually inverse");
  for (const auto& f : second.equations())
    if (!contains(first.ideal(), f.substitute(p1, b_images)))
      throw DomainError("supplied maps are not mutually inverse");
  for (std::size_t i = 0; i < p1->nvars(); ++i)
    if (!contains(first.ideal(), a_images[i].substitute(p1, b_images) - Polynomial::variable(p1, i)))
      throw DomainError("supplied maps are not mutually inverse");
  for (std::size_t j = 0; j < p2->nvars(); ++j)
    if (!contains(second.ideal(), b_images[j].substitute(p2, a_images) - Polynomial::variable(p2, j)))
      throw DomainError("supplied maps are not mutually inverse");

  EmbeddingComparison out{};
  const int d1 = cone_dimension(normal_cone(first));
  const int d2 = cone_dimension(normal_cone(second));
  out.excess_first = d1 - static_cast<int>(p1->nvars());
  out.excess_second = d2 - static_cast<int>(p2->nvars());
  out.sequence_first = lonc_sequence_check(first, p2->nvars(), b_images);
  out.sequence_second = lonc_sequence_check(second, p1->nvars(), a_images);

  // Both graph embeddings cut out the same subscheme of A^{n1} x A^{n2}.
  const EmbeddedChart g1 = graph_chart(first, b_images);
  const EmbeddedChart g2 = graph_chart(second, a_images);
  std::vector<std::size_t> swap_map(p2->nvars() + p1->nvars());
  for (std::size_t j = 0; j < p2->nvars(); ++j) swap_map[j] = p1->nvars() + j;
  for (std::size_t i = 0; i < p1->nvars(); ++i) swap_map[p2->nvars() + i] = i;
  std::vector<Polynomial> moved;
  for (const auto& f : g2.equations()) moved.push_back(f.embed(g1.ambient(), swap_map));
  out.same_subscheme = equal(Ideal(g1.ambient(), std::move(moved)), g1.ideal());
  return out;
}

}  // namespace conelab
