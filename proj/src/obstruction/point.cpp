#include <unordered_map>

#include "conelab/errors.hpp"
#include "conelab/normalcone.hpp"
#include "conelab/obstruction.hpp"

namespace conelab {

namespace {

constexpr std::size_t kMaxCutoff = 48;

Polynomial truncated(const Polynomial& f, std::size_t precision) {
  std::vector<Term> kept;
  for (const auto& t : f.terms())
    if (t.mono.degree() < precision) kept.push_back(t);
  return Polynomial(f.ring(), std::move(kept));
}

/// Monomials of total degree d in `n` variables.
void monomials_of_degree(std::size_t n, std::size_t d, std::size_t var, Monomial& cur, std::vector<Monomial>& out) {
  if (var + 1 == n) {
    cur.set(var, static_cast<Monomial::Exponent>(d));
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (std::size_t e = 0; e <= d; ++e) {
    cur.set(var, static_cast<Monomial::Exponent>(e));
    monomials_of_degree(n, d - e, var + 1, cur, out);
  }
  cur.set(var, 0);
}

Ideal maximal_power(const RingPtr& ring, std::size_t d) {
  const std::size_t n = ring->nvars();
  if (n == 0) return Ideal(ring, d == 0 ? std::vector{Polynomial::constant(ring, 1)} : std::vector<Polynomial>{});
  std::vector<Monomial> monos;
  Monomial cur(n);
  monomials_of_degree(n, d, 0, cur, monos);
  std::vector<Polynomial> gens;
  for (auto& m : monos) gens.push_back(Polynomial::term(ring, Scalar::one(ring->field()), std::move(m)));
  return Ideal(ring, std::move(gens));
}

Point origin(const RingPtr& ring) { return Point(ring->nvars(), Scalar::zero(ring->field())); }

void require_on_chart(const EmbeddedChart& chart, const Point& p) {
  if (p.size() != chart.ambient_dimension()) throw DomainError("point has the wrong number of coordinates");
  if (!chart.contains(p)) throw DomainError("point is not on " + chart.to_string());
}

std::size_t rank_at(const std::vector<Vector>& columns, const RingPtr& ring, std::size_t rows, const Point& p) {
  if (columns.empty() || rows == 0) return 0;
  return PolyMatrix::from_columns(ring, rows, columns).evaluate(p).rank();
}

}  // namespace

MinimalEmbedding minimal_embedding(const EmbeddedChart& chart, const Point& p, std::size_t precision) {
  require_on_chart(chart, p);
  MinimalEmbedding out{chart.ambient(), {}, false, precision};
  for (const auto& f : chart.equations()) {
    Polynomial g = translate(f, p);
    if (!g.is_zero()) out.equations.push_back(std::move(g));
  }
  for (;;) {
    // First equation with a linear part, lowest variable in it.
    std::size_t which = out.equations.size(), var = 0;
    Scalar coef;
    for (std::size_t k = 0; k < out.equations.size() && which == out.equations.size(); ++k)
      for (const auto& t : out.equations[k].terms())
        if (t.mono.degree() == 1) {
          std::size_t v = 0;
          while (t.mono[v] == 0) ++v;
          if (which == out.equations.size() || v < var) {
            which = k;
            var = v;
            coef = t.coef;
          }
        }
    if (which == out.equations.size()) break;

    const RingPtr& ring = out.ring;
    const Polynomial x = Polynomial::variable(ring, var);
    const Polynomial rest = out.equations[which] - coef * x;
    Polynomial solution = (-coef.inverse()) * rest;
    if (rest.uses_variable(var)) {
      // x = -rest(x)/c as a power series, exact modulo m^precision.
      out.truncated = true;
      std::vector<Polynomial> images;
      for (std::size_t i = 0; i < ring->nvars(); ++i) images.push_back(Polynomial::variable(ring, i));
      Polynomial s(ring);
      for (std::size_t iter = 0; iter < precision; ++iter) {
        images[var] = s;
        Polynomial next = truncated((-coef.inverse()) * rest.substitute(ring, images), precision);
        if (next == s) break;
        s = std::move(next);
      }
      solution = s;
    }
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
      images.push_back(i == var ? solution : Polynomial::variable(ring, i));
    std::vector<std::string> names;
    std::vector<std::size_t> drop_map(ring->nvars(), 0);
    for (std::size_t i = 0; i < ring->nvars(); ++i)
      if (i != var) {
        drop_map[i] = names.size();
        names.push_back(ring->names()[i]);
      }
    const RingPtr smaller = PolynomialRing::make(ring->field(), std::move(names));
    std::vector<Polynomial> next;
    for (std::size_t k = 0; k < out.equations.size(); ++k) {
      if (k == which) continue;
      Polynomial g = out.equations[k].substitute(ring, images);
      if (out.truncated) g = truncated(g, precision);
      if (!g.is_zero()) next.push_back(g.embed(smaller, drop_map));
    }
    out.ring = smaller;
    out.equations = std::move(next);
  }
  return out;
}

ObstructionSpace point_obstruction_space(const EmbeddedChart& chart, const Point& p) {
  require_on_chart(chart, p);
  for (std::size_t cutoff = 3; cutoff <= kMaxCutoff; cutoff *= 2) {
    const MinimalEmbedding me = minimal_embedding(chart, p, cutoff + 1);
    ObstructionSpace out{0, me.ring, me.equations, {}, cutoff};
    if (me.equations.empty()) return out;
    const Ideal ideal(me.ring, me.equations);
    const Ideal m = maximal_power(me.ring, 1);
    const Ideal m_ideal = ideal_product(m, ideal);
    const Ideal tail = maximal_power(me.ring, cutoff);
    if (!contains(m_ideal, intersect(ideal, tail))) continue;

    out.dimension = vector_space_dimension(ideal_sum(m_ideal, tail)) - vector_space_dimension(ideal_sum(ideal, tail));
    std::vector<Polynomial> chosen;
    for (const auto& f : me.equations)
      if (!contains(ideal_sum(m_ideal, Ideal(me.ring, chosen)), f)) chosen.push_back(f);
    if (chosen.size() != out.dimension)
      throw InvariantViolation("minimal generator count " + std::to_string(chosen.size()) +
                               " disagrees with dim I/mI = " + std::to_string(out.dimension));
    out.minimal_generators = std::move(chosen);
    return out;
  }
  throw BudgetExceeded("obstruction space did not stabilize below m^" + std::to_string(kMaxCutoff));
}

Ideal point_obstruction_cone(const EmbeddedChart& chart, const Point& p) {
  const ObstructionSpace space = point_obstruction_space(chart, p);
  const RingPtr target = PolynomialRing::make(space.ring->field(), fresh_names({}, "y", space.dimension));
  if (space.dimension == 0) return Ideal(target);
  const Ideal image = ring_map_kernel(target, space.minimal_generators, Ideal(space.ring));
  return tangent_cone_at_point(EmbeddedChart(image), origin(target));
}

TangentSpaces higher_tangent_spaces(const EmbeddedChart& chart, const Point& p) {
  require_on_chart(chart, p);
  const std::size_t n = chart.ambient_dimension();
  const std::size_t r = chart.equation_count();
  if (r == 0) return {n, 0};
  const ModulePresentation conormal = conormal_module(chart);
  const std::size_t fiber = r - rank_at(conormal.relations(), chart.ambient(), r, p);
  const std::size_t d = chart.jacobian().evaluate(p).rank();
  return {n - d, fiber - d};
}

ArtinAlgebra::ArtinAlgebra(Ideal ideal) : ideal_(std::move(ideal)) {
  if (ideal_.is_unit()) throw DomainError("Artin algebra presented by the unit ideal");
  const Point zero = origin(ring());
  for (const auto& g : ideal_.generators())
    if (!g.evaluate(zero).is_zero())
      throw DomainError("Artin algebra ideal is not inside the maximal ideal at the origin");
  if (krull_dimension(ideal_) != 0) throw DomainError("Artin algebra presentation is not finite-dimensional");
  basis_ = standard_monomials(ideal_);
}

std::vector<Scalar> ArtinAlgebra::coordinates(const Polynomial& f) const {
  struct Hash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
  };
  std::unordered_map<Monomial, std::size_t, Hash> index;
  for (std::size_t i = 0; i < basis_.size(); ++i) index.emplace(basis_[i], i);
  std::vector<Scalar> out(basis_.size(), Scalar::zero(ring()->field()));
  const Polynomial r = reduce(f);
  for (const auto& t : r.terms()) out[index.at(t.mono)] = t.coef;
  return out;
}

std::string ArtinAlgebra::to_string() const {
  return ring()->to_string() + "/" + Ideal(ring(), ideal_.groebner_basis()).to_string();
}

SmallExtension::SmallExtension(ArtinAlgebra source, ArtinAlgebra target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!source_.ring()->compatible(*target_.ring())) throw RingMismatch("small extension across rings");
  if (!contains(target_.ideal(), source_.ideal()))
    throw DomainError("no surjection: source ideal is not inside the target ideal");
  const Field field = source_.ring()->field();
  ScalarMatrix image(field, target_.dimension(), source_.dimension());
  for (std::size_t j = 0; j < source_.dimension(); ++j) {
    const auto coords = target_.coordinates(Polynomial::term(source_.ring(), Scalar::one(field), source_.basis()[j]));
    for (std::size_t i = 0; i < coords.size(); ++i) image(i, j) = coords[i];
  }
  for (const auto& v : image.nullspace()) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) terms.push_back({source_.basis()[j], v[j]});
    kernel_.emplace_back(source_.ring(), std::move(terms));
  }
  for (const auto& k : kernel_)
    for (std::size_t i = 0; i < source_.ring()->nvars(); ++i)
      if (!source_.multiply(Polynomial::variable(source_.ring(), i), k).is_zero())
        throw DomainError("extension kernel is not killed by the maximal ideal");
}

namespace {

struct Attempt {
  ArtinAlgebra extended;
  ArtinAlgebra base;
  ScalarMatrix ob;
  bool injective;
  bool spans;
};

Attempt try_cutoff(const ObstructionSpace& space, std::size_t n) {
  const Ideal ideal(space.ring, space.equations);
  const Ideal tail = maximal_power(space.ring, n);
  ArtinAlgebra base(ideal_sum(ideal, tail));
  ArtinAlgebra extended(ideal_sum(ideal_product(maximal_power(space.ring, 1), ideal), tail));
  const std::size_t r = space.minimal_generators.size();
  ScalarMatrix ob(space.ring->field(), extended.dimension(), r);
  for (std::size_t j = 0; j < r; ++j) {
    const auto coords = extended.coordinates(space.minimal_generators[j]);
    for (std::size_t i = 0; i < coords.size(); ++i) ob(i, j) = coords[i];
  }
  const std::size_t rank = r == 0 ? 0 : ob.rank();
  const std::size_t kernel = extended.dimension() - base.dimension();
  return {std::move(extended), std::move(base), std::move(ob), rank == r, rank == kernel};
}

}  // namespace

SmallExtensionObstruction small_extension_obstruction(const EmbeddedChart& chart, const Point& p, std::size_t n) {
  if (n == 0) throw DomainError("small extension needs n >= 1");
  const ObstructionSpace space = point_obstruction_space(chart, p);
  Attempt a = try_cutoff(space, n);
  if (!a.injective || !a.spans) {
    std::size_t smallest = 0;
    for (std::size_t k = n + 1; k <= kMaxCutoff && smallest == 0; ++k) {
      const Attempt b = try_cutoff(space, k);
      if (b.injective && b.spans) smallest = k;
    }
    throw DomainError("n = " + std::to_string(n) + " is too small for the obstruction map to be an isomorphism" +
                      (smallest ? "; smallest valid n is " + std::to_string(smallest) : std::string()));
  }
  SmallExtension ext(std::move(a.extended), std::move(a.base));
  return {std::move(ext), std::move(a.ob), a.injective, a.spans};
}

}  // namespace conelab
