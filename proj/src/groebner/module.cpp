#include "conelab/module.hpp"

#include <algorithm>
#include <numeric>

#include "conelab/errors.hpp"

namespace conelab {

namespace {

/// Ring (components..., base variables...) used to encode vectors.
RingPtr encoding_ring(const RingPtr& base, std::size_t components, MonomialOrder order) {
  std::vector<std::string> names = fresh_names(base->names(), "_e", components);
  names.insert(names.end(), base->names().begin(), base->names().end());
  return PolynomialRing::make(base->field(), std::move(names), std::move(order));
}

std::vector<std::size_t> base_map(const RingPtr& base, std::size_t components) {
  std::vector<std::size_t> map(base->nvars());
  std::iota(map.begin(), map.end(), components);
  return map;
}

/// sum_k v[k] * e_{offset + k}.
Polynomial encode(const Vector& v, const RingPtr& ring, std::size_t offset, const std::vector<std::size_t>& map) {
  Polynomial out(ring);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    out += Polynomial::variable(ring, offset + k) * v[k].embed(ring, map);
  }
  return out;
}

/// Inverse of encode on components [offset, offset + length).
Vector decode(const Polynomial& f, const RingPtr& base, std::size_t offset, std::size_t length,
              std::size_t components) {
  std::vector<std::vector<Term>> parts(length);
  for (const auto& t : f.terms()) {
    std::size_t comp = components;
    for (std::size_t k = 0; k < components; ++k)
      if (t.mono[k] > 0) comp = k;
    if (comp < offset || comp >= offset + length)
      throw InvariantViolation("decoding a term outside the component range");
    Monomial m(base->nvars());
    for (std::size_t i = 0; i < base->nvars(); ++i) m.set(i, t.mono[components + i]);
    parts[comp - offset].push_back({std::move(m), t.coef});
  }
  Vector v;
  for (auto& p : parts) v.emplace_back(base, std::move(p));
  return v;
}

void check_vectors(const RingPtr& ring, std::size_t rank, const std::vector<Vector>& vs) {
  for (const auto& v : vs) {
    if (v.size() != rank) throw DomainError("vector length does not match the module rank");
    for (const auto& p : v)
      if (!p.ring()->compatible(*ring)) throw RingMismatch("module entry from a different ring");
  }
}

Vector in_ring(const Vector& v, const RingPtr& ring) {
  Vector out;
  for (const auto& p : v) out.push_back(p.in_ring(ring));
  return out;
}

}  // namespace

Vector reduce_mod(const Vector& v, const Ideal& base) {
  Vector out;
  for (const auto& p : v) out.push_back(normal_form(p, base));
  return out;
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
}

ModulePresentation::ModulePresentation(Ideal base, std::size_t rank, std::vector<Vector> relations)
    : base_(std::move(base)), rank_(rank) {
  check_vectors(base_.ring(), rank_, relations);
  for (auto& r : relations) relations_.push_back(in_ring(r, base_.ring()));
}

PolyMatrix ModulePresentation::relation_matrix() const { return PolyMatrix::from_columns(ring(), rank_, relations_); }

std::string ModulePresentation::to_string() const {
  std::string s = "coker[" + std::to_string(rank_) + "; ";
  for (std::size_t j = 0; j < relations_.size(); ++j) {
    if (j) s += ", ";
    s += "(";
    for (std::size_t k = 0; k < rank_; ++k) {
      if (k) s += ", ";
      s += relations_[j][k].to_string();
    }
    s += ")";
  }
  return s + "] over " + ring()->to_string() + "/" + base_.to_string();
}

SubmoduleBasis::SubmoduleBasis(const Ideal& base, std::size_t rank, const std::vector<Vector>& generators)
    : base_ring_(base.ring()), rank_(rank) {
  build(base, generators, MonomialOrder::grevlex());
}

SubmoduleBasis::SubmoduleBasis(const Ideal& base, std::size_t rank, const std::vector<Vector>& generators,
                               std::vector<std::uint32_t> weights, std::vector<std::uint32_t> shifts)
    : base_ring_(base.ring()), rank_(rank), weights_(std::move(weights)), shifts_(std::move(shifts)) {
  if (weights_.size() != base_ring_->nvars() || shifts_.size() != rank_)
    throw DomainError("grading does not match the module");
  std::vector<std::uint32_t> all;
  for (auto s : shifts_) all.push_back(s + 1);
  all.insert(all.end(), weights_.begin(), weights_.end());
  build(base, generators, MonomialOrder::weighted(std::move(all)));
}

void SubmoduleBasis::build(const Ideal& base, const std::vector<Vector>& generators, MonomialOrder order) {
  check_vectors(base_ring_, rank_, generators);
  ring_ = encoding_ring(base_ring_, rank_, std::move(order));
  const auto map = base_map(base_ring_, rank_);
  std::vector<Polynomial> gens;
  for (const auto& v : generators) gens.push_back(encode(in_ring(v, base_ring_), ring_, 0, map));
  for (const auto& g : base.generators())
    for (std::size_t k = 0; k < rank_; ++k) gens.push_back(Polynomial::variable(ring_, k) * g.embed(ring_, map));
  GbOptions options;
  options.component_begin = 0;
  options.component_end = rank_;
  std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
  basis_ = gens.empty() ? std::vector<Polynomial>{} : reduced_groebner_basis(std::move(gens), options);
}

Vector SubmoduleBasis::normal_form(const Vector& v) const {
  check_vectors(base_ring_, rank_, {v});
  const auto map = base_map(base_ring_, rank_);
  const Polynomial r = conelab::normal_form(encode(in_ring(v, base_ring_), ring_, 0, map), basis_);
  return decode(r, base_ring_, 0, rank_, rank_);
}

bool SubmoduleBasis::contains(const Vector& v) const { return is_zero_vector(normal_form(v)); }

bool SubmoduleBasis::is_everything() const {
  for (std::size_t k = 0; k < rank_; ++k) {
    const bool hit = std::any_of(basis_.begin(), basis_.end(), [&](const Polynomial& g) {
      const Monomial& lm = g.leading_monomial();
      return lm[k] == 1 && lm.degree() == 1;
    });
    if (!hit) return false;
  }
  return true;
}

HilbertSeries SubmoduleBasis::quotient_hilbert_series() const {
  if (shifts_.size() != rank_) throw DomainError("Hilbert series needs a graded submodule basis");
  HilbertSeries total(std::vector<std::int64_t>{}, weights_);
  const std::size_t n = base_ring_->nvars();
  for (std::size_t k = 0; k < rank_; ++k) {
    std::vector<Monomial> lms;
    for (const auto& g : basis_) {
      const Monomial& lm = g.leading_monomial();
      if (lm[k] == 0) continue;
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m.set(i, lm[rank_ + i]);
      lms.push_back(std::move(m));
    }
    total = total + HilbertSeries(monomial_hilbert_numerator(std::move(lms), weights_), weights_).shifted(shifts_[k]);
  }
  return total;
}

std::vector<Vector> syzygy_module(const Ideal& base, std::size_t rank, const std::vector<Vector>& vectors) {
  const RingPtr& ring = base.ring();
  check_vectors(ring, rank, vectors);
  const std::size_t s = vectors.size();
  if (s == 0) return {};
  const std::size_t comps = rank + s;
  // Position over term, eliminating the target components.
  auto order = MonomialOrder::block(rank, MonomialOrder::grevlex(), MonomialOrder::grevlex());
  const RingPtr enc = encoding_ring(ring, comps, std::move(order));
  const auto map = base_map(ring, comps);
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < s; ++j)
    gens.push_back(encode(in_ring(vectors[j], ring), enc, 0, map) + Polynomial::variable(enc, rank + j));
  for (const auto& g : base.generators())
    for (std::size_t k = 0; k < rank; ++k) gens.push_back(Polynomial::variable(enc, k) * g.embed(enc, map));
  GbOptions options;
  options.component_begin = 0;
  options.component_end = comps;
  const auto gb = reduced_groebner_basis(std::move(gens), options);
  std::vector<Vector> out;
  for (const auto& g : gb) {
    bool target_free = true;
    for (std::size_t k = 0; k < rank && target_free; ++k) target_free = g.leading_monomial()[k] == 0;
    if (!target_free) continue;
    Vector v = reduce_mod(decode(g, ring, rank, s, comps), base);
    if (!is_zero_vector(v)) out.push_back(std::move(v));
  }
  return out;
}

namespace {

std::vector<Vector> truncate(const std::vector<Vector>& vs, std::size_t length) {
  std::vector<Vector> out;
  for (const auto& v : vs) out.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(length));
  return out;
}

}  // namespace

MapHomology module_map_homology(const ModulePresentation& source, const ModulePresentation& target,
                                const PolyMatrix& map) {
  if (!source.ring()->compatible(*target.ring())) throw RingMismatch("module map across rings");
  if (map.rows() != target.rank() || map.cols() != source.rank())
    throw DomainError("module map shape does not match the presentations");
  const Ideal& base = target.base();
  // Cokernel: target relations plus the image columns.
  std::vector<Vector> coker_rel = target.relations();
  for (auto& c : map.columns()) coker_rel.push_back(std::move(c));
  ModulePresentation cokernel(base, target.rank(), std::move(coker_rel));

  // Preimage of the target relations, then present it modulo the source relations.
  std::vector<Vector> cols = map.columns();
  cols.insert(cols.end(), target.relations().begin(), target.relations().end());
  std::vector<Vector> lifts;
  for (auto& v : truncate(syzygy_module(base, target.rank(), cols), source.rank()))
    if (!is_zero_vector(v)) lifts.push_back(std::move(v));
  if (source.rank() == 0) lifts.clear();
  // Drop lifts already inside the source relations.
  {
    const SubmoduleBasis rel(base, source.rank(), source.relations());
    std::erase_if(lifts, [&](const Vector& v) { return rel.contains(v); });
  }
  std::vector<Vector> both = lifts;
  both.insert(both.end(), source.relations().begin(), source.relations().end());
  std::vector<Vector> kernel_rel;
  if (!lifts.empty()) {
    std::vector<Vector> transposed_syz = syzygy_module(base, source.rank(), both);
    for (auto& v : truncate(transposed_syz, lifts.size()))
      if (!is_zero_vector(v)) kernel_rel.push_back(std::move(v));
  }
  ModulePresentation kernel(base, lifts.size(), std::move(kernel_rel));
  return {std::move(kernel), std::move(lifts), std::move(cokernel)};
}

bool is_zero_module(const ModulePresentation& m) {
  if (m.rank() == 0) return true;
  return SubmoduleBasis(m.base(), m.rank(), m.relations()).is_everything();
}

namespace {

void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) idx.push_back(i);
    out.push_back(std::move(idx));
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

}  // namespace

Ideal fitting_ideal(const ModulePresentation& m, std::size_t j) {
  const RingPtr& ring = m.ring();
  if (j >= m.rank()) return Ideal::unit(ring);
  const std::size_t q = m.rank() - j;
  std::vector<Polynomial> gens = m.base().generators();
  const std::size_t s = m.relations().size();
  if (q <= s) {
    const PolyMatrix a = m.relation_matrix();
    std::vector<std::vector<std::size_t>> rows, cols;
    combinations(m.rank(), q, rows);
    combinations(s, q, cols);
    for (const auto& r : rows)
      for (const auto& c : cols) {
        PolyMatrix minor(ring, q, q);
        for (std::size_t x = 0; x < q; ++x)
          for (std::size_t y = 0; y < q; ++y) minor(x, y) = a(r[x], c[y]);
        Polynomial d = determinant(minor);
        if (!d.is_zero()) gens.push_back(std::move(d));
      }
  }
  return Ideal(ring, std::move(gens));
}

std::optional<std::size_t> locally_free_rank(const ModulePresentation& m) {
  for (std::size_t r = 0; r <= m.rank(); ++r) {
    if (!fitting_ideal(m, r).is_unit()) continue;
    if (r == 0 || contains(m.base(), fitting_ideal(m, r - 1))) return r;
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace conelab
