#include <algorithm>
#include <numeric>

#include "conelab/errors.hpp"
#include "conelab/normalcone.hpp"
#include "conelab/virtual.hpp"

namespace conelab {

namespace {

bool vanishes(const Polynomial& f, const Ideal& ideal) { return f.is_zero() || contains(ideal, f); }

bool is_unit_entry(const Polynomial& f, const Ideal& ideal) {
  return vanishes(f - Polynomial::constant(f.ring(), 1), ideal);
}

std::string joined(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

}  // namespace

GlobalResolution::GlobalResolution(EmbeddedChart chart, PolyMatrix differential, PolyMatrix phi0, PolyMatrix phi_minus1,
                                   std::size_t padding)
    : chart_(std::move(chart)),
      differential_(std::move(differential)),
      phi0_(std::move(phi0)),
      phi_minus1_(std::move(phi_minus1)),
      padding_(padding) {
  const std::size_t n = chart_.ambient_dimension(), r = chart_.equation_count();
  const std::size_t s = rank_minus_one(), m = rank_zero();
  if (phi0_.rows() != n || phi0_.cols() != m || phi_minus1_.rows() != r || phi_minus1_.cols() != s)
    throw DomainError("resolution map has the wrong shape");
  if (padding_ > s || padding_ > m) throw DomainError("padding exceeds the resolution ranks");
  const Ideal& ideal = chart_.ideal();

  // The padded summand must be an identity block mapping to zero.
  const std::size_t cs = s - padding_, cm = m - padding_;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      if (i < cm && j < cs) continue;
      const Polynomial& e = differential_(i, j);
      const bool diagonal = i >= cm && j >= cs && i - cm == j - cs;
      if (diagonal ? !is_unit_entry(e, ideal) : !vanishes(e, ideal))
        throw DomainError("padded summand is not an identity block");
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = cm; j < m; ++j)
      if (!vanishes(phi0_(i, j), ideal)) throw DomainError("padded summand must map to zero");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = cs; j < s; ++j)
      if (!vanishes(phi_minus1_(i, j), ideal)) throw DomainError("padded summand must map to zero");

  const TwoTermComplexMap phi(complex(), conormal_complex(chart_), phi0_, phi_minus1_);
  const auto failures = obstruction_theory_criteria(chart_, phi).failures();
  if (!failures.empty()) throw DomainError("not an obstruction theory: " + joined(failures));

  adapted_ = cm == n;
  for (std::size_t i = 0; i < n && adapted_; ++i)
    for (std::size_t j = 0; j < n && adapted_; ++j)
      adapted_ = i == j ? is_unit_entry(phi0_(i, j), ideal) : vanishes(phi0_(i, j), ideal);
  if (adapted_ && r > 0) {
    // phi^-1 onto I/I^2.
    std::vector<Vector> span;
    for (std::size_t j = 0; j < cs; ++j) span.push_back(phi_minus1_.column(j));
    const auto conormal = conormal_module(chart_);
    span.insert(span.end(), conormal.relations().begin(), conormal.relations().end());
    adapted_ = SubmoduleBasis(ideal, r, span).is_everything();
  }
}

TwoTermComplex GlobalResolution::complex() const {
  return TwoTermComplex(ModulePresentation(chart_.ideal(), rank_minus_one()),
                        ModulePresentation(chart_.ideal(), rank_zero()), differential_);
}

GlobalResolution GlobalResolution::tautological(const EmbeddedChart& chart) {
  const TwoTermComplex conormal = conormal_complex(chart);
  const RingPtr& ring = chart.ambient();
  return GlobalResolution(chart, conormal.differential(), PolyMatrix::identity(ring, chart.ambient_dimension()),
                          PolyMatrix::identity(ring, chart.equation_count()));
}

GlobalResolution GlobalResolution::padded(std::size_t count) const {
  const RingPtr& ring = chart_.ambient();
  const std::size_t s = rank_minus_one(), m = rank_zero();
  PolyMatrix d(ring, m + count, s + count), p0(ring, phi0_.rows(), m + count), p1(ring, phi_minus1_.rows(), s + count);
  // Existing padding stays last so the identity block remains contiguous.
  const std::size_t cs = s - padding_, cm = m - padding_;
  auto col = [&](std::size_t j) { return j < cs ? j : j + count; };
  auto row = [&](std::size_t i) { return i < cm ? i : i + count; };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < s; ++j) d(row(i), col(j)) = differential_(i, j);
  for (std::size_t k = 0; k < count; ++k) d(cm + k, cs + k) = Polynomial::constant(ring, 1);
  for (std::size_t i = 0; i < p0.rows(); ++i)
    for (std::size_t j = 0; j < m; ++j) p0(i, row(j)) = phi0_(i, j);
  for (std::size_t i = 0; i < p1.rows(); ++i)
    for (std::size_t j = 0; j < s; ++j) p1(i, col(j)) = phi_minus1_(i, j);
  return GlobalResolution(chart_, std::move(d), std::move(p0), std::move(p1), padding_ + count);
}

GlobalResolution GlobalResolution::reordered(const std::vector<std::size_t>& order) const {
  const std::size_t s = rank_minus_one();
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> expected(s - padding_);
  std::iota(expected.begin(), expected.end(), 0);
  if (sorted != expected) throw DomainError("reordering must permute the non-padded part of F^-1");
  PolyMatrix d = differential_, p1 = phi_minus1_;
  for (std::size_t j = 0; j < order.size(); ++j) {
    for (std::size_t i = 0; i < d.rows(); ++i) d(i, j) = differential_(i, order[j]);
    for (std::size_t i = 0; i < p1.rows(); ++i) p1(i, j) = phi_minus1_(i, order[j]);
  }
  return GlobalResolution(chart_, std::move(d), phi0_, std::move(p1), padding_);
}

int virtual_dimension(const GlobalResolution& res) {
  return static_cast<int>(res.rank_zero()) - static_cast<int>(res.rank_minus_one());
}

ConePresentation cone_in_bundle(const GlobalResolution& res) {
  if (!res.adapted()) throw DomainError("cone_in_bundle needs a resolution with F^0 = Omega and F^-1 onto I/I^2");
  const EmbeddedChart& chart = res.chart();
  const std::size_t n = chart.ambient_dimension();
  const std::size_t core = res.rank_minus_one() - res.padding();
  const ConePresentation normal = normal_cone(chart);

  // Pull the normal cone back along Sym F^-1 -> Sym I/I^2, y_j -> sum phi_ij u_i.
  const RingPtr core_ring = ConePresentation::fiber_ring(chart, core);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(normal.ring(), i));
  for (std::size_t j = 0; j < core; ++j) {
    Polynomial y(normal.ring());
    for (std::size_t i = 0; i < normal.fiber_rank(); ++i)
      y += normal.lift(res.phi_minus1()(i, j)) * normal.fiber_variable(i);
    images.push_back(std::move(y));
  }
  const Ideal pulled = ring_map_kernel(core_ring, images, normal.relations());

  // Padded coordinates are free.
  const RingPtr ring = ConePresentation::fiber_ring(chart, res.rank_minus_one());
  std::vector<std::size_t> map(n + core);
  std::iota(map.begin(), map.end(), 0);
  std::vector<Polynomial> rels;
  for (const auto& g : pulled.generators()) rels.push_back(g.embed(ring, map));
  ConePresentation cone(chart, ring, std::move(rels));
  if (!chart.ideal().is_unit()) {
    const int dim = cone_dimension(cone);
    if (dim != static_cast<int>(res.rank_zero()))
      throw InvariantViolation("cone in F_1 has dimension " + std::to_string(dim) +
                               ", expected rk F_0 = " + std::to_string(res.rank_zero()));
  }
  return cone;
}

mpq_class virtual_degree_lci(const EmbeddedChart& chart) {
  const LciReport lci = is_lci(chart);
  if (!lci.lci()) throw DomainError("chart is not lci (" + lci.summary() + ")");
  if (krull_dimension(chart.ideal()) != 0) throw DomainError("chart is not zero-dimensional");
  return mpq_class(static_cast<unsigned long>(vector_space_dimension(chart.ideal())));
}

}  // namespace conelab
