#include "conelab/errors.hpp"
#include "conelab/normalcone.hpp"
#include "conelab/obstruction.hpp"

namespace conelab {

TwoTermComplexMap::TwoTermComplexMap(TwoTermComplex source, TwoTermComplex target, PolyMatrix phi0,
                                     PolyMatrix phi_minus1)
    : source_(std::move(source)),
      target_(std::move(target)),
      phi0_(std::move(phi0)),
      phi_minus1_(std::move(phi_minus1)) {
  if (!source_.ring()->compatible(*target_.ring()) || !equal(source_.base(), target_.base()))
    throw RingMismatch("complex map between complexes over different rings");
  if (phi0_.rows() != target_.zero().rank() || phi0_.cols() != source_.zero().rank() ||
      phi_minus1_.rows() != target_.minus_one().rank() || phi_minus1_.cols() != source_.minus_one().rank())
    throw DomainError("complex map components have the wrong shape");
  if (!respects_relations(source_.zero(), target_.zero(), phi0_))
    throw DomainError("degree-0 component does not respect relations");
  if (!respects_relations(source_.minus_one(), target_.minus_one(), phi_minus1_))
    throw DomainError("degree -1 component does not respect relations");
  // phi0 d_source - d_target phi_-1 must vanish in M^0 of the target.
  if (source_.minus_one().rank() == 0) return;
  const PolyMatrix defect = phi0_ * source_.differential() - target_.differential() * phi_minus1_;
  const SubmoduleBasis zero(target_.base(), target_.zero().rank(), target_.zero().relations());
  for (const auto& c : defect.columns())
    if (!zero.contains(c)) throw DomainError("complex map does not commute with the differentials");
}

TwoTermComplexMap TwoTermComplexMap::identity(const TwoTermComplex& complex) {
  return TwoTermComplexMap(complex, complex, PolyMatrix::identity(complex.ring(), complex.zero().rank()),
                           PolyMatrix::identity(complex.ring(), complex.minus_one().rank()));
}

bool condition_star_check(const TwoTermComplex& complex) {
  // Degrees and finite presentation are enforced at construction; re-check
  // the only data-dependent condition.
  return respects_relations(complex.minus_one(), complex.zero(), complex.differential());
}

std::vector<std::string> HomologyCriteria::failures() const {
  std::vector<std::string> out;
  if (!h0_iso) out.push_back("h0 not iso");
  if (!h_minus1_surjective) out.push_back("h-1 not surjective");
  return out;
}

HomologyCriteria map_h0_h1_criteria(const TwoTermComplexMap& phi) {
  const TwoTermComplex& s = phi.source();
  const TwoTermComplex& t = phi.target();
  HomologyCriteria out{};

  const MapHomology on_h0 = module_map_homology(s.h0(), t.h0(), phi.phi0());
  out.h0_iso = is_zero_module(on_h0.kernel) && is_zero_module(on_h0.cokernel);

  const MapHomology hs = s.differential_homology();
  const MapHomology ht = t.differential_homology();
  std::vector<Vector> images;
  for (const auto& g : hs.kernel_generators) images.push_back(phi.phi_minus1().apply(g));

  // Surjective: ker d_t lies in phi(ker d_s) + relations of M^-1.
  std::vector<Vector> span = images;
  span.insert(span.end(), t.minus_one().relations().begin(), t.minus_one().relations().end());
  const SubmoduleBasis reach(t.base(), t.minus_one().rank(), span);
  out.h_minus1_surjective = true;
  for (const auto& g : ht.kernel_generators)
    if (!reach.contains(g)) {
      out.h_minus1_surjective = false;
      break;
    }

  // Injective: h^-1 of the target sits inside M^-1, so test h^-1(s) -> M^-1(t).
  if (images.empty()) {
    out.h_minus1_injective = true;
  } else {
    const PolyMatrix into = PolyMatrix::from_columns(t.ring(), t.minus_one().rank(), images);
    out.h_minus1_injective = is_zero_module(module_map_homology(hs.kernel, t.minus_one(), into).kernel);
  }
  return out;
}

namespace {

bool same_submodule(const ModulePresentation& a, const ModulePresentation& b) {
  const SubmoduleBasis in_a(a.base(), a.rank(), a.relations());
  const SubmoduleBasis in_b(b.base(), b.rank(), b.relations());
  for (const auto& r : a.relations())
    if (!in_b.contains(r)) return false;
  for (const auto& r : b.relations())
    if (!in_a.contains(r)) return false;
  return true;
}

}  // namespace

HomologyCriteria obstruction_theory_criteria(const EmbeddedChart& chart, const TwoTermComplexMap& phi) {
  const TwoTermComplex expected = conormal_complex(chart);
  const TwoTermComplex& t = phi.target();
  bool matches = t.ring()->compatible(*expected.ring()) && equal(t.base(), expected.base()) &&
                 t.minus_one().rank() == expected.minus_one().rank() && t.zero().rank() == expected.zero().rank() &&
                 same_submodule(t.minus_one(), expected.minus_one()) && same_submodule(t.zero(), expected.zero());
  if (matches) {
    const PolyMatrix diff = t.differential() - expected.differential();
    for (std::size_t r = 0; r < diff.rows() && matches; ++r)
      for (std::size_t c = 0; c < diff.cols() && matches; ++c)
        matches = contains(chart.ideal(), diff(r, c).in_ring(chart.ambient()));
  }
  if (!matches) throw DomainError("map does not land in the conormal complex of " + chart.to_string());
  return map_h0_h1_criteria(phi);
}

bool is_obstruction_theory(const EmbeddedChart& chart, const TwoTermComplexMap& phi) {
  return obstruction_theory_criteria(chart, phi).failures().empty();
}

bool is_perfect(const TwoTermComplex& complex) {
  return locally_free_rank(complex.minus_one()).has_value() && locally_free_rank(complex.zero()).has_value();
}

}  // namespace conelab
