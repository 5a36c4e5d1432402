#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conelab/cones.hpp"
#include "conelab/hilbert.hpp"
#include "conelab/obstruction.hpp"

namespace conelab {

/// [R^s -> R^m] over the chart with a map to the conormal complex that is an
/// obstruction theory. The last `padding` basis vectors of both terms form
/// an identity summand added by padded().
class GlobalResolution {
 public:
  /// differential: m x s; phi0: n x m; phi_minus1: r x s. Throws DomainError
  /// unless the map is an obstruction theory.
  GlobalResolution(EmbeddedChart chart, PolyMatrix differential, PolyMatrix phi0, PolyMatrix phi_minus1,
                   std::size_t padding = 0);

  /// F^-1 free on the equations, F^0 = Omega, identity map.
  static GlobalResolution tautological(const EmbeddedChart& chart);
  /// Adds `count` copies of [R -> R] (identity) to both terms.
  GlobalResolution padded(std::size_t count = 1) const;
  /// F^-1 basis permuted: new basis vector j is old vector order[j].
  GlobalResolution reordered(const std::vector<std::size_t>& order) const;

  const EmbeddedChart& chart() const { return chart_; }
  std::size_t rank_minus_one() const { return differential_.cols(); }
  std::size_t rank_zero() const { return differential_.rows(); }
  std::size_t padding() const { return padding_; }
  const PolyMatrix& differential() const { return differential_; }
  const PolyMatrix& phi0() const { return phi0_; }
  const PolyMatrix& phi_minus1() const { return phi_minus1_; }
  /// Core summand has F^0 = Omega via the identity.
  bool adapted() const { return adapted_; }
  TwoTermComplex complex() const;

 private:
  EmbeddedChart chart_;
  PolyMatrix differential_;
  PolyMatrix phi0_;
  PolyMatrix phi_minus1_;
  std::size_t padding_;
  bool adapted_ = false;
};

int virtual_dimension(const GlobalResolution& res);

/// The cone C(F) inside F_1 = Spec Sym F^-1; its dimension is checked
/// against rk F^0.
ConePresentation cone_in_bundle(const GlobalResolution& res);

/// Length of a zero-dimensional lci chart.
mpq_class virtual_degree_lci(const EmbeddedChart& chart);

/// Graded QQ-algebra with a degree functional on its top piece.
class ChowRingPresentation {
 public:
  /// `functional` gives values on monomials spanning the top piece; the
  /// values are transported to the standard monomial basis.
  ChowRingPresentation(Ideal relations, std::vector<std::uint32_t> degrees, std::size_t top_degree,
                       const std::vector<std::pair<Polynomial, mpq_class>>& functional);

  const Ideal& relations() const { return relations_; }
  const RingPtr& ring() const { return relations_.ring(); }
  const std::vector<std::uint32_t>& degrees() const { return degrees_; }
  std::size_t top_degree() const { return top_; }
  mpq_class degree(const Polynomial& top_class) const;

 private:
  Ideal relations_;
  std::vector<std::uint32_t> degrees_;
  std::size_t top_;
  std::vector<std::pair<Monomial, mpq_class>> values_;  // on standard monomials of top degree
};

/// Degree of c_r of the obstruction bundle, given its total Chern class.
mpq_class virtual_degree_euler(const ChowRingPresentation& chow, const Polynomial& total_chern, std::size_t r);

struct TorModule {
  ModulePresentation module;  // over the cone ring modulo the cone relations
  /// Degree filtration with every variable of weight 1 and generators in degree 0.
  HilbertSeries series;
  std::optional<std::int64_t> length;
};
/// Tor_i of the cone and the zero section of F_1, i = 0..s, via Koszul homology.
std::vector<TorModule> virtual_structure_sheaf_tor(const GlobalResolution& res);
/// Alternating sum of Tor lengths when all are finite.
std::optional<std::int64_t> koszul_euler_characteristic(const std::vector<TorModule>& tor);

struct ResolutionComparison {
  int virtual_dimension_first;
  int virtual_dimension_second;
  std::int64_t degree_first;
  std::int64_t degree_second;
  bool agree() const { return virtual_dimension_first == virtual_dimension_second && degree_first == degree_second; }
};
/// Both resolutions must belong to one zero-dimensional chart with virtual
/// dimension 0; DomainError otherwise.
ResolutionComparison compare_global_resolutions(const GlobalResolution& a, const GlobalResolution& b);
bool global_resolution_independence_check(const GlobalResolution& a, const GlobalResolution& b);

}  // namespace conelab
