#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "conelab/complex.hpp"
#include "conelab/cones.hpp"
#include "conelab/linalg.hpp"

namespace conelab {

/// Chain map source -> target: phi0 (target.zero.rank x source.zero.rank)
/// and phi_minus1 (target.minus_one.rank x source.minus_one.rank).
class TwoTermComplexMap {
 public:
  /// Throws DomainError when the shapes disagree, a component fails to
  /// respect relations, or the square does not commute up to relations.
  TwoTermComplexMap(TwoTermComplex source, TwoTermComplex target, PolyMatrix phi0, PolyMatrix phi_minus1);

  static TwoTermComplexMap identity(const TwoTermComplex& complex);

  const TwoTermComplex& source() const { return source_; }
  const TwoTermComplex& target() const { return target_; }
  const PolyMatrix& phi0() const { return phi0_; }
  const PolyMatrix& phi_minus1() const { return phi_minus1_; }

 private:
  TwoTermComplex source_;
  TwoTermComplex target_;
  PolyMatrix phi0_;
  PolyMatrix phi_minus1_;
};

/// Shape check for user-supplied complexes; always true once constructed.
bool condition_star_check(const TwoTermComplex& complex);

struct HomologyCriteria {
  bool h0_iso;
  bool h_minus1_surjective;
  bool h_minus1_injective;
  bool quasi_iso() const { return h0_iso && h_minus1_surjective && h_minus1_injective; }
  /// Failed clauses for an obstruction theory ("h0 not iso", "h-1 not surjective").
  std::vector<std::string> failures() const;
};
HomologyCriteria map_h0_h1_criteria(const TwoTermComplexMap& phi);

/// phi must land in the conormal complex of `chart` (DomainError otherwise).
HomologyCriteria obstruction_theory_criteria(const EmbeddedChart& chart, const TwoTermComplexMap& phi);
bool is_obstruction_theory(const EmbeddedChart& chart, const TwoTermComplexMap& phi);

/// Both terms locally free on V(I).
bool is_perfect(const TwoTermComplex& complex);

/// The chart moved so that p is the origin, with every coordinate that can
/// be solved for linearly removed.
struct MinimalEmbedding {
  RingPtr ring;
  std::vector<Polynomial> equations;
  /// True when a substitution had to be expanded as a power series; the
  /// equations are then exact modulo m^precision only.
  bool truncated = false;
  std::size_t precision = 0;
};
MinimalEmbedding minimal_embedding(const EmbeddedChart& chart, const Point& p, std::size_t precision = 64);

struct ObstructionSpace {
  std::size_t dimension;
  RingPtr ring;  // of the minimal embedding
  std::vector<Polynomial> equations;
  std::vector<Polynomial> minimal_generators;
  std::size_t cutoff;  // N with m^N ∩ I inside mI
};
ObstructionSpace point_obstruction_space(const EmbeddedChart& chart, const Point& p);

/// Ideal of the obstruction cone in k[y1..yr], r = dim of the obstruction space.
Ideal point_obstruction_cone(const EmbeddedChart& chart, const Point& p);

struct TangentSpaces {
  std::size_t t0;
  std::size_t t1;
};
/// h^0 and h^1 of the dual of the conormal complex at p.
TangentSpaces higher_tangent_spaces(const EmbeddedChart& chart, const Point& p);

/// P/J with J inside the maximal ideal at the origin and of finite colength.
class ArtinAlgebra {
 public:
  explicit ArtinAlgebra(Ideal ideal);

  const Ideal& ideal() const { return ideal_; }
  const RingPtr& ring() const { return ideal_.ring(); }
  /// Standard monomials, ascending.
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  Polynomial reduce(const Polynomial& f) const { return normal_form(f, ideal_); }
  Polynomial multiply(const Polynomial& a, const Polynomial& b) const { return reduce(a * b); }
  /// Coordinates of f in the monomial basis.
  std::vector<Scalar> coordinates(const Polynomial& f) const;
  std::string to_string() const;

 private:
  Ideal ideal_;
  std::vector<Monomial> basis_;
};

/// A' -> A induced by the identity on P, with kernel killed by the maximal ideal.
class SmallExtension {
 public:
  /// Throws DomainError unless J' is inside J and m * (J/J') = 0.
  SmallExtension(ArtinAlgebra source, ArtinAlgebra target);

  const ArtinAlgebra& source() const { return source_; }
  const ArtinAlgebra& target() const { return target_; }
  /// Basis of J/J' as elements of A'.
  const std::vector<Polynomial>& kernel_basis() const { return kernel_; }

 private:
  ArtinAlgebra source_;
  ArtinAlgebra target_;
  std::vector<Polynomial> kernel_;
};

struct SmallExtensionObstruction {
  SmallExtension extension;
  /// Column j holds the A'-coordinates of the j-th minimal generator.
  ScalarMatrix ob_matrix;
  bool injective;
  bool spans_kernel;
};
/// A'_n = P/(mI + m^n) -> A_n = P/(I + m^n) on the minimal embedding at p.
/// Throws DomainError naming the smallest valid n when n is too small.
SmallExtensionObstruction small_extension_obstruction(const EmbeddedChart& chart, const Point& p, std::size_t n);

}  // namespace conelab
