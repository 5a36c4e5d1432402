#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conelab/ideal.hpp"
#include "conelab/linalg.hpp"
#include "conelab/module.hpp"

namespace conelab {

using Point = std::vector<Scalar>;

/// U = Spec P/I inside affine space, with I given by an ordered list of
/// equations (the order fixes the coordinates of every cone built on it).
class EmbeddedChart {
 public:
  explicit EmbeddedChart(Ideal ideal);

  const RingPtr& ambient() const { return ideal_.ring(); }
  const Ideal& ideal() const { return ideal_; }
  const std::vector<Polynomial>& equations() const { return ideal_.generators(); }
  std::size_t ambient_dimension() const { return ambient()->nvars(); }
  std::size_t equation_count() const { return equations().size(); }

  /// One row per equation, one column per variable.
  const PolyMatrix& jacobian() const { return jacobian_; }

  bool contains(const Point& p) const;
  std::string to_string() const;

 private:
  Ideal ideal_;
  PolyMatrix jacobian_;
};

/// Chart for A x B with B's variables renamed away from A's, plus the
/// positions of each factor's variables in the product ring.
struct ChartProduct {
  EmbeddedChart chart;
  std::vector<std::size_t> left_vars;
  std::vector<std::size_t> right_vars;
};
ChartProduct chart_product(const EmbeddedChart& a, const EmbeddedChart& b);

/// Cone Spec S over a chart: S = P[y_1..y_m] / J with J homogeneous in y.
/// The ring lists the chart's variables first; J always contains I.
class ConePresentation {
 public:
  /// Fresh fiber names u1..um are chosen automatically.
  static ConePresentation make(const EmbeddedChart& base, std::size_t fiber_rank,
                               const std::vector<Polynomial>& relations);
  /// Relations given in a ring built by fiber_ring(); I is added.
  ConePresentation(EmbeddedChart base, RingPtr ring, std::vector<Polynomial> relations);

  /// P[u1..um] for a chart.
  static RingPtr fiber_ring(const EmbeddedChart& base, std::size_t fiber_rank);

  const EmbeddedChart& base() const { return base_; }
  const RingPtr& ring() const { return ring_; }
  std::size_t base_vars() const { return base_.ambient_dimension(); }
  std::size_t fiber_rank() const { return ring_->nvars() - base_vars(); }
  Polynomial fiber_variable(std::size_t i) const { return Polynomial::variable(ring_, base_vars() + i); }
  /// Weights 0 on base variables and 1 on fiber variables.
  std::vector<std::uint32_t> fiber_grading() const;

  /// Full relations ideal in P[y], including I.
  const Ideal& relations() const { return relations_; }
  /// Image of a base polynomial in the cone ring.
  Polynomial lift(const Polynomial& f) const;

  std::string to_string() const;

 private:
  EmbeddedChart base_;
  RingPtr ring_;
  Ideal relations_;
};

/// Translation y -> y + d e by a rank-r bundle; column k of `matrix`
/// (fiber_rank x r, entries in the chart ring) is the image of e_k.
struct BundleAction {
  PolyMatrix matrix;
  std::size_t rank() const { return matrix.cols(); }
};

/// Graded map between cones over the same chart, as pullback of the
/// target's fiber coordinates: images[i] is a linear form in the source's
/// fiber variables (coefficients in the chart ring).
struct ConeMap {
  std::vector<Polynomial> images;
};

ConePresentation abelian_cone(const ModulePresentation& module);

struct HullResult {
  ConePresentation hull;
  bool is_strict;
};
HullResult abelian_hull(const ConePresentation& cone);

/// The degree-one piece S^1 of the cone algebra as a module over P/I.
ModulePresentation degree_one_module(const ConePresentation& cone);

struct BundleReport {
  bool is_bundle;
  bool linear;
  std::optional<std::size_t> rank;
};
BundleReport vector_bundle_report(const ConePresentation& cone);
bool is_vector_bundle(const ConePresentation& cone);

int cone_dimension(const ConePresentation& cone);

bool same_cone(const ConePresentation& a, const ConePresentation& b);

/// C1 x_{C3} C2 with fiber variables of C1 followed by those of C2.
ConePresentation cone_fibered_product(const ConePresentation& c1, const ConeMap& to_c3_from_1,
                                      const ConePresentation& c2, const ConeMap& to_c3_from_2,
                                      const ConePresentation& c3);
/// Product over the base.
ConePresentation cone_product(const ConePresentation& c1, const ConePresentation& c2);

/// Trivial bundle of the given rank over the chart (no fiber relations).
ConePresentation trivial_bundle(const EmbeddedChart& base, std::size_t rank);

/// Every relation stays in the ideal after y_i -> y_i + eps * d_ik, for
/// each k separately.
bool e_cone_invariance(const ConePresentation& cone, const BundleAction& action);

struct ExactSequenceReport {
  bool surjective;  // the graded map of C -> D is injective
  bool invariant;   // E acts on C through i
  bool cartesian;   // E x C -> C x_D C is an isomorphism
  bool exact() const { return surjective && invariant && cartesian; }
};

/// Exactness of E -> C -> D at chart level. E must be a vector bundle.
ExactSequenceReport check_exact_sequence(const ConePresentation& e, const ConePresentation& c,
                                         const ConePresentation& d, const ConeMap& i, const ConeMap& pr);

}  // namespace conelab
