#pragma once

#include <utility>

#include "conelab/linalg.hpp"
#include "conelab/module.hpp"

namespace conelab {

/// [M^-1 -> M^0] over P/I. The differential has one column per ambient
/// generator of M^-1, holding its image in the ambient free module of M^0.
class TwoTermComplex {
 public:
  /// Throws DomainError unless degrees are (-1, 0) and the differential
  /// carries the relations of M^-1 into those of M^0.
  TwoTermComplex(ModulePresentation minus_one, ModulePresentation zero, PolyMatrix differential,
                 std::pair<int, int> degrees = {-1, 0});

  const ModulePresentation& minus_one() const { return minus_one_; }
  const ModulePresentation& zero() const { return zero_; }
  const PolyMatrix& differential() const { return differential_; }
  const Ideal& base() const { return zero_.base(); }
  const RingPtr& ring() const { return zero_.ring(); }

  /// h^0 = coker(d).
  ModulePresentation h0() const;
  /// h^-1 = ker(d), with lifts of its generators to the ambient module of M^-1.
  MapHomology differential_homology() const;

 private:
  ModulePresentation minus_one_;
  ModulePresentation zero_;
  PolyMatrix differential_;
};

/// Does `map` (target.rank x source.rank) send every source relation into
/// the target's relations?
bool respects_relations(const ModulePresentation& source, const ModulePresentation& target, const PolyMatrix& map);

}  // namespace conelab
