#include "conelab/complex.hpp"

#include "conelab/errors.hpp"

namespace conelab {

bool respects_relations(const ModulePresentation& source, const ModulePresentation& target, const PolyMatrix& map) {
  if (map.rows() != target.rank() || map.cols() != source.rank())
    throw DomainError("map shape does not match the modules");
  if (source.relations().empty()) return true;
  const SubmoduleBasis image(target.base(), target.rank(), target.relations());
  for (const auto& r : source.relations())
    if (!image.contains(map.apply(r))) return false;
  return true;
}

TwoTermComplex::TwoTermComplex(ModulePresentation minus_one, ModulePresentation zero, PolyMatrix differential,
                               std::pair<int, int> degrees)
    : minus_one_(std::move(minus_one)), zero_(std::move(zero)), differential_(std::move(differential)) {
  if (degrees != std::pair(-1, 0))
    throw DomainError("two-term complexes must sit in degrees [-1, 0], got [" + std::to_string(degrees.first) + ", " +
                      std::to_string(degrees.second) + "]");
  if (!minus_one_.ring()->compatible(*zero_.ring()) || !equal(minus_one_.base(), zero_.base()))
    throw RingMismatch("complex terms over different rings");
  if (!respects_relations(minus_one_, zero_, differential_))
    throw DomainError("differential does not carry relations to relations");
}

ModulePresentation TwoTermComplex::h0() const {
  std::vector<Vector> rels = zero_.relations();
  for (auto& c : differential_.columns()) rels.push_back(std::move(c));
  return ModulePresentation(zero_.base(), zero_.rank(), std::move(rels));
}

MapHomology TwoTermComplex::differential_homology() const {
  return module_map_homology(minus_one_, zero_, differential_);
}

}  // namespace conelab
