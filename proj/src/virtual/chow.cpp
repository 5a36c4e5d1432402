#include <map>

#include "conelab/errors.hpp"
#include "conelab/virtual.hpp"

namespace conelab {

ChowRingPresentation::ChowRingPresentation(Ideal relations, std::vector<std::uint32_t> degrees, std::size_t top_degree,
                                           const std::vector<std::pair<Polynomial, mpq_class>>& functional)
    : relations_(std::move(relations)), degrees_(std::move(degrees)), top_(top_degree) {
  const Field field = ring()->field();
  if (!field.is_rational()) throw DomainError("Chow rings are taken with rational coefficients");
  if (degrees_.size() != ring()->nvars()) throw DomainError("one degree per Chow ring generator is required");
  for (auto d : degrees_)
    if (d == 0) throw DomainError("Chow ring generators need positive degree");
  for (const auto& g : relations_.generators())
    if (!is_homogeneous(g, degrees_)) throw DomainError("Chow relation " + g.to_string() + " is not homogeneous");
  if (ring()->nvars() > 0 && !hilbert_series(relations_, degrees_).total_length())
    throw DomainError("Chow ring is not finite-dimensional");

  std::vector<Monomial> top;
  for (auto& m : standard_monomials(relations_))
    if (m.weighted_degree(degrees_) == top_) top.push_back(std::move(m));
  if (top.empty()) throw DomainError("Chow ring has nothing in degree " + std::to_string(top_));

  // Values on the caller's spanning set, transported to the standard basis.
  ScalarMatrix system(field, functional.size(), top.size());
  std::vector<Scalar> rhs;
  for (std::size_t k = 0; k < functional.size(); ++k) {
    const Polynomial f = normal_form(functional[k].first.in_ring(ring()), relations_);
    for (const auto& t : f.terms()) {
      if (t.mono.weighted_degree(degrees_) != top_)
        throw DomainError("degree functional given on " + functional[k].first.to_string() + ", not of top degree");
      for (std::size_t j = 0; j < top.size(); ++j)
        if (top[j] == t.mono) system(k, j) = t.coef;
    }
    rhs.emplace_back(field, functional[k].second);
  }
  if (system.rank() != top.size()) throw DomainError("degree functional does not span the top-degree piece");
  const auto values = system.solve(rhs);
  if (values.empty()) throw DomainError("degree functional values are inconsistent");
  for (std::size_t j = 0; j < top.size(); ++j) values_.emplace_back(top[j], values[j].rational());
}

mpq_class ChowRingPresentation::degree(const Polynomial& top_class) const {
  const Polynomial f = normal_form(top_class.in_ring(ring()), relations_);
  mpq_class total = 0;
  for (const auto& t : f.terms()) {
    if (t.mono.weighted_degree(degrees_) != top_) throw DomainError("degree applied to a class outside the top degree");
    for (const auto& [m, v] : values_)
      if (m == t.mono) total += t.coef.rational() * v;
  }
  return total;
}

mpq_class virtual_degree_euler(const ChowRingPresentation& chow, const Polynomial& total_chern, std::size_t r) {
  if (r != chow.top_degree())
    throw DomainError("degree mismatch: obstruction rank " + std::to_string(r) +
                      " but the Chow ring tops out in degree " + std::to_string(chow.top_degree()));
  if (!total_chern.ring()->compatible(*chow.ring())) throw RingMismatch("Chern class is not in the Chow ring");
  return chow.degree(homogeneous_component(total_chern.in_ring(chow.ring()), r, chow.degrees()));
}

}  // namespace conelab
