#include <numeric>

#include "conelab/cones.hpp"
#include "conelab/errors.hpp"

namespace conelab {

namespace {

PolyMatrix jacobian_of(const Ideal& ideal) {
  const auto& eqs = ideal.generators();
  const RingPtr& ring = ideal.ring();
  PolyMatrix j(ring, eqs.size(), ring->nvars());
  for (std::size_t i = 0; i < eqs.size(); ++i)
    for (std::size_t k = 0; k < ring->nvars(); ++k) j(i, k) = partial_derivative(eqs[i], k);
  return j;
}

}  // namespace

EmbeddedChart::EmbeddedChart(Ideal ideal) : ideal_(std::move(ideal)), jacobian_(jacobian_of(ideal_)) {}

bool EmbeddedChart::contains(const Point& p) const {
  if (p.size() != ambient_dimension()) throw DomainError("point arity does not match the chart");
  for (const auto& c : p)
    if (!(c.field() == ambient()->field())) throw RingMismatch("point coordinates over a different field");
  for (const auto& f : equations())
    if (!f.evaluate(p).is_zero()) return false;
  return true;
}

std::string EmbeddedChart::to_string() const { return "V" + ideal_.to_string() + " in " + ambient()->to_string(); }

ChartProduct chart_product(const EmbeddedChart& a, const EmbeddedChart& b) {
  std::vector<std::string> names = a.ambient()->names();
  std::vector<std::size_t> left(a.ambient_dimension()), right;
  std::iota(left.begin(), left.end(), 0);
  for (const auto& name : b.ambient()->names()) {
    std::string chosen = name;
    if (std::find(names.begin(), names.end(), chosen) != names.end())
      chosen = fresh_names(names, name + "_", 1).front();
    right.push_back(names.size());
    names.push_back(chosen);
  }
  if (!(a.ambient()->field() == b.ambient()->field())) throw RingMismatch("product of charts over different fields");
  const RingPtr ring = PolynomialRing::make(a.ambient()->field(), names);
  std::vector<Polynomial> eqs;
  for (const auto& f : a.equations()) eqs.push_back(f.embed(ring, left));
  for (const auto& f : b.equations()) eqs.push_back(f.embed(ring, right));
  return {EmbeddedChart(Ideal(ring, std::move(eqs))), std::move(left), std::move(right)};
}

}  // namespace conelab
