#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conelab/hilbert.hpp"
#include "conelab/ideal.hpp"
#include "conelab/linalg.hpp"

namespace conelab {

using Vector = std::vector<Polynomial>;

/// coker(relations : R^s -> R^rank) over R = P/I. Relations are stored as
/// vectors of length `rank`.
class ModulePresentation {
 public:
  ModulePresentation(Ideal base, std::size_t rank, std::vector<Vector> relations = {});

  const Ideal& base() const { return base_; }
  const RingPtr& ring() const { return base_.ring(); }
  std::size_t rank() const { return rank_; }
  const std::vector<Vector>& relations() const { return relations_; }
  /// rank x #relations, one column per relation.
  PolyMatrix relation_matrix() const;

  std::string to_string() const;

 private:
  Ideal base_;
  std::size_t rank_;
  std::vector<Vector> relations_;
};

/// Gröbner basis of U + I*F inside F = P^rank, for a submodule U given by
/// generators. With a grading, basis vector k has degree shifts[k].
class SubmoduleBasis {
 public:
  SubmoduleBasis(const Ideal& base, std::size_t rank, const std::vector<Vector>& generators);
  SubmoduleBasis(const Ideal& base, std::size_t rank, const std::vector<Vector>& generators,
                 std::vector<std::uint32_t> weights, std::vector<std::uint32_t> shifts);

  std::size_t rank() const { return rank_; }
  Vector normal_form(const Vector& v) const;
  bool contains(const Vector& v) const;
  /// U + I*F = F.
  bool is_everything() const;
  /// Hilbert series of F/(U + I*F); needs the graded constructor.
  HilbertSeries quotient_hilbert_series() const;

 private:
  void build(const Ideal& base, const std::vector<Vector>& generators, MonomialOrder order);

  RingPtr base_ring_;
  RingPtr ring_;
  std::size_t rank_;
  std::vector<std::uint32_t> weights_;
  std::vector<std::uint32_t> shifts_;
  std::vector<Polynomial> basis_;
};

/// Generators of {a in R^s : sum a_j v_j = 0 in R^rank}, R = P/I, entries
/// reduced modulo I.
std::vector<Vector> syzygy_module(const Ideal& base, std::size_t rank, const std::vector<Vector>& vectors);

struct MapHomology {
  ModulePresentation kernel;
  /// Lifts of the kernel generators to the source's ambient free module.
  std::vector<Vector> kernel_generators;
  ModulePresentation cokernel;
};

/// Kernel and cokernel of the map source -> target whose columns are the
/// images of the source's ambient generators.
MapHomology module_map_homology(const ModulePresentation& source, const ModulePresentation& target,
                                const PolyMatrix& map);

bool is_zero_module(const ModulePresentation& m);

/// Fitting ideal Fitt_j (including I), from the (rank - j)-minors.
Ideal fitting_ideal(const ModulePresentation& m, std::size_t j);
/// The rank r when the module is locally free on V(I): Fitt_{r-1} inside I
/// and Fitt_r the unit ideal.
std::optional<std::size_t> locally_free_rank(const ModulePresentation& m);

/// Vector reduced entrywise modulo the base ideal.
Vector reduce_mod(const Vector& v, const Ideal& base);
bool is_zero_vector(const Vector& v);

}  // namespace conelab
