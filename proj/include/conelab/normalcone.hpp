#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conelab/complex.hpp"
#include "conelab/cones.hpp"

namespace conelab {

/// When on, every normal cone is checked to have the ambient dimension and
/// an InvariantViolation is thrown otherwise.
void set_strict_mode(bool on);
bool strict_mode();

/// Relations among the generators of the Rees algebra, in the cone ring
/// P[u1..ur] of the chart (u_i standing for t*f_i).
Ideal rees_ideal(const EmbeddedChart& chart);

ConePresentation normal_cone(const EmbeddedChart& chart);

/// Presentation of I/I^2: one ambient generator per equation, relations the
/// syzygies of the equations reduced modulo I.
ModulePresentation conormal_module(const EmbeddedChart& chart);
ConePresentation normal_sheaf(const EmbeddedChart& chart);

/// [I/I^2 -> Omega] with the Jacobian differential (n x r).
TwoTermComplex conormal_complex(const EmbeddedChart& chart);

struct LciReport {
  bool cone_equals_sheaf;
  bool sheaf_locally_free;
  std::optional<std::size_t> rank;
  bool lci() const { return cone_equals_sheaf && sheaf_locally_free; }
  std::string summary() const;
};
LciReport is_lci(const EmbeddedChart& chart);

/// Ideal of initial forms at p, in coordinates centered at p.
Ideal tangent_cone_at_point(const EmbeddedChart& chart, const Point& p);

/// The cone sequence for U in M and in M x A^s via the graph of `section`.
bool lonc_sequence_check(const EmbeddedChart& chart, std::size_t extra_dims, const std::vector<Polynomial>& section);

bool product_normal_cone_check(const EmbeddedChart& a, const EmbeddedChart& b);

bool tm_invariance_check(const EmbeddedChart& chart);

struct EmbeddingComparison {
  int excess_first;   // dim C_1 - n_1
  int excess_second;  // dim C_2 - n_2
  bool sequence_first;
  bool sequence_second;
  bool same_subscheme;
  bool pass() const {
    return excess_first == 0 && excess_second == 0 && sequence_first && sequence_second && same_subscheme;
  }
};

/// Two embeddings of one scheme related by mutually inverse maps:
/// `first_on_second` gives the first chart's coordinates as polynomials on
/// the second ambient space and `second_on_first` the reverse.
EmbeddingComparison double_embedding_compare(const EmbeddedChart& first, const EmbeddedChart& second,
                                             const std::vector<Polynomial>& first_on_second,
                                             const std::vector<Polynomial>& second_on_first);

}  // namespace conelab
