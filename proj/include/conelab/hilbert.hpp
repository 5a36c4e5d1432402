#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conelab/monomial.hpp"

namespace conelab {

/// numerator(t) / prod_i (1 - t^{w_i}) with integer numerator coefficients
/// (index = exponent of t).
class HilbertSeries {
 public:
  HilbertSeries() : numerator_{1} {}
  HilbertSeries(std::vector<std::int64_t> numerator, std::vector<std::uint32_t> denominator);

  const std::vector<std::int64_t>& numerator() const { return numerator_; }
  const std::vector<std::uint32_t>& denominator() const { return denominator_; }

  /// Cancels every denominator factor that divides the numerator.
  HilbertSeries simplified() const;
  /// Dimension of the degree-d piece.
  std::int64_t coefficient(std::uint64_t degree) const;
  /// Sum of all coefficients when the series is a polynomial (finite length).
  std::optional<std::int64_t> total_length() const;
  /// Order of the pole at t = 1 after simplification.
  std::size_t pole_order() const { return simplified().denominator_.size(); }

  HilbertSeries shifted(std::uint64_t by) const;
  friend HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b);
  friend HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b);
  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b);

  /// Simplified form, e.g. "(1 + t)/(1 - t)".
  std::string to_string() const;

 private:
  std::vector<std::int64_t> numerator_;
  std::vector<std::uint32_t> denominator_;
};

/// Numerator of the Hilbert series of k[x]/(gens) with the given weights,
/// over the denominator prod (1 - t^{w_i}).
std::vector<std::int64_t> monomial_hilbert_numerator(std::vector<Monomial> generators,
                                                     std::span<const std::uint32_t> weights);

}  // namespace conelab
