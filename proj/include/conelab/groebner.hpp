#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "conelab/polynomial.hpp"

namespace conelab {

/// Limits on a single Gröbner computation. Exhausting either one raises
/// BudgetExceeded.
struct Budget {
  std::uint64_t max_spairs = 200000;
  std::uint32_t max_degree = 1000;
};

Budget current_budget();
void set_budget(const Budget& budget);

/// Installs a budget for the lifetime of the object.
class ScopedBudget {
 public:
  explicit ScopedBudget(const Budget& budget) : saved_(current_budget()) { set_budget(budget); }
  ~ScopedBudget() { set_budget(saved_); }
  ScopedBudget(const ScopedBudget&) = delete;
  ScopedBudget& operator=(const ScopedBudget&) = delete;

 private:
  Budget saved_;
};

/// Serial is the reference Buchberger loop; Parallel reduces batches of
/// same-degree S-pairs concurrently with OpenMP. Both return the same
/// reduced basis.
enum class GbKernel { Serial, Parallel };

GbKernel current_kernel();
void set_kernel(GbKernel kernel);

/// Worker threads for the parallel kernel (0 keeps the runtime default).
void set_thread_count(int threads);

struct GbOptions {
  Budget budget = current_budget();
  GbKernel kernel = current_kernel();
  /// Module mode: variables in [component_begin, component_end) mark the
  /// free-module basis vectors. Every input term must contain exactly one
  /// of them, with exponent 1.
  std::size_t component_begin = 0;
  std::size_t component_end = 0;

  bool module_mode() const { return component_end > component_begin; }
};

struct GbStats {
  std::uint64_t pairs_reduced = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t basis_size = 0;
};

/// Reduced Gröbner basis with respect to the order of the generators' ring:
/// monic, inter-reduced, sorted by descending leading monomial.
std::vector<Polynomial> reduced_groebner_basis(std::vector<Polynomial> generators, const GbOptions& options = {},
                                               GbStats* stats = nullptr);
std::vector<Polynomial> groebner_serial(std::vector<Polynomial> generators, const GbOptions& options = {},
                                        GbStats* stats = nullptr);
std::vector<Polynomial> groebner_parallel(std::vector<Polynomial> generators, const GbOptions& options = {},
                                          GbStats* stats = nullptr);

/// When on, every basis returned by reduced_groebner_basis is re-verified
/// with buchberger_self_check and the outcome tallied.
struct GbAudit {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
};
void set_gb_audit(bool on);
GbAudit gb_audit();

/// Full reduction of f by `basis` (leading terms in the ring order).
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Buchberger's criterion: every S-polynomial reduces to zero. In module
/// mode only pairs sharing a component are formed.
bool buchberger_self_check(std::span<const Polynomial> basis, std::size_t component_begin = 0,
                           std::size_t component_end = 0);

}  // namespace conelab
