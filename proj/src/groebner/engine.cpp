#include "engine.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>

#include "conelab/errors.hpp"

namespace conelab {

namespace {
std::mutex g_budget_mutex;
Budget g_budget;
std::atomic<GbKernel> g_kernel{GbKernel::Parallel};
}  // namespace

Budget current_budget() {
  std::lock_guard lock(g_budget_mutex);
  return g_budget;
}

void set_budget(const Budget& budget) {
  std::lock_guard lock(g_budget_mutex);
  g_budget = budget;
}

GbKernel current_kernel() { return g_kernel.load(); }
void set_kernel(GbKernel kernel) { g_kernel.store(kernel); }

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Term& a = f.leading_term();
  const Term& b = g.leading_term();
  const Monomial l = a.mono.lcm(b.mono);
  Polynomial left = f.times_term(a.coef.inverse(), l / a.mono);
  return left.minus_multiple(b.coef.inverse(), l / b.mono, g);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  std::vector<const Polynomial*> reducers;
  for (const auto& g : basis)
    if (!g.is_zero()) reducers.push_back(&g);
  std::vector<Term> remainder;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    const Polynomial* hit = nullptr;
    for (const Polynomial* g : reducers)
      if (g->leading_monomial().divides(lt.mono)) {
        hit = g;
        break;
      }
    if (hit) {
      p = p.minus_multiple(lt.coef / hit->leading_coefficient(), lt.mono / hit->leading_monomial(), *hit);
    } else {
      remainder.push_back(lt);
      p -= Polynomial::term(p.ring(), lt.coef, lt.mono);
    }
  }
  return Polynomial(f.ring(), std::move(remainder));
}

bool buchberger_self_check(std::span<const Polynomial> basis, std::size_t component_begin, std::size_t component_end) {
  auto component = [&](const Polynomial& g) {
    for (std::size_t k = component_begin; k < component_end; ++k)
      if (g.leading_monomial()[k] > 0) return k;
    return detail::kNoComponent;
  };
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i].is_zero() || basis[j].is_zero()) continue;
      if (component_end > component_begin && component(basis[i]) != component(basis[j])) continue;
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  return true;
}

namespace {

std::atomic<bool> audit_on{false};
std::atomic<std::uint64_t> audit_checked{0};
std::atomic<std::uint64_t> audit_failed{0};

}  // namespace

void set_gb_audit(bool on) { audit_on = on; }
GbAudit gb_audit() { return {audit_checked.load(), audit_failed.load()}; }

std::vector<Polynomial> reduced_groebner_basis(std::vector<Polynomial> generators, const GbOptions& options,
                                               GbStats* stats) {
  auto basis = options.kernel == GbKernel::Serial ? groebner_serial(std::move(generators), options, stats)
                                                  : groebner_parallel(std::move(generators), options, stats);
  if (audit_on) {
    ++audit_checked;
    if (!buchberger_self_check(basis, options.component_begin, options.component_end)) ++audit_failed;
  }
  return basis;
}

namespace detail {

Engine::Engine(RingPtr ring, const GbOptions& options) : ring_(std::move(ring)), options_(options) {
  if (options_.component_end > ring_->nvars()) throw DomainError("component range exceeds the variable count");
}

std::size_t Engine::component_of(const Monomial& m) const {
  if (!options_.module_mode()) return kNoComponent;
  for (std::size_t k = options_.component_begin; k < options_.component_end; ++k)
    if (m[k] > 0) return k;
  throw DomainError("module element term without a component");
}

bool Engine::disjoint(const Monomial& a, const Monomial& b) const {
  // The product criterion is unsound in module mode.
  return !options_.module_mode() && a.coprime(b);
}

const BasisEntry* Engine::find_reducer(const Monomial& m, std::uint64_t mask) const {
  for (const auto& e : basis_) {
    if (!e.active || (e.mask & ~mask) != 0) continue;
    if (e.lm.divides(m)) return &e;
  }
  return nullptr;
}

Polynomial Engine::reduce(Polynomial p) const {
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    if (const BasisEntry* g = find_reducer(lt.mono, lt.mono.support_mask())) {
      p = p.minus_multiple(lt.coef, lt.mono / g->lm, g->poly);
    } else {
      remainder.push_back(lt);
      p -= Polynomial::term(ring_, lt.coef, lt.mono);
    }
  }
  return Polynomial(ring_, std::move(remainder));
}

Polynomial Engine::spoly(const CriticalPair& pair) const {
  return s_polynomial(basis_[pair.i].poly, basis_[pair.j].poly);
}

void Engine::count_reduction(bool zero) {
  ++reductions_;
  if (zero) ++zero_reductions_;
  if (reductions_ > options_.budget.max_spairs)
    throw BudgetExceeded("S-pair budget of " + std::to_string(options_.budget.max_spairs) + " exceeded");
}

void Engine::seed(std::vector<Polynomial> generators) {
  for (auto& g : generators) {
    if (!g.ring()->compatible(*ring_)) throw RingMismatch("generator from a different ring");
    g = g.in_ring(ring_);
  }
  // Feeding generators in increasing order keeps early reductions cheap.
  std::erase_if(generators, [](const Polynomial& g) { return g.is_zero(); });
  const auto& ord = ring_->order();
  std::stable_sort(generators.begin(), generators.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.greater(b.leading_monomial(), a.leading_monomial());
  });
  for (auto& g : generators) {
    Polynomial h = reduce(std::move(g));
    if (!h.is_zero()) insert(std::move(h));
  }
}

void Engine::insert(Polynomial h) {
  h = h.monic();
  if (h.total_degree() > options_.budget.max_degree)
    throw BudgetExceeded("degree budget of " + std::to_string(options_.budget.max_degree) + " exceeded");
  BasisEntry entry{h, h.leading_monomial(), h.leading_monomial().support_mask(), component_of(h.leading_monomial()),
                   true};
  const std::size_t t = basis_.size();

  // Gebauer-Moeller update.
  struct Candidate {
    std::size_t i;
    Monomial lcm;
    bool keep;
  };
  std::vector<Candidate> fresh;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (!basis_[i].active || basis_[i].component != entry.component) continue;
    fresh.push_back({i, basis_[i].lm.lcm(entry.lm), true});
  }
  // M: drop pairs whose lcm is properly divisible by another new lcm.
  for (auto& c : fresh)
    for (const auto& d : fresh)
      if (d.lcm.divides(c.lcm) && !(d.lcm == c.lcm)) {
        c.keep = false;
        break;
      }
  // F: one pair per lcm class; a class containing a coprime pair goes entirely.
  std::vector<CriticalPair> added;
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (!fresh[a].keep) continue;
    bool first = true;
    bool any_coprime = false;
    for (std::size_t b = 0; b < fresh.size(); ++b) {
      if (!fresh[b].keep || !(fresh[b].lcm == fresh[a].lcm)) continue;
      if (b < a) first = false;
      if (disjoint(basis_[fresh[b].i].lm, entry.lm)) any_coprime = true;
    }
    if (first && !any_coprime) added.push_back({fresh[a].i, t, fresh[a].lcm});
  }

  // Prune old pairs the new leading monomial makes redundant.
  std::erase_if(pairs_, [&](const CriticalPair& p) {
    if (basis_[p.i].component != entry.component) return false;
    if (!entry.lm.divides(p.lcm)) return false;
    return !(basis_[p.i].lm.lcm(entry.lm) == p.lcm) && !(basis_[p.j].lm.lcm(entry.lm) == p.lcm);
  });

  for (auto& e : basis_)
    if (e.active && e.component == entry.component && entry.lm.divides(e.lm)) e.active = false;

  basis_.push_back(std::move(entry));
  for (auto& p : added) pairs_.push_back(std::move(p));
}

std::size_t Engine::select_normal() const {
  const auto& ord = ring_->order();
  std::size_t best = 0;
  for (std::size_t k = 1; k < pairs_.size(); ++k) {
    const auto c = ord.compare(pairs_[k].lcm, pairs_[best].lcm);
    if (c < 0 || (c == 0 && std::pair(pairs_[k].j, pairs_[k].i) < std::pair(pairs_[best].j, pairs_[best].i))) best = k;
  }
  return best;
}

CriticalPair Engine::take(std::size_t index) {
  CriticalPair p = std::move(pairs_[index]);
  pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(index));
  return p;
}

std::vector<CriticalPair> Engine::take_lowest_degree_batch() {
  std::uint64_t low = pairs_.front().lcm.degree();
  for (const auto& p : pairs_) low = std::min(low, p.lcm.degree());
  std::vector<CriticalPair> batch;
  std::vector<CriticalPair> rest;
  for (auto& p : pairs_) (p.lcm.degree() == low ? batch : rest).push_back(std::move(p));
  pairs_ = std::move(rest);
  const auto& ord = ring_->order();
  std::sort(batch.begin(), batch.end(), [&](const CriticalPair& a, const CriticalPair& b) {
    const auto c = ord.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::pair(a.j, a.i) < std::pair(b.j, b.i);
  });
  return batch;
}

std::vector<Polynomial> Engine::finalize(GbStats* stats) const {
  std::vector<Polynomial> minimal;
  for (const auto& e : basis_)
    if (e.active) minimal.push_back(e.poly);
  const auto& ord = ring_->order();
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.greater(a.leading_monomial(), b.leading_monomial());
  });
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    const Term lt = minimal[k].leading_term();
    Polynomial tail = minimal[k] - Polynomial::term(ring_, lt.coef, lt.mono);
    std::vector<Polynomial> others;
    for (std::size_t m = 0; m < minimal.size(); ++m)
      if (m != k) others.push_back(minimal[m]);
    Polynomial g = normal_form(tail, others) + Polynomial::term(ring_, lt.coef, lt.mono);
    reduced.push_back(g.monic());
  }
  if (stats) {
    stats->pairs_reduced = reductions_;
    stats->zero_reductions = zero_reductions_;
    stats->basis_size = reduced.size();
  }
  return reduced;
}

}  // namespace detail
}  // namespace conelab
