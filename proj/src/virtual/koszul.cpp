#include <algorithm>

#include "conelab/errors.hpp"
#include "conelab/virtual.hpp"

namespace conelab {

namespace {

/// k-subsets of {0..s-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t s, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < s; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Koszul differential on the fiber variables: wedge^k -> wedge^(k-1).
PolyMatrix koszul_map(const ConePresentation& cone, std::size_t k) {
  const std::size_t s = cone.fiber_rank();
  const auto rows = subsets(s, k - 1);
  const auto cols = subsets(s, k);
  PolyMatrix d(cone.ring(), rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t p = 0; p < k; ++p) {
      auto face = cols[c];
      const std::size_t j = face[p];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(p));
      const auto r = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), face) - rows.begin());
      const Polynomial y = cone.fiber_variable(j);
      d(r, c) = p % 2 == 0 ? y : -y;
    }
  return d;
}

TorModule with_series(ModulePresentation module) {
  const std::vector<std::uint32_t> weights(module.ring()->nvars(), 1);
  const SubmoduleBasis sub(module.base(), module.rank(), module.relations(), weights,
                           std::vector<std::uint32_t>(module.rank(), 0));
  HilbertSeries series = module.rank() == 0 ? HilbertSeries({}, weights) : sub.quotient_hilbert_series();
  auto length = series.total_length();
  return {std::move(module), std::move(series), length};
}

}  // namespace

std::vector<TorModule> virtual_structure_sheaf_tor(const GlobalResolution& res) {
  const ConePresentation cone = cone_in_bundle(res);
  const Ideal& base = cone.relations();
  const std::size_t s = cone.fiber_rank();
  std::vector<PolyMatrix> d;  // d[k] : wedge^k -> wedge^(k-1), k = 1..s
  d.emplace_back(cone.ring(), 0, 0);
  for (std::size_t k = 1; k <= s; ++k) d.push_back(koszul_map(cone, k));

  std::vector<TorModule> out;
  for (std::size_t i = 0; i <= s; ++i) {
    const std::size_t rank = subsets(s, i).size();
    std::vector<Vector> boundaries = i < s ? d[i + 1].columns() : std::vector<Vector>{};
    ModulePresentation chains(base, rank, std::move(boundaries));
    if (i == 0) {
      out.push_back(with_series(std::move(chains)));
      continue;
    }
    const ModulePresentation below(base, d[i].rows());
    out.push_back(with_series(module_map_homology(chains, below, d[i]).kernel));
  }
  return out;
}

std::optional<std::int64_t> koszul_euler_characteristic(const std::vector<TorModule>& tor) {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < tor.size(); ++i) {
    if (!tor[i].length) return std::nullopt;
    chi += i % 2 == 0 ? *tor[i].length : -*tor[i].length;
  }
  return chi;
}

ResolutionComparison compare_global_resolutions(const GlobalResolution& a, const GlobalResolution& b) {
  const EmbeddedChart& chart = a.chart();
  if (!chart.ambient()->compatible(*b.chart().ambient()) || !equal(chart.ideal(), b.chart().ideal()))
    throw DomainError("resolutions of different charts");
  if (krull_dimension(chart.ideal()) != 0) throw DomainError("incomparable regimes: chart is not zero-dimensional");
  ResolutionComparison out{virtual_dimension(a), virtual_dimension(b), 0, 0};
  if (out.virtual_dimension_first != 0 || out.virtual_dimension_second != 0)
    throw DomainError("incomparable regimes: virtual dimension is not zero");
  auto degree = [](const GlobalResolution& res) {
    const auto chi = koszul_euler_characteristic(virtual_structure_sheaf_tor(res));
    if (!chi) throw DomainError("incomparable regimes: Tor modules of infinite length");
    return *chi;
  };
  out.degree_first = degree(a);
  out.degree_second = degree(b);
  return out;
}

bool global_resolution_independence_check(const GlobalResolution& a, const GlobalResolution& b) {
  return compare_global_resolutions(a, b).agree();
}

}  // namespace conelab
