// Acceptance criteria 1-10, exact checks only. `acceptance --criterion N`
// runs one criterion; without the flag all run. Each prints one summary line.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "../support.hpp"
#include "CLI11.hpp"
#include "conelab/errors.hpp"
#include "conelab/groebner.hpp"
#include "conelab/normalcone.hpp"
#include "conelab/obstruction.hpp"
#include "conelab/virtual.hpp"

using namespace conelab;

namespace {

// Collects failures for one criterion; details go to stdout as they happen.
class Report {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      std::cout << "  FAIL " << what << "\n";
    }
  }
  void note(const std::string& what) { std::cout << "  " << what << "\n"; }
  bool ok() const { return failures_ == 0 && checks_ > 0; }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
};

const Session& corpus() { return testing::corpus(); }

EmbeddedChart chart_of(const std::string& name) { return EmbeddedChart(corpus().ideal(name)); }

Point origin(const EmbeddedChart& chart) {
  return Point(chart.ambient_dimension(), Scalar::zero(chart.ambient()->field()));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Normal cones are pure of the ambient dimension.
void purity(Report& r) {
  std::vector<EmbeddedChart> charts;
  std::vector<std::string> labels;
  for (const auto& name : testing::corpus_ideals()) {
    charts.push_back(chart_of(name));
    labels.push_back(name);
  }
  for (const auto& pair : testing::manifest()["products"]) {
    const std::string a = pair[0], b = pair[1];
    charts.push_back(chart_product(chart_of(a), chart_of(b)).chart);
    labels.push_back(a + " x " + b);
  }
  for (std::size_t k = 0; k < charts.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    const int dim = cone_dimension(normal_cone(charts[k]));
    const double took = seconds_since(start);
    r.expect(dim == static_cast<int>(charts[k].ambient_dimension()),
             labels[k] + ": dim C = " + std::to_string(dim) + ", n = " + std::to_string(charts[k].ambient_dimension()));
    r.expect(took < 10.0, labels[k] + ": took " + std::to_string(took) + " s");
  }
  for (const auto& name : testing::manifest()["equidimensional"]) {
    const EmbeddedChart chart = chart_of(name);
    const auto primes = minimal_primes(normal_cone(chart).relations());
    r.expect(!primes.empty(), std::string(name) + ": no minimal primes");
    for (const auto& p : primes)
      r.expect(krull_dimension(p) == static_cast<int>(chart.ambient_dimension()),
               std::string(name) + ": component " + p.to_string() + " is not of full dimension");
  }
}

// 2. lci exactly on the hand-labeled subset.
void lci(Report& r) {
  for (const auto& entry : testing::manifest()["charts"]) {
    const std::string name = entry["ideal"];
    const LciReport report = is_lci(chart_of(name));
    r.expect(report.lci() == entry["lci"].get<bool>(), name + ": is_lci says " + report.summary());
  }
}

// 3. Normal cones are invariant under the tangent bundle action.
void tm_invariance(Report& r) {
  for (const auto& name : testing::corpus_ideals()) r.expect(tm_invariance_check(chart_of(name)), name);
}

// 4. Cone sequence for U in M x A^s via graphs of sections, s = 1, 2.
void cone_sequence(Report& r) {
  for (const auto& name : testing::corpus_ideals()) {
    const EmbeddedChart chart = chart_of(name);
    const RingPtr& ring = chart.ambient();
    const Polynomial zero(ring), first = Polynomial::variable(ring, 0);
    const Polynomial last_sq = Polynomial::variable(ring, chart.ambient_dimension() - 1).pow(2);
    const std::vector<std::vector<Polynomial>> sections = {
        {zero}, {first}, {last_sq + first}, {zero, zero}, {first, last_sq}};
    for (const auto& s : sections) {
      std::string label = name + " s=" + std::to_string(s.size()) + " (";
      for (std::size_t i = 0; i < s.size(); ++i) label += (i ? ", " : "") + s[i].to_string();
      r.expect(lonc_sequence_check(chart, s.size(), s), label + ")");
    }
  }
}

// 5. Normal cone of a product is the product of normal cones.
void products(Report& r) {
  for (const auto& pair : testing::manifest()["products"]) {
    const std::string a = pair[0], b = pair[1];
    r.expect(product_normal_cone_check(chart_of(a), chart_of(b)), a + " x " + b);
  }
}

TwoTermComplexMap zero_to_omega(const EmbeddedChart& chart) {
  const RingPtr& ring = chart.ambient();
  const std::size_t n = chart.ambient_dimension();
  const TwoTermComplex source(ModulePresentation(chart.ideal(), 0), ModulePresentation(chart.ideal(), n),
                              PolyMatrix(ring, n, 0));
  return TwoTermComplexMap(source, conormal_complex(chart), PolyMatrix::identity(ring, n),
                           PolyMatrix(ring, chart.equation_count(), 0));
}

// 6. Obstruction-theory clauses.
void obstruction_theories(Report& r) {
  for (const auto& name : testing::corpus_ideals()) {
    const EmbeddedChart chart = chart_of(name);
    r.expect(is_obstruction_theory(chart, TwoTermComplexMap::identity(conormal_complex(chart))), name + ": identity");
  }
  struct Broken {
    std::string label;
    EmbeddedChart chart;
    std::vector<std::string> expected;
  };
  const RingPtr plane = testing::ring({"x", "y"});
  const std::vector<Broken> broken = {
      {"[0 -> Omega] on (xy)", EmbeddedChart(testing::ideal(plane, "x*y")), {"h0 not iso"}},
      {"[0 -> Omega] on (x^2) over GF(2)",
       EmbeddedChart(testing::ideal(testing::ring({"x"}, Field::prime(2)), "x^2")),
       {"h-1 not surjective"}},
      {"[0 -> Omega] on (x^2) over QQ",
       EmbeddedChart(testing::ideal(testing::ring({"x"}), "x^2")),
       {"h0 not iso", "h-1 not surjective"}},
  };
  for (const auto& b : broken) {
    const auto failures = obstruction_theory_criteria(b.chart, zero_to_omega(b.chart)).failures();
    std::string got;
    for (const auto& f : failures) got += (got.empty() ? "" : "; ") + f;
    r.expect(failures == b.expected, b.label + ": rejected with '" + got + "'");
  }
}

bool inside_m_squared(const MinimalEmbedding& m) {
  for (const auto& f : m.equations)
    if (!f.is_zero() && f.lowest_degree() < 2) return false;
  return true;
}

// 7. Point theory.
void point_theory(Report& r) {
  std::size_t compared = 0;
  for (const auto& entry : testing::manifest()["charts"]) {
    const std::string name = entry["ideal"];
    const EmbeddedChart chart = chart_of(name);
    for (const auto& pname : entry["points"]) {
      const Point& p = corpus().point(pname);
      if (!inside_m_squared(minimal_embedding(chart, p))) continue;
      const ObstructionSpace ob = point_obstruction_space(chart, p);
      const TangentSpaces t = higher_tangent_spaces(chart, p);
      ++compared;
      r.expect(ob.dimension == t.t1, name + " at " + std::string(pname) + ": dim N_p = " +
                                         std::to_string(ob.dimension) + ", dim T1 = " + std::to_string(t.t1));
    }
  }
  r.note(std::to_string(compared) + " corpus points compared");

  const EmbeddedChart cubic = chart_of("twisted_cubic");
  const Ideal cone = point_obstruction_cone(cubic, origin(cubic));
  r.expect(!cone.groebner_basis().empty(),
           "twisted cubic cone: obstruction cone ideal is " + cone.to_string() + ", expected a proper subcone");

  const RingPtr plane = testing::ring({"x", "y"});
  for (const char* eqs : {"x*y", "x^2"}) {
    const EmbeddedChart chart(testing::ideal(plane, eqs));
    const auto ob = small_extension_obstruction(chart, origin(chart), 3);
    r.expect(ob.injective, std::string("(") + eqs + ") n=3: ob injective");
    r.expect(ob.spans_kernel, std::string("(") + eqs + ") n=3: ob spans the kernel");
  }
}

// 8. Virtual degrees and independence of the resolution.
void virtual_degrees(Report& r) {
  const std::vector<std::pair<std::string, int>> lengths = {
      {"two_points", 2}, {"double_point", 2}, {"three_points", 3}};
  for (const auto& [name, expected] : lengths) {
    const mpq_class d = virtual_degree_lci(chart_of(name));
    r.expect(d == expected, name + ": virtual degree " + d.get_str());
  }

  const RingPtr h = testing::ring({"h"});
  const ChowRingPresentation chow(testing::ideal(h, "h^2"), {1}, 1, {{testing::poly(h, "h"), mpq_class(1)}});
  const mpq_class e = virtual_degree_euler(chow, testing::poly(h, "1 + 2*h"), 1);
  r.expect(e == 2, "rank 1, c1 = 2h: degree " + e.get_str());

  for (const auto& [name, expected] : lengths) {
    const GlobalResolution base = GlobalResolution::tautological(chart_of(name));
    const std::vector<std::pair<std::string, GlobalResolution>> variants = {
        {"padded", base.padded()},
        {"padded twice", base.padded(2)},
        {"reordered", base.reordered({1, 0})},
        {"reordered+padded", base.reordered({1, 0}).padded()}};
    for (const auto& [label, other] : variants)
      r.expect(global_resolution_independence_check(base, other), name + ": tautological vs " + label);
  }
}

// 9. Virtual structure sheaf through Koszul Tor.
void structure_sheaf(Report& r) {
  const RingPtr line = testing::ring({"x"});
  const EmbeddedChart chart(testing::ideal(line, ""));
  const GlobalResolution zero_section(chart, PolyMatrix(line, 1, 1), PolyMatrix::identity(line, 1),
                                      PolyMatrix(line, 0, 1));
  const auto tor = virtual_structure_sheaf_tor(zero_section);
  const HilbertSeries base = hilbert_series(chart.ideal(), {1});
  r.expect(tor.size() == 2, "zero section: Tor_0, Tor_1 only");
  for (std::size_t i = 0; i < tor.size(); ++i)
    r.expect(tor[i].series == base, "zero section: Tor_" + std::to_string(i) + " = " + tor[i].series.to_string());

  for (const auto& entry : testing::manifest()["charts"]) {
    const std::string name = entry["ideal"];
    const EmbeddedChart c = chart_of(name);
    if (!entry["lci"].get<bool>() || krull_dimension(c.ideal()) != 0) continue;
    const auto chi = koszul_euler_characteristic(virtual_structure_sheaf_tor(GlobalResolution::tautological(c)));
    const mpq_class d = virtual_degree_lci(c);
    r.expect(chi && mpq_class(*chi) == d,
             name + ": chi = " + (chi ? std::to_string(*chi) : "inf") + ", lci degree " + d.get_str());
  }
}

RingPtr modular(const RingPtr& ring) {
  return PolynomialRing::make(Field::prime(kDefaultPrime), ring->names(), ring->order());
}

Polynomial reduce_mod_p(const Polynomial& f, const RingPtr& target) { return parse_polynomial(target, f.to_string()); }

std::string run_cli(const std::string& args) {
  const auto err = std::filesystem::temp_directory_path() / ("conelab-acceptance-" + std::to_string(::getpid()));
  const std::string cmd = std::string(CONELAB_BINARY) + " " + args + " 2>" + err.string();
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run " + cmd);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = ::pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  out += "--- stderr\n" + testing::slurp(err.string()) + "--- exit " + std::to_string(code) + "\n";
  std::filesystem::remove(err);
  return out;
}

// 10. Engine soundness and reproducible CLI output.
void soundness(Report& r) {
  // The audit has been on since startup; add a sweep so it is never empty.
  for (const auto& name : testing::corpus_ideals()) {
    const EmbeddedChart chart = chart_of(name);
    normal_cone(chart);
    normal_sheaf(chart);
    is_lci(chart);
  }
  for (const auto& entry : testing::manifest()["charts"])
    for (const auto& p : entry["points"]) point_obstruction_space(chart_of(entry["ideal"]), corpus().point(p));
  for (const auto& name : {"two_points", "double_point", "three_points"})
    virtual_structure_sheaf_tor(GlobalResolution::tautological(chart_of(name)).padded());
  const GbAudit audit = gb_audit();
  r.expect(audit.checked > 0 && audit.failed == 0, std::to_string(audit.failed) + " of " +
                                                       std::to_string(audit.checked) +
                                                       " computed bases fail the S-pair self-check");
  r.note(std::to_string(audit.checked) + " bases audited");

  // QQ and GF(32003) agree on membership.
  std::size_t queries = 0;
  for (const auto& name : testing::corpus_ideals()) {
    const Ideal& q = corpus().ideal(name);
    const RingPtr pr = modular(q.ring());
    std::vector<Polynomial> pgens;
    for (const auto& g : q.generators()) pgens.push_back(reduce_mod_p(g, pr));
    const Ideal p(pr, pgens);

    std::vector<Polynomial> asks = q.generators();
    const std::size_t n = q.ring()->nvars();
    for (std::size_t i = 0; i < n; ++i) {
      const Polynomial v = Polynomial::variable(q.ring(), i);
      asks.push_back(v);
      asks.push_back(v.pow(3));
      for (const auto& g : q.generators()) {
        asks.push_back(v * g + g);
        asks.push_back(g + v.pow(2));
      }
      for (std::size_t j = i + 1; j < n; ++j) asks.push_back(v * Polynomial::variable(q.ring(), j));
    }
    for (const auto& f : asks) {
      ++queries;
      r.expect(contains(q, f) == contains(p, reduce_mod_p(f, pr)), name + ": membership of " + f.to_string());
    }
  }
  r.note(std::to_string(queries) + " membership queries cross-checked");

  // Golden CLI output: stored file, two runs, three thread settings.
  const std::string golden = testing::kSourceDir + "/tests/golden/";
  std::istringstream cases(testing::slurp(golden + "cases.txt"));
  std::string line;
  std::size_t compared = 0;
  while (std::getline(cases, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto bar = line.find('|');
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(' '));
      s.erase(s.find_last_not_of(' ') + 1);
      return s;
    };
    const std::string name = trim(line.substr(0, bar)), args = trim(line.substr(bar + 1));
    const std::string expected = testing::slurp(golden + name + ".out");
    const std::string session = " " + golden + "session.cl";
    const std::vector<std::string> variants = {"", "", " --threads 1", " --threads 4"};
    for (const auto& v : variants) {
      ++compared;
      r.expect(run_cli(args + v + session) == expected, "golden " + name + (v.empty() ? "" : v));
    }
  }
  r.note(std::to_string(compared) + " CLI runs compared with golden files");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conelab acceptance criteria"};
  std::optional<int> only;
  app.add_option("--criterion", only, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);
  set_gb_audit(true);

  const std::map<int, std::pair<std::string, std::function<void(Report&)>>> criteria = {
      {1, {"normal cones pure of ambient dimension", purity}},
      {2, {"lci characterization", lci}},
      {3, {"T_M-invariance", tm_invariance}},
      {4, {"cone exact sequence for graph embeddings", cone_sequence}},
      {5, {"normal cone of products", products}},
      {6, {"obstruction-theory criteria", obstruction_theories}},
      {7, {"point theory", point_theory}},
      {8, {"virtual degrees and resolution independence", virtual_degrees}},
      {9, {"virtual structure sheaf", structure_sheaf}},
      {10, {"engine soundness and reproducibility", soundness}},
  };

  bool all = true;
  for (const auto& [id, entry] : criteria) {
    if (only && *only != id) continue;
    Report report;
    const auto start = std::chrono::steady_clock::now();
    try {
      entry.second(report);
    } catch (const std::exception& e) {
      report.expect(false, std::string("exception: ") + e.what());
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds_since(start));
    std::cout << "criterion " << id << " (" << entry.first << "): " << (report.ok() ? "PASS" : "FAIL") << " ["
              << report.checks() - report.failures() << "/" << report.checks() << " checks, " << timing << "]"
              << std::endl;
    all = all && report.ok();
  }
  return all ? 0 : 1;
}
