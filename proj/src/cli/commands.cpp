#include "conelab/commands.hpp"

#include <cstdio>
#include <functional>
#include <map>

#include "conelab/errors.hpp"
#include "conelab/groebner.hpp"
#include "conelab/normalcone.hpp"
#include "conelab/obstruction.hpp"
#include "conelab/parse.hpp"

namespace conelab {

namespace {

using nlohmann::json;

json strings(const std::vector<Polynomial>& polys) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

std::string ideal_text(const std::vector<Polynomial>& polys) {
  std::string s = "(";
  for (std::size_t i = 0; i < polys.size(); ++i) s += (i ? ", " : "") + polys[i].to_string();
  return s + ")";
}

std::string point_text(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].to_string();
  return s + ")";
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

// Argument access with uniform messages.
class Args {
 public:
  Args(const Session& session, const std::string& command, const CommandOptions& options, CommandResult& out)
      : session_(session), command_(command), options_(options), out_(out) {}

  const std::string& one(const std::vector<std::string>& list, const char* flag, const char* key) {
    return nth(list, flag, key, 0, 1);
  }
  const std::string& nth(const std::vector<std::string>& list, const char* flag, const char* key, std::size_t i,
                         std::size_t count) {
    if (list.size() != count)
      throw InputError(command_ + " needs " + (count == 1 ? "one " : std::to_string(count) + " ") + flag + " option" +
                       (count == 1 ? "" : "s"));
    json& slot = out_.inputs[key];
    if (count == 1) {
      slot = list[0];
    } else {
      slot = list;
    }
    return list[i];
  }

  EmbeddedChart chart(std::size_t i = 0, std::size_t count = 1) {
    return EmbeddedChart(session_.ideal(nth(options_.ideals, "--ideal", "ideal", i, count)));
  }
  const Point& point(const EmbeddedChart& chart) {
    const Point& p = session_.point(one(options_.points, "--point", "point"));
    if (p.size() != chart.ambient_dimension())
      throw InputError("point has " + std::to_string(p.size()) + " coordinates, chart has " +
                       std::to_string(chart.ambient_dimension()));
    if (!chart.contains(p)) throw DomainError("point " + point_text(p) + " does not lie on the chart");
    return p;
  }
  GlobalResolution resolution(std::size_t i = 0, std::size_t count = 1) {
    return build_resolution(session_, nth(options_.resolutions, "--resolution", "resolution", i, count));
  }

  const Session& session() const { return session_; }
  const CommandOptions& options() const { return options_; }

 private:
  const Session& session_;
  const std::string& command_;
  const CommandOptions& options_;
  CommandResult& out_;
};

void check(CommandResult& out, const std::string& name, bool pass) { out.checks.emplace_back(name, pass); }

void cone_result(CommandResult& out, const ConePresentation& cone) {
  const int dim = cone_dimension(cone);
  out.result["ring"] = cone.ring()->to_string();
  out.result["relations"] = strings(cone.relations().groebner_basis());
  out.result["fiber_rank"] = cone.fiber_rank();
  out.result["dimension"] = dim;
  out.lines.push_back(cone.to_string());
  out.lines.push_back("dim: " + std::to_string(dim));
}

void cmd_gb(Args& a, CommandResult& out) {
  const EmbeddedChart chart = a.chart();
  const auto& basis = chart.ideal().groebner_basis();
  out.result["basis"] = strings(basis);
  out.result["order"] = chart.ambient()->order_key();
  for (const auto& g : basis) out.lines.push_back(g.to_string());
  if (basis.empty()) out.lines.push_back("(0)");
  check(out, "buchberger self-check", buchberger_self_check(basis));
}

void cmd_dim(Args& a, CommandResult& out) {
  const EmbeddedChart chart = a.chart();
  const auto& cone = a.options().cone;
  if (!cone) {
    const int d = krull_dimension(chart.ideal());
    out.result["dimension"] = d;
    out.lines.push_back(std::to_string(d));
    return;
  }
  out.inputs["cone"] = *cone;
  if (*cone != "normal" && *cone != "sheaf") throw InputError("--cone takes normal or sheaf");
  const ConePresentation c = *cone == "normal" ? normal_cone(chart) : normal_sheaf(chart);
  const int d = cone_dimension(c);
  out.result["dimension"] = d;
  out.lines.push_back(std::to_string(d));
  if (*cone == "normal" && !chart.ideal().is_unit())
    check(out, "purity: dim C = dim M", d == static_cast<int>(chart.ambient_dimension()));
}

void cmd_length(Args& a, CommandResult& out) {
  const EmbeddedChart chart = a.chart();
  if (krull_dimension(chart.ideal()) > 0) throw DomainError("length is infinite: the chart is positive-dimensional");
  const auto len = vector_space_dimension(chart.ideal());
  out.result["length"] = len;
  out.lines.push_back(std::to_string(len));
}

void cmd_normal_cone(Args& a, CommandResult& out) { cone_result(out, normal_cone(a.chart())); }
void cmd_normal_sheaf(Args& a, CommandResult& out) { cone_result(out, normal_sheaf(a.chart())); }

void cmd_hull(Args& a, CommandResult& out) {
  const EmbeddedChart chart = a.chart();
  const std::string which = a.options().cone.value_or("normal");
  if (which != "normal" && which != "sheaf") throw InputError("--cone takes normal or sheaf");
  out.inputs["cone"] = which;
  const HullResult hull = abelian_hull(which == "normal" ? normal_cone(chart) : normal_sheaf(chart));
  cone_result(out, hull.hull);
  out.result["strict"] = hull.is_strict;
  out.lines.push_back(std::string("strict: ") + (hull.is_strict ? "true" : "false"));
}

void cmd_lci(Args& a, CommandResult& out) {
  const LciReport lci = is_lci(a.chart());
  out.result["lci"] = lci.lci();
  out.result["cone_equals_sheaf"] = lci.cone_equals_sheaf;
  out.result["sheaf_locally_free"] = lci.sheaf_locally_free;
  out.result["rank"] = lci.rank ? json(*lci.rank) : json(nullptr);
  out.result["summary"] = lci.summary();
  out.lines.push_back(std::string("lci: ") + (lci.lci() ? "true" : "false") + " (" + lci.summary() + ")");
  if (a.options().assert_result) check(out, "lci", lci.lci());
}

void cmd_tangent_cone(Args& a, CommandResult& out) {
  const EmbeddedChart chart = a.chart();
  const Point& p = a.point(chart);
  const Ideal cone = tangent_cone_at_point(chart, p);
  out.result["tangent_cone"] = strings(cone.generators());
  out.lines.push_back(ideal_text(cone.generators()));
}

void cmd_obstruction_space(Args& a, CommandResult& out) {
  const EmbeddedChart chart = a.chart();
  const ObstructionSpace ob = point_obstruction_space(chart, a.point(chart));
  out.result["dimension"] = ob.dimension;
  out.result["variables"] = ob.ring->names();
  out.result["equations"] = strings(ob.equations);
  out.result["minimal_generators"] = strings(ob.minimal_generators);
  out.result["cutoff"] = ob.cutoff;
  out.lines.push_back("dim: " + std::to_string(ob.dimension));
  out.lines.push_back("minimal generators: " + ideal_text(ob.minimal_generators));
}

void cmd_obstruction_cone(Args& a, CommandResult& out) {
  const EmbeddedChart chart = a.chart();
  const Ideal cone = point_obstruction_cone(chart, a.point(chart));
  const auto& gb = cone.groebner_basis();
  out.result["ring"] = cone.ring()->to_string();
  out.result["relations"] = strings(gb);
  out.result["proper"] = !gb.empty();
  out.lines.push_back(cone.ring()->to_string() + " / " + ideal_text(gb));
  out.lines.push_back(std::string("proper: ") + (gb.empty() ? "false" : "true"));
}

void cmd_tangent_spaces(Args& a, CommandResult& out) {
  const EmbeddedChart chart = a.chart();
  const TangentSpaces t = higher_tangent_spaces(chart, a.point(chart));
  out.result["T0"] = t.t0;
  out.result["T1"] = t.t1;
  out.lines.push_back("T0: " + std::to_string(t.t0));
  out.lines.push_back("T1: " + std::to_string(t.t1));
}

void cmd_small_extension(Args& a, CommandResult& out) {
  const EmbeddedChart chart = a.chart();
  const Point& p = a.point(chart);
  const std::size_t n = a.options().order.value_or(3);
  out.inputs["n"] = n;
  const SmallExtensionObstruction ob = small_extension_obstruction(chart, p, n);
  out.result["extension"] = ob.extension.source().to_string();
  out.result["base"] = ob.extension.target().to_string();
  out.result["kernel"] = strings(ob.extension.kernel_basis());
  out.result["ob_matrix"] = ob.ob_matrix.to_string();
  out.lines.push_back("A' = " + ob.extension.source().to_string());
  out.lines.push_back("A = " + ob.extension.target().to_string());
  out.lines.push_back("kernel: " + ideal_text(ob.extension.kernel_basis()));
  out.lines.push_back("ob: " + ob.ob_matrix.to_string());
  check(out, "ob injective", ob.injective);
  check(out, "ob spans kernel", ob.spans_kernel);
}

void cmd_check_invariance(Args& a, CommandResult& out) { check(out, "T_M-invariance", tm_invariance_check(a.chart())); }

void cmd_check_product(Args& a, CommandResult& out) {
  const EmbeddedChart first = a.chart(0, 2), second = a.chart(1, 2);
  check(out, "normal cone of product", product_normal_cone_check(first, second));
}

void cmd_check_lonc(Args& a, CommandResult& out) {
  const EmbeddedChart chart = a.chart();
  std::vector<Polynomial> section;
  for (const auto& text : a.options().sections) section.push_back(parse_polynomial(chart.ambient(), text));
  if (section.empty()) section.push_back(Polynomial(chart.ambient()));
  out.inputs["section"] = strings(section);
  check(out, "cone sequence exact", lonc_sequence_check(chart, section.size(), section));
}

void cmd_check_obstruction_theory(Args& a, CommandResult& out) {
  const EmbeddedChart chart = a.chart();
  const TwoTermComplex conormal = conormal_complex(chart);
  const RingPtr& ring = chart.ambient();
  std::optional<TwoTermComplexMap> phi;
  if (a.options().complexes.empty()) {
    phi = TwoTermComplexMap::identity(conormal);
  } else {
    const std::string& name = a.one(a.options().complexes, "--complex", "complex");
    const ComplexDecl& decl = a.session().complex(name);
    if (decl.ideal != out.inputs["ideal"].get<std::string>())
      throw InputError("complex " + name + " is declared over " + decl.ideal);
    const TwoTermComplex source(ModulePresentation(chart.ideal(), decl.differential.cols()),
                                ModulePresentation(chart.ideal(), decl.differential.rows()), decl.differential);
    phi = TwoTermComplexMap(source, conormal, PolyMatrix::identity(ring, chart.ambient_dimension()), decl.via);
  }
  const HomologyCriteria h = obstruction_theory_criteria(chart, *phi);
  out.result["h0_iso"] = h.h0_iso;
  out.result["h_minus1_surjective"] = h.h_minus1_surjective;
  out.result["h_minus1_injective"] = h.h_minus1_injective;
  out.result["failures"] = h.failures();
  out.result["perfect"] = is_perfect(phi->source());
  std::string why;
  for (const auto& f : h.failures()) why += (why.empty() ? "" : "; ") + f;
  out.lines.push_back(std::string("obstruction theory: ") + (why.empty() ? "true" : "false (" + why + ")"));
  check(out, "h0 iso", h.h0_iso);
  check(out, "h-1 surjective", h.h_minus1_surjective);
}

void cmd_virtual_dim(Args& a, CommandResult& out) {
  const int vd = virtual_dimension(a.resolution());
  out.result["virtual_dimension"] = vd;
  out.lines.push_back(std::to_string(vd));
}

void cmd_virtual_degree_lci(Args& a, CommandResult& out) {
  const mpq_class d = virtual_degree_lci(a.chart());
  out.result["degree"] = rational_text(d);
  out.lines.push_back(rational_text(d));
}

void cmd_virtual_degree_euler(Args& a, CommandResult& out) {
  const auto& opts = a.options();
  if (!opts.chow) throw InputError("virtual-degree-euler needs --chow");
  if (!opts.chern) throw InputError("virtual-degree-euler needs --chern");
  if (!opts.rank) throw InputError("virtual-degree-euler needs --rank");
  out.inputs["chow"] = *opts.chow;
  out.inputs["chern"] = *opts.chern;
  out.inputs["rank"] = *opts.rank;
  const ChowDecl& decl = a.session().chow(*opts.chow);
  const ChowRingPresentation chow(Ideal(decl.ring, decl.relations), decl.weights, decl.top, decl.functional);
  const mpq_class d = virtual_degree_euler(chow, parse_polynomial(decl.ring, *opts.chern), *opts.rank);
  out.result["degree"] = rational_text(d);
  out.lines.push_back(rational_text(d));
}

void cmd_vss_tor(Args& a, CommandResult& out) {
  const auto tor = virtual_structure_sheaf_tor(a.resolution());
  json modules = json::array();
  for (std::size_t i = 0; i < tor.size(); ++i) {
    const std::string series = tor[i].series.to_string();
    modules.push_back(
        {{"i", i}, {"hilbert_series", series}, {"length", tor[i].length ? json(*tor[i].length) : json(nullptr)}});
    out.lines.push_back("Tor_" + std::to_string(i) + ": " + series);
  }
  out.result["tor"] = modules;
  const auto chi = koszul_euler_characteristic(tor);
  out.result["euler_characteristic"] = chi ? json(*chi) : json(nullptr);
  out.lines.push_back("chi: " + (chi ? std::to_string(*chi) : std::string("infinite")));
}

void cmd_compare_resolutions(Args& a, CommandResult& out) {
  const GlobalResolution first = a.resolution(0, 2), second = a.resolution(1, 2);
  const ResolutionComparison c = compare_global_resolutions(first, second);
  out.result["virtual_dimension_first"] = c.virtual_dimension_first;
  out.result["virtual_dimension_second"] = c.virtual_dimension_second;
  out.result["degree_first"] = c.degree_first;
  out.result["degree_second"] = c.degree_second;
  out.lines.push_back("vd: " + std::to_string(c.virtual_dimension_first) + " vs " +
                      std::to_string(c.virtual_dimension_second));
  out.lines.push_back("degree: " + std::to_string(c.degree_first) + " vs " + std::to_string(c.degree_second));
  check(out, "independent of resolution", c.agree());
}

void cmd_compare_embeddings(Args& a, CommandResult& out) {
  const std::string& first_name = a.nth(a.options().ideals, "--ideal", "ideal", 0, 2);
  const std::string& second_name = a.nth(a.options().ideals, "--ideal", "ideal", 1, 2);
  const MapDecl& forward = a.session().map(a.nth(a.options().maps, "--map", "map", 0, 2));
  const MapDecl& backward = a.session().map(a.nth(a.options().maps, "--map", "map", 1, 2));
  if (forward.source != first_name || forward.target != second_name)
    throw InputError("first --map must go from " + first_name + " to " + second_name);
  if (backward.source != second_name || backward.target != first_name)
    throw InputError("second --map must go from " + second_name + " to " + first_name);
  const EmbeddedChart first(a.session().ideal(first_name)), second(a.session().ideal(second_name));
  const EmbeddingComparison c = double_embedding_compare(first, second, backward.images, forward.images);
  out.result["excess_first"] = c.excess_first;
  out.result["excess_second"] = c.excess_second;
  check(out, "excess first = 0", c.excess_first == 0);
  check(out, "excess second = 0", c.excess_second == 0);
  check(out, "sequence first", c.sequence_first);
  check(out, "sequence second", c.sequence_second);
  check(out, "same subscheme", c.same_subscheme);
}

using Handler = std::function<void(Args&, CommandResult&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"gb", cmd_gb},
      {"dim", cmd_dim},
      {"length", cmd_length},
      {"normal-cone", cmd_normal_cone},
      {"normal-sheaf", cmd_normal_sheaf},
      {"hull", cmd_hull},
      {"lci", cmd_lci},
      {"tangent-cone", cmd_tangent_cone},
      {"obstruction-space", cmd_obstruction_space},
      {"obstruction-cone", cmd_obstruction_cone},
      {"tangent-spaces", cmd_tangent_spaces},
      {"small-extension", cmd_small_extension},
      {"check-invariance", cmd_check_invariance},
      {"check-product", cmd_check_product},
      {"check-lonc", cmd_check_lonc},
      {"check-obstruction-theory", cmd_check_obstruction_theory},
      {"virtual-dim", cmd_virtual_dim},
      {"virtual-degree-lci", cmd_virtual_degree_lci},
      {"virtual-degree-euler", cmd_virtual_degree_euler},
      {"vss-tor", cmd_vss_tor},
      {"compare-resolutions", cmd_compare_resolutions},
      {"compare-embeddings", cmd_compare_embeddings},
  };
  return table;
}

json checks_json(const CommandResult& r) {
  json out = json::array();
  for (const auto& [name, pass] : r.checks) out.push_back({{"name", name}, {"pass", pass}});
  return out;
}

}  // namespace

bool CommandResult::all_checks_pass() const {
  for (const auto& [name, pass] : checks)
    if (!pass) return false;
  return true;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, handler] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

CommandResult run_command(const Session& session, const std::string& command, const CommandOptions& options) {
  const auto it = handlers().find(command);
  if (it == handlers().end()) throw InputError("unknown command " + command);
  CommandResult out;
  out.command = command;
  Args args(session, command, options, out);
  it->second(args, out);
  return out;
}

GlobalResolution build_resolution(const Session& session, const std::string& name) {
  const ResolutionDecl& decl = session.resolution(name);
  switch (decl.kind) {
    case ResolutionDecl::Kind::Tautological:
      return GlobalResolution::tautological(EmbeddedChart(session.ideal(decl.source)));
    case ResolutionDecl::Kind::Padded:
      return build_resolution(session, decl.source).padded(decl.count);
    case ResolutionDecl::Kind::Reordered:
      return build_resolution(session, decl.source).reordered(decl.order);
    case ResolutionDecl::Kind::Complex: {
      const ComplexDecl& c = session.complex(decl.source);
      const EmbeddedChart chart(session.ideal(c.ideal));
      return GlobalResolution(chart, c.differential, PolyMatrix::identity(chart.ambient(), chart.ambient_dimension()),
                              c.via);
    }
  }
  throw InputError("resolution " + name + " has an unknown kind");
}

std::string render_text(const CommandResult& r, const std::optional<double>& total_ms) {
  std::string out;
  for (const auto& line : r.lines) out += line + "\n";
  for (const auto& [name, pass] : r.checks) out += "check " + name + ": " + (pass ? "pass" : "fail") + "\n";
  if (total_ms) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "time: %.3f ms\n", *total_ms);
    out += buf;
  }
  return out;
}

std::string render_json(const CommandResult& r, const std::optional<double>& total_ms) {
  json doc = {{"command", r.command}, {"inputs", r.inputs}, {"result", r.result}, {"checks", checks_json(r)}};
  doc["timings_ms"] = total_ms ? json{{"total", *total_ms}} : json::object();
  return doc.dump(2) + "\n";
}

}  // namespace conelab
