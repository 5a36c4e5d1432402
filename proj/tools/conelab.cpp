// conelab command-line front end: one session file, one command per run.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "conelab/commands.hpp"
#include "conelab/errors.hpp"
#include "conelab/groebner.hpp"
#include "conelab/normalcone.hpp"
#include "conelab/session.hpp"

namespace {

enum Exit { Ok = 0, CheckFailed = 1, BadInput = 2, OverBudget = 3 };

// CONELAB_BUDGET="max_spairs=N,max_degree=D"; either key may be omitted.
conelab::Budget budget_from_env(conelab::Budget budget) {
  const char* env = std::getenv("CONELAB_BUDGET");
  if (!env) return budget;
  std::stringstream in(env);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw conelab::InputError("CONELAB_BUDGET entry '" + item + "' lacks '='");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    try {
      if (key == "max_spairs")
        budget.max_spairs = std::stoull(value);
      else if (key == "max_degree")
        budget.max_degree = static_cast<std::uint32_t>(std::stoul(value));
      else
        throw conelab::InputError("CONELAB_BUDGET has unknown key '" + key + "'");
    } catch (const std::logic_error&) {
      throw conelab::InputError("CONELAB_BUDGET value '" + value + "' is not a number");
    }
  }
  return budget;
}

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw conelab::InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct Flags {
  std::string format = "text";
  std::optional<std::uint64_t> max_spairs;
  std::optional<std::uint32_t> max_degree;
  int threads = 0;
  bool timings = false;
  bool strict = false;
  std::string session_path;
  conelab::CommandOptions options;
};

// Which per-command options each subcommand accepts.
enum Opt : unsigned {
  kIdeal = 1,
  kPoint = 2,
  kComplex = 4,
  kResolution = 8,
  kMap = 16,
  kSection = 32,
  kCone = 64,
  kChow = 128,
  kN = 256,
  kAssert = 512,
};

unsigned accepted(const std::string& command) {
  static const std::map<std::string, unsigned> table = {
      {"gb", kIdeal},
      {"dim", kIdeal | kCone},
      {"length", kIdeal},
      {"normal-cone", kIdeal},
      {"normal-sheaf", kIdeal},
      {"hull", kIdeal | kCone},
      {"lci", kIdeal | kAssert},
      {"tangent-cone", kIdeal | kPoint},
      {"obstruction-space", kIdeal | kPoint},
      {"obstruction-cone", kIdeal | kPoint},
      {"tangent-spaces", kIdeal | kPoint},
      {"small-extension", kIdeal | kPoint | kN},
      {"check-invariance", kIdeal},
      {"check-product", kIdeal},
      {"check-lonc", kIdeal | kSection},
      {"check-obstruction-theory", kIdeal | kComplex},
      {"virtual-dim", kResolution},
      {"virtual-degree-lci", kIdeal},
      {"virtual-degree-euler", kChow},
      {"vss-tor", kResolution},
      {"compare-resolutions", kResolution},
      {"compare-embeddings", kIdeal | kMap},
  };
  return table.at(command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conelab: normal cones and obstruction theories of affine charts"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags flags;
  app.add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-spairs", flags.max_spairs, "S-pair budget per Groebner computation");
  app.add_option("--max-degree", flags.max_degree, "Degree cap per Groebner computation");
  app.add_option("--threads", flags.threads, "Worker threads for the parallel kernel (0: runtime default)");
  app.add_flag("--timings", flags.timings, "Report wall-clock time");
  app.add_flag("--strict", flags.strict, "Check cone dimensions and fail loudly");

  auto& o = flags.options;
  for (const auto& name : conelab::command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("session", flags.session_path, "Session file ('-' for stdin)")->required();
    const unsigned a = accepted(name);
    if (a & kIdeal) sub->add_option("--ideal", o.ideals, "Ideal name")->take_all();
    if (a & kPoint) sub->add_option("--point", o.points, "Point name");
    if (a & kComplex) sub->add_option("--complex", o.complexes, "Complex name");
    if (a & kResolution) sub->add_option("--resolution", o.resolutions, "Resolution name");
    if (a & kMap) sub->add_option("--map", o.maps, "Map name");
    if (a & kSection) sub->add_option("--section", o.sections, "Section coordinate (repeat for s > 1)");
    if (a & kCone) sub->add_option("--cone", o.cone, "normal or sheaf");
    if (a & kN) sub->add_option("--n", o.order, "Truncation order of the small extension");
    if (a & kAssert) sub->add_flag("--assert", o.assert_result, "Exit 1 unless the answer is true");
    if (a & kChow) {
      sub->add_option("--chow", o.chow, "Chow ring name")->required();
      sub->add_option("--chern", o.chern, "Total Chern class of the obstruction bundle")->required();
      sub->add_option("--rank", o.rank, "Rank of the obstruction bundle")->required();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? Ok : BadInput;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    conelab::Budget budget = budget_from_env(conelab::current_budget());
    if (flags.max_spairs) budget.max_spairs = *flags.max_spairs;
    if (flags.max_degree) budget.max_degree = *flags.max_degree;
    conelab::set_budget(budget);
    conelab::set_thread_count(flags.threads);
    conelab::set_strict_mode(flags.strict);

    const auto start = std::chrono::steady_clock::now();
    const conelab::Session session = conelab::parse_session(read_file(flags.session_path));
    const conelab::CommandResult result = conelab::run_command(session, command, flags.options);
    std::optional<double> ms;
    if (flags.timings) ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    std::cout << (flags.format == "json" ? conelab::render_json(result, ms) : conelab::render_text(result, ms));
    return result.all_checks_pass() ? Ok : CheckFailed;
  } catch (const conelab::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return OverBudget;
  } catch (const conelab::InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return CheckFailed;
  } catch (const conelab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return BadInput;
  }
}
