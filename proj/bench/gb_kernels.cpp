// Serial Buchberger loop against the OpenMP batch kernel on a few classic
// systems. Both kernels return the same reduced basis; only time differs.

#include <benchmark/benchmark.h>

#include "conelab/groebner.hpp"
#include "conelab/parse.hpp"

namespace {

using namespace conelab;

struct System {
  const char* vars;
  const char* gens;
};

// Indexed by the benchmark argument.
const System kSystems[] = {
    {"x,y,z,w", "x*z - y^2, y*w - z^2, x*w - y*z"},
    {"a,b,c,d", "a + b + c + d, a*b + b*c + c*d + d*a, a*b*c + b*c*d + c*d*a + d*a*b, a*b*c*d - 1"},
    {"x,y,z,t",
     "x + 2*y + 2*z + 2*t - 1, x^2 + 2*y^2 + 2*z^2 + 2*t^2 - x, 2*x*y + 2*y*z + 2*z*t - y, "
     "y^2 + 2*x*z + 2*y*t - z"},
    {"a,b,c,d,e",
     "a + b + c + d + e, a*b + b*c + c*d + d*e + e*a, a*b*c + b*c*d + c*d*e + d*e*a + e*a*b, "
     "a*b*c*d + b*c*d*e + c*d*e*a + d*e*a*b + e*a*b*c, a*b*c*d*e - 1"},
};

std::vector<Polynomial> generators(std::size_t which, Field field) {
  std::vector<std::string> names;
  std::string v = kSystems[which].vars;
  for (std::size_t start = 0, comma; start <= v.size(); start = comma + 1) {
    comma = v.find(',', start);
    if (comma == std::string::npos) comma = v.size();
    names.push_back(v.substr(start, comma - start));
  }
  return parse_polynomials(PolynomialRing::make(field, names), kSystems[which].gens);
}

void run(benchmark::State& state, GbKernel kernel, Field field) {
  const auto gens = generators(static_cast<std::size_t>(state.range(0)), field);
  GbOptions options;
  options.kernel = kernel;
  options.budget.max_spairs = 5'000'000;
  for (auto _ : state) benchmark::DoNotOptimize(reduced_groebner_basis(gens, options));
}

void serial_qq(benchmark::State& s) { run(s, GbKernel::Serial, Field::rationals()); }
void parallel_qq(benchmark::State& s) { run(s, GbKernel::Parallel, Field::rationals()); }
void serial_modp(benchmark::State& s) { run(s, GbKernel::Serial, Field::prime(kDefaultPrime)); }
void parallel_modp(benchmark::State& s) { run(s, GbKernel::Parallel, Field::prime(kDefaultPrime)); }

}  // namespace

BENCHMARK(serial_qq)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(parallel_qq)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(serial_modp)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(parallel_modp)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
