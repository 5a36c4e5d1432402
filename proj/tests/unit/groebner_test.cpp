#include "conelab/groebner.hpp"

#include <algorithm>

#include "../support.hpp"
#include "conelab/errors.hpp"
#include "conelab/ideal.hpp"
#include "conelab/module.hpp"
#include "doctest.h"

using namespace conelab;
using testing::ideal;
using testing::poly;

namespace {

std::vector<Ideal> random_ideals(const RingPtr& r, std::uint32_t seed, int count) {
  testing::RandomPolynomials gen(r, seed);
  std::vector<Ideal> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k)
      if (auto f = gen.next(3, 3, 3); !f.is_zero()) gens.push_back(f);
    out.emplace_back(r, gens);
  }
  return out;
}

}  // namespace

TEST_CASE("reduced bases are canonical") {
  const RingPtr r = testing::ring({"x", "y", "z"});
  for (const Ideal& i : random_ideals(r, 11, 12)) {
    const auto& basis = i.groebner_basis();
    CHECK(buchberger_self_check(basis));
    for (const auto& g : basis) CHECK(g.leading_coefficient().is_one());

    // Reversed, rescaled and padded with a combination: same ideal, same basis.
    std::vector<Polynomial> shuffled(i.generators().rbegin(), i.generators().rend());
    for (auto& g : shuffled) g = g.scaled(Scalar(r->field(), -3L));
    if (shuffled.size() > 1) shuffled.push_back(shuffled[0] * poly(r, "x + 1") + shuffled[1]);
    CHECK(reduced_groebner_basis(shuffled) == basis);
  }
}

TEST_CASE("serial and parallel kernels agree") {
  for (const Field field : {Field::rationals(), Field::prime(kDefaultPrime)}) {
    const RingPtr r = testing::ring({"x", "y", "z", "w"}, field);
    for (const Ideal& i : random_ideals(r, 23, 10)) {
      GbOptions serial, parallel;
      serial.kernel = GbKernel::Serial;
      parallel.kernel = GbKernel::Parallel;
      CHECK(reduced_groebner_basis(i.generators(), serial) == reduced_groebner_basis(i.generators(), parallel));
    }
  }
}

TEST_CASE("ideal membership and normal forms") {
  const RingPtr r = testing::ring({"x", "y", "z"});
  testing::RandomPolynomials gen(r, 99);
  for (const Ideal& i : random_ideals(r, 41, 8)) {
    for (const auto& g : i.generators()) CHECK(contains(i, g));
    for (int trial = 0; trial < 5; ++trial) {
      const Polynomial f = gen.next();
      const Polynomial nf = normal_form(f, i);
      CHECK(normal_form(nf, i) == nf);
      CHECK(contains(i, f - nf));
      Polynomial combo(r);
      for (const auto& g : i.generators()) combo += gen.next(2, 2, 3) * g;
      CHECK(contains(i, combo));
    }
  }
}

TEST_CASE("ideal operations on small examples") {
  const RingPtr r = testing::ring({"x", "y"});
  CHECK(equal(intersect(ideal(r, "x*y"), ideal(r, "x^2")), ideal(r, "x^2*y")));
  CHECK(equal(quotient(ideal(r, "x^2*y"), poly(r, "x")), ideal(r, "x*y")));
  CHECK(equal(saturate(ideal(r, "x^2*y, x*y^2"), poly(r, "x")), ideal(r, "y")));
  CHECK(equal(ideal_product(ideal(r, "x, y"), ideal(r, "x, y")), ideal(r, "x^2, x*y, y^2")));
  CHECK(ideal(r, "x, 1 - x").is_unit());
  CHECK(krull_dimension(ideal(r, "x, 1 - x")) == -1);

  const RingPtr t = testing::ring({"t", "x", "y"});
  const Ideal param = ideal(t, "x - t^2, y - t^3");
  CHECK(equal(eliminate(param, {0}), ideal(t, "y^2 - x^3")));
}

TEST_CASE("Hilbert series and lengths") {
  const RingPtr r = testing::ring({"x", "y"});
  CHECK(hilbert_series(ideal(r, "x*y"), {1, 1}).to_string() == "(1 + t)/(1 - t)");
  CHECK(hilbert_series(ideal(r, "x^2, y^2"), {1, 1}).total_length() == 4);
  CHECK(vector_space_dimension(ideal(r, "x^2 - 1, y")) == 2);
  CHECK(standard_monomials(ideal(r, "x^2, y")).size() == 2);
}

TEST_CASE("corpus agrees with the sympy oracle") {
  const auto& oracle = testing::frozen();
  for (const auto& name : testing::corpus_ideals()) {
    CAPTURE(name);
    const Ideal& i = testing::corpus().ideal(name);
    CHECK(krull_dimension(i) == oracle["krull_dimension"][name].get<int>());
    CHECK(equal(i, testing::ideal(i.ring(), oracle["groebner"][name].get<std::vector<std::string>>())));
    if (oracle["length"].contains(name))
      CHECK(vector_space_dimension(i) == oracle["length"][name].get<std::uint64_t>());
  }
}

TEST_CASE("budgets stop runaway computations") {
  const RingPtr r = testing::ring({"x", "y", "z", "w"});
  const Ideal i = ideal(r, "x*z - y^2, y*w - z^2, x*w - y*z");
  {
    ScopedBudget tight({.max_spairs = 1, .max_degree = 1000});
    CHECK_THROWS_AS(reduced_groebner_basis(i.generators()), BudgetExceeded);
  }
  CHECK_NOTHROW(reduced_groebner_basis(i.generators()));
}

TEST_CASE("syzygies, Fitting ideals and local freeness") {
  const RingPtr r = testing::ring({"x", "y"});
  const Ideal zero(r);
  const auto syz = syzygy_module(zero, 1, {{poly(r, "x")}, {poly(r, "y")}});
  REQUIRE(syz.size() == 1);
  CHECK(((syz[0][0] * poly(r, "x") + syz[0][1] * poly(r, "y")).is_zero()));

  const ModulePresentation free(ideal(r, "x*y"), 2);
  CHECK(locally_free_rank(free) == 2u);
  const ModulePresentation torsion(ideal(r, "x*y"), 1, {{poly(r, "x")}});
  CHECK_FALSE(locally_free_rank(torsion).has_value());
  CHECK(equal(fitting_ideal(torsion, 0), ideal(r, "x")));
}

TEST_CASE("minimal primes of tiny ideals") {
  const RingPtr r = testing::ring({"x", "y"});
  auto primes = minimal_primes(ideal(r, "x^2*y"));
  REQUIRE(primes.size() == 2);
  std::vector<std::string> texts;
  for (const auto& p : primes) texts.push_back(p.groebner_basis().front().to_string());
  std::sort(texts.begin(), texts.end());
  CHECK(texts == std::vector<std::string>{"x", "y"});
}
