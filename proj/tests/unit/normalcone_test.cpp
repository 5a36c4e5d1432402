#include "conelab/normalcone.hpp"

#include "../support.hpp"
#include "conelab/errors.hpp"
#include "doctest.h"

using namespace conelab;
using testing::ideal;
using testing::poly;

TEST_CASE("normal cones match the sympy oracle") {
  const auto& oracle = testing::frozen()["normal_cone"];
  for (const auto& [name, gb] : oracle.items()) {
    CAPTURE(name);
    const EmbeddedChart chart(testing::corpus().ideal(name));
    const ConePresentation cone = normal_cone(chart);
    CHECK(equal(cone.relations(), ideal(cone.ring(), gb.get<std::vector<std::string>>())));
  }
}

TEST_CASE("normal cones are pure of ambient dimension across the corpus") {
  for (const auto& name : testing::corpus_ideals()) {
    CAPTURE(name);
    const EmbeddedChart chart(testing::corpus().ideal(name));
    CHECK(cone_dimension(normal_cone(chart)) == static_cast<int>(chart.ambient_dimension()));
  }
}

TEST_CASE("normal cone sits inside the normal sheaf") {
  for (const auto& name : testing::corpus_ideals()) {
    CAPTURE(name);
    const EmbeddedChart chart(testing::corpus().ideal(name));
    const ConePresentation c = normal_cone(chart), n = normal_sheaf(chart);
    REQUIRE(c.ring()->compatible(*n.ring()));
    CHECK(contains(c.relations(), transfer(n.relations(), c.ring())));
    CHECK(same_cone(abelian_hull(c).hull, n));
  }
}

TEST_CASE("lci detection follows the hand labels") {
  for (const auto& entry : testing::manifest()["charts"]) {
    const std::string name = entry["ideal"];
    CAPTURE(name);
    CHECK(is_lci(EmbeddedChart(testing::corpus().ideal(name))).lci() == entry["lci"].get<bool>());
  }
  const RingPtr r = testing::ring({"x", "y"});
  const LciReport node = is_lci(EmbeddedChart(ideal(r, "x*y")));
  CHECK(node.summary() == "C = N; N locally free");
  CHECK(node.rank == 1u);
  CHECK(is_lci(EmbeddedChart(ideal(r, "x^2, x*y"))).summary() == "N not locally free");
}

TEST_CASE("Rees relations contain the Koszul relations") {
  const RingPtr r = testing::ring({"x", "y"});
  const EmbeddedChart chart(ideal(r, "x^2, x*y"));
  const Ideal rees = rees_ideal(chart);
  CHECK(contains(rees, poly(rees.ring(), "y*u1 - x*u2")));
  CHECK_FALSE(contains(rees, poly(rees.ring(), "x^2")));
}

TEST_CASE("conormal complex uses the Jacobian transpose") {
  const RingPtr r = testing::ring({"x", "y"});
  const EmbeddedChart chart(ideal(r, "y^2 - x^3"));
  const TwoTermComplex cx = conormal_complex(chart);
  CHECK(cx.differential().rows() == 2);
  CHECK(cx.differential().cols() == 1);
  CHECK(cx.differential()(0, 0) == poly(r, "-3*x^2"));
  CHECK(cx.differential()(1, 0) == poly(r, "2*y"));
}

TEST_CASE("tangent cones match the oracle") {
  const auto& oracle = testing::frozen()["tangent_cone"];
  for (const auto& [name, gens] : oracle.items()) {
    CAPTURE(name);
    const EmbeddedChart chart(testing::corpus().ideal(name));
    const Point origin(chart.ambient_dimension(), Scalar::zero(chart.ambient()->field()));
    CHECK(equal(tangent_cone_at_point(chart, origin), ideal(chart.ambient(), gens.get<std::vector<std::string>>())));
  }
  const RingPtr r = testing::ring({"x", "y"});
  const Field q = r->field();
  // Away from the node the nodal cubic is smooth: a line.
  const Ideal at = tangent_cone_at_point(EmbeddedChart(ideal(r, "y^2 - x^2 - x^3")), {Scalar(q, -1L), Scalar(q, 0L)});
  CHECK(equal(at, ideal(r, "x")));
}

TEST_CASE("bundle-action, product and sequence checks over the corpus") {
  for (const auto& name : testing::corpus_ideals()) {
    CAPTURE(name);
    const EmbeddedChart chart(testing::corpus().ideal(name));
    CHECK(tm_invariance_check(chart));
    CHECK(lonc_sequence_check(chart, 1, {Polynomial(chart.ambient())}));
  }
  const RingPtr r = testing::ring({"x", "y"});
  CHECK(product_normal_cone_check(EmbeddedChart(ideal(r, "x*y")), EmbeddedChart(ideal(r, "x^2, y"))));
}

TEST_CASE("two embeddings of one curve") {
  const RingPtr line = testing::ring({"t"});
  const RingPtr plane = testing::ring({"x", "y"});
  const EmbeddedChart first(ideal(line, ""));
  const EmbeddedChart second(ideal(plane, "y - x^2"));
  const auto c = double_embedding_compare(first, second, {poly(plane, "x")}, {poly(line, "t"), poly(line, "t^2")});
  CHECK(c.pass());
  CHECK_THROWS_AS(double_embedding_compare(first, second, {poly(plane, "y")}, {poly(line, "t"), poly(line, "t^2")}),
                  DomainError);
}

TEST_CASE("strict mode flags impure cones") {
  set_strict_mode(true);
  const RingPtr r = testing::ring({"x", "y"});
  CHECK_NOTHROW(normal_cone(EmbeddedChart(ideal(r, "x^2, x*y"))));
  set_strict_mode(false);
  CHECK_FALSE(strict_mode());
}
