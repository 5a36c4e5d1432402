#include "conelab/obstruction.hpp"

#include "../support.hpp"
#include "conelab/errors.hpp"
#include "conelab/normalcone.hpp"
#include "doctest.h"

using namespace conelab;
using testing::ideal;
using testing::poly;

namespace {

// [0 -> Omega] with the identity on Omega.
TwoTermComplexMap zero_to_omega(const EmbeddedChart& chart) {
  const RingPtr& r = chart.ambient();
  const std::size_t n = chart.ambient_dimension();
  const TwoTermComplex source(ModulePresentation(chart.ideal(), 0), ModulePresentation(chart.ideal(), n),
                              PolyMatrix(r, n, 0));
  return TwoTermComplexMap(source, conormal_complex(chart), PolyMatrix::identity(r, n),
                           PolyMatrix(r, chart.equation_count(), 0));
}

Point origin(const EmbeddedChart& chart) {
  return Point(chart.ambient_dimension(), Scalar::zero(chart.ambient()->field()));
}

}  // namespace

TEST_CASE("identity on the conormal complex is an obstruction theory") {
  for (const auto& name : testing::corpus_ideals()) {
    CAPTURE(name);
    const EmbeddedChart chart(testing::corpus().ideal(name));
    const auto h = obstruction_theory_criteria(chart, TwoTermComplexMap::identity(conormal_complex(chart)));
    CHECK(h.quasi_iso());
    CHECK(h.failures().empty());
  }
}

TEST_CASE("broken maps name the failing clause") {
  const RingPtr r = testing::ring({"x", "y"});
  const EmbeddedChart node(ideal(r, "x*y"));
  CHECK(obstruction_theory_criteria(node, zero_to_omega(node)).failures() == std::vector<std::string>{"h0 not iso"});

  const RingPtr q = testing::ring({"x"});
  const EmbeddedChart fat(ideal(q, "x^2"));
  CHECK(obstruction_theory_criteria(fat, zero_to_omega(fat)).failures() ==
        std::vector<std::string>{"h0 not iso", "h-1 not surjective"});

  // In characteristic 2 the differential of x^2 vanishes, so only h^-1 fails.
  const RingPtr f2 = testing::ring({"x"}, Field::prime(2));
  const EmbeddedChart fat2(ideal(f2, "x^2"));
  CHECK(obstruction_theory_criteria(fat2, zero_to_omega(fat2)).failures() ==
        std::vector<std::string>{"h-1 not surjective"});
}

TEST_CASE("chain maps must commute") {
  const RingPtr r = testing::ring({"x", "y"});
  const EmbeddedChart node(ideal(r, "x*y"));
  const TwoTermComplex cx = conormal_complex(node);
  PolyMatrix twice(r, 1, 1);
  twice(0, 0) = poly(r, "2");
  CHECK_THROWS_AS(TwoTermComplexMap(cx, cx, PolyMatrix::identity(r, 2), twice), DomainError);
}

TEST_CASE("perfect complexes") {
  const RingPtr r = testing::ring({"x", "y"});
  CHECK(is_perfect(conormal_complex(EmbeddedChart(ideal(r, "x*y")))));
  CHECK_FALSE(is_perfect(conormal_complex(EmbeddedChart(ideal(r, "x^2, x*y")))));
}

TEST_CASE("minimal embedding removes linear coordinates") {
  const RingPtr r = testing::ring({"x", "y"});
  const EmbeddedChart parabola(ideal(r, "y - x^2"));
  const MinimalEmbedding m = minimal_embedding(parabola, origin(parabola));
  CHECK(m.ring->nvars() == 1);
  CHECK(m.equations.empty());
  CHECK_FALSE(m.truncated);

  const EmbeddedChart double_point(ideal(r, "x^2, y"));
  const MinimalEmbedding d = minimal_embedding(double_point, origin(double_point));
  REQUIRE(d.equations.size() == 1);
  CHECK(d.equations[0].to_string() == "x^2");

  // y recurs after solving y = x*y + x^2: the substitution is a power series.
  const EmbeddedChart recurring(ideal(r, "y - x*y - x^3, x^2*y"));
  CHECK(minimal_embedding(recurring, origin(recurring), 8).truncated);
}

TEST_CASE("coarse obstruction spaces and tangent spaces match the oracle") {
  for (const auto& [name, expected] : testing::frozen()["point"].items()) {
    CAPTURE(name);
    const EmbeddedChart chart(testing::corpus().ideal(name));
    const Point& p = testing::corpus().point(expected["point"]);
    const ObstructionSpace ob = point_obstruction_space(chart, p);
    const TangentSpaces t = higher_tangent_spaces(chart, p);
    CHECK(ob.dimension == expected["coarse_dimension_minimal"].get<std::size_t>());
    CHECK(ob.minimal_generators.size() == ob.dimension);
    CHECK(t.t0 == expected["tangent_t0"].get<std::size_t>());
    CHECK(t.t1 == ob.dimension);
  }
}

TEST_CASE("obstruction cones of hypersurfaces fill the space") {
  const RingPtr r = testing::ring({"x", "y"});
  const EmbeddedChart node(ideal(r, "x*y"));
  CHECK(point_obstruction_cone(node, origin(node)).is_zero());
}

TEST_CASE("Artin algebras and small extensions") {
  const RingPtr r = testing::ring({"x", "y"});
  const ArtinAlgebra a(ideal(r, "x^2, y^2"));
  CHECK(a.dimension() == 4);
  CHECK(a.multiply(poly(r, "x + y"), poly(r, "x + y")) == poly(r, "2*x*y"));
  CHECK_THROWS_AS(ArtinAlgebra(ideal(r, "x*y")), DomainError);
  CHECK_THROWS_AS(ArtinAlgebra(ideal(r, "x - 1, y")), DomainError);

  const SmallExtension ext(ArtinAlgebra(ideal(r, "x^3, y")), ArtinAlgebra(ideal(r, "x^2, y")));
  CHECK(ext.kernel_basis().size() == 1);
  CHECK_THROWS_AS(SmallExtension(ArtinAlgebra(ideal(r, "x^3, y")), ArtinAlgebra(ideal(r, "x, y"))), DomainError);
}

TEST_CASE("small extension obstruction for the node and the double line") {
  const RingPtr r = testing::ring({"x", "y"});
  for (const char* eqs : {"x*y", "x^2"}) {
    CAPTURE(eqs);
    const EmbeddedChart chart(ideal(r, eqs));
    const auto ob = small_extension_obstruction(chart, origin(chart), 3);
    CHECK(ob.injective);
    CHECK(ob.spans_kernel);
    CHECK(ob.extension.kernel_basis().size() == 1);
  }
  const EmbeddedChart node(ideal(r, "x*y"));
  try {
    small_extension_obstruction(node, origin(node), 2);
    FAIL("n = 2 should be rejected");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("smallest valid n is 3") != std::string::npos);
  }
}
