#include "conelab/cones.hpp"

#include "../support.hpp"
#include "conelab/errors.hpp"
#include "doctest.h"

using namespace conelab;
using testing::ideal;
using testing::poly;

TEST_CASE("chart Jacobian and membership") {
  const RingPtr r = testing::ring({"x", "y"});
  const EmbeddedChart node(ideal(r, "x*y"));
  CHECK(node.jacobian()(0, 0) == poly(r, "y"));
  CHECK(node.jacobian()(0, 1) == poly(r, "x"));
  const Field q = r->field();
  CHECK(node.contains({Scalar(q, 0L), Scalar(q, 5L)}));
  CHECK_FALSE(node.contains({Scalar(q, 1L), Scalar(q, 5L)}));
}

TEST_CASE("chart products rename clashing variables") {
  const RingPtr r = testing::ring({"x", "y"});
  const EmbeddedChart node(ideal(r, "x*y"));
  const ChartProduct p = chart_product(node, node);
  CHECK(p.chart.ambient_dimension() == 4);
  CHECK(p.chart.equation_count() == 2);
  CHECK(p.left_vars == std::vector<std::size_t>{0, 1});
  CHECK(p.right_vars == std::vector<std::size_t>{2, 3});
  CHECK(krull_dimension(p.chart.ideal()) == 2);
}

TEST_CASE("trivial bundles are vector bundles of the right rank") {
  const RingPtr r = testing::ring({"x", "y"});
  const EmbeddedChart node(ideal(r, "x*y"));
  for (std::size_t rank = 0; rank < 3; ++rank) {
    const ConePresentation e = trivial_bundle(node, rank);
    CHECK(cone_dimension(e) == 1 + static_cast<int>(rank));
    const BundleReport report = vector_bundle_report(e);
    CHECK(report.is_bundle);
    CHECK(report.rank == rank);
  }
}

TEST_CASE("abelian cones and hulls") {
  const RingPtr r = testing::ring({"x", "y"});
  const EmbeddedChart node(ideal(r, "x*y"));
  // Sym of the torsion module R/(x): fiber supported on x = 0.
  const ConePresentation torsion = abelian_cone(ModulePresentation(node.ideal(), 1, {{poly(r, "x")}}));
  CHECK(cone_dimension(torsion) == 2);
  CHECK_FALSE(is_vector_bundle(torsion));
  const HullResult hull = abelian_hull(torsion);
  CHECK_FALSE(hull.is_strict);
  CHECK(same_cone(hull.hull, torsion));

  // y^2 = 0 in the fiber of a line bundle is not abelian; its hull is the bundle.
  const ConePresentation thin = ConePresentation::make(node, 1, {poly(ConePresentation::fiber_ring(node, 1), "u1^2")});
  const HullResult thin_hull = abelian_hull(thin);
  CHECK(thin_hull.is_strict);
  CHECK(same_cone(thin_hull.hull, trivial_bundle(node, 1)));
}

TEST_CASE("products of cones add fiber dimensions") {
  const RingPtr r = testing::ring({"x", "y"});
  const EmbeddedChart line(ideal(r, "y"));
  const ConePresentation a = trivial_bundle(line, 1), b = trivial_bundle(line, 2);
  CHECK(cone_dimension(cone_product(a, b)) == 4);
  CHECK(cone_product(a, b).fiber_rank() == 3);
}

TEST_CASE("bundle action invariance") {
  const RingPtr r = testing::ring({"x", "y"});
  const EmbeddedChart node(ideal(r, "x*y"));
  const RingPtr cr = ConePresentation::fiber_ring(node, 1);
  const ConePresentation cone = ConePresentation::make(node, 1, {poly(cr, "x*u1")});
  PolyMatrix by_y(r, 1, 1), by_one(r, 1, 1);
  by_y(0, 0) = poly(r, "y");
  by_one(0, 0) = poly(r, "1");
  CHECK(e_cone_invariance(cone, BundleAction{by_y}));
  CHECK_FALSE(e_cone_invariance(cone, BundleAction{by_one}));
}

TEST_CASE("split exact sequence of bundles") {
  const RingPtr r = testing::ring({"x", "y"});
  const EmbeddedChart node(ideal(r, "x*y"));
  const ConePresentation e = trivial_bundle(node, 1), c = trivial_bundle(node, 2), d = trivial_bundle(node, 1);
  const RingPtr er = e.ring(), cr = c.ring();
  // i: E -> C, (v) -> (v, 0), pulled back: u1 -> u1, u2 -> 0. pr: C -> D, u1 -> u2.
  const ConeMap i{{poly(er, "u1"), Polynomial(er)}};
  const ConeMap pr{{poly(cr, "u2")}};
  CHECK(check_exact_sequence(e, c, d, i, pr).exact());
  // Projecting onto the same factor that E hits breaks exactness.
  const ConeMap bad{{poly(cr, "u1")}};
  CHECK_FALSE(check_exact_sequence(e, c, d, i, bad).exact());
}

TEST_CASE("cone rings must extend the chart ring") {
  const RingPtr r = testing::ring({"x", "y"});
  const EmbeddedChart node(ideal(r, "x*y"));
  CHECK_THROWS_AS(ConePresentation(node, testing::ring({"a", "b", "u1"}), {}), RingMismatch);
}
