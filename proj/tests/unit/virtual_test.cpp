#include "conelab/virtual.hpp"

#include "../support.hpp"
#include "conelab/errors.hpp"
#include "conelab/normalcone.hpp"
#include "doctest.h"

using namespace conelab;
using testing::ideal;
using testing::poly;

TEST_CASE("virtual dimension is rank difference") {
  const RingPtr r = testing::ring({"x", "y"});
  const GlobalResolution node = GlobalResolution::tautological(EmbeddedChart(ideal(r, "x*y")));
  CHECK(virtual_dimension(node) == 1);
  CHECK(virtual_dimension(node.padded(3)) == 1);
  CHECK(node.adapted());
  CHECK(node.padded().adapted());
  CHECK(node.padded(2).padding() == 2);
}

TEST_CASE("cone in the bundle has dimension rk F0") {
  const RingPtr r = testing::ring({"x", "y"});
  for (const char* eqs : {"x*y", "x^2, x*y", "x^2, y"}) {
    CAPTURE(eqs);
    const GlobalResolution res = GlobalResolution::tautological(EmbeddedChart(ideal(r, eqs)));
    CHECK(cone_dimension(cone_in_bundle(res)) == static_cast<int>(res.rank_zero()));
    CHECK(cone_dimension(cone_in_bundle(res.padded())) == static_cast<int>(res.rank_zero()) + 1);
  }
}

TEST_CASE("resolutions must be obstruction theories") {
  const RingPtr r = testing::ring({"x", "y"});
  const EmbeddedChart node(ideal(r, "x*y"));
  CHECK_THROWS_AS(GlobalResolution(node, PolyMatrix(r, 2, 0), PolyMatrix::identity(r, 2), PolyMatrix(r, 1, 0)),
                  DomainError);
  CHECK_THROWS_AS(GlobalResolution::tautological(node).reordered({1}), DomainError);
}

TEST_CASE("lci virtual degrees are lengths") {
  const RingPtr r = testing::ring({"x", "y"});
  CHECK(virtual_degree_lci(EmbeddedChart(ideal(r, "x^2 - 1, y"))) == 2);
  CHECK(virtual_degree_lci(EmbeddedChart(ideal(r, "x^2, y"))) == 2);
  CHECK(virtual_degree_lci(EmbeddedChart(ideal(r, "x^3 - x, y - x^2"))) == 3);
  CHECK_THROWS_AS(virtual_degree_lci(EmbeddedChart(ideal(r, "x^2, x*y, y^2"))), DomainError);
  CHECK_THROWS_AS(virtual_degree_lci(EmbeddedChart(ideal(r, "x*y"))), DomainError);
}

TEST_CASE("Euler class degrees in a Chow ring") {
  const RingPtr h = testing::ring({"h"});
  const ChowRingPresentation line(ideal(h, "h^2"), {1}, 1, {{poly(h, "h"), mpq_class(1)}});
  CHECK(virtual_degree_euler(line, poly(h, "1 + 2*h"), 1) == 2);
  CHECK_THROWS_AS(virtual_degree_euler(line, poly(h, "1 + 2*h"), 2), DomainError);

  // P^2 with c(O(1)^3) = (1+h)^3: c_2 = 3h^2.
  const ChowRingPresentation plane(ideal(h, "h^3"), {1}, 2, {{poly(h, "h^2"), mpq_class(1)}});
  CHECK(virtual_degree_euler(plane, poly(h, "(1 + h)^3"), 2) == 3);

  // Functional given on a non-standard spanning element.
  const RingPtr ab = testing::ring({"a", "b"});
  const ChowRingPresentation p1p1(ideal(ab, "a^2, b^2"), {1, 1}, 2, {{poly(ab, "2*a*b"), mpq_class(2)}});
  CHECK(p1p1.degree(poly(ab, "a*b")) == 1);
  CHECK(virtual_degree_euler(p1p1, poly(ab, "(1 + a)*(1 + b)"), 2) == 1);
}

TEST_CASE("Koszul Tor of the zero section in a trivial line bundle") {
  const RingPtr r = testing::ring({"x"});
  const EmbeddedChart line(ideal(r, ""));
  // Line with F^-1 = R mapping by zero: the cone is the zero section of F_1.
  const GlobalResolution res(line, PolyMatrix(r, 1, 1), PolyMatrix::identity(r, 1), PolyMatrix(r, 0, 1));
  const auto tor = virtual_structure_sheaf_tor(res);
  REQUIRE(tor.size() == 2);
  CHECK(tor[0].series.to_string() == "1/(1 - t)");
  CHECK(tor[1].series == tor[0].series);
}

TEST_CASE("Koszul Euler characteristic equals the lci degree") {
  const RingPtr r = testing::ring({"x", "y"});
  for (const char* eqs : {"x^2 - 1, y", "x^2, y", "x^3 - x, y - x^2"}) {
    CAPTURE(eqs);
    const EmbeddedChart chart(ideal(r, eqs));
    const GlobalResolution res = GlobalResolution::tautological(chart);
    const auto tor = virtual_structure_sheaf_tor(res);
    CHECK(koszul_euler_characteristic(tor) == virtual_degree_lci(chart).get_num().get_si());
    for (std::size_t i = 1; i < tor.size(); ++i) CHECK(tor[i].length == 0);
  }
}

TEST_CASE("virtual degree does not depend on the global resolution") {
  const RingPtr r = testing::ring({"x", "y"});
  for (const char* eqs : {"x^2 - 1, y", "x^2, y", "x^3 - x, y - x^2"}) {
    CAPTURE(eqs);
    const GlobalResolution base = GlobalResolution::tautological(EmbeddedChart(ideal(r, eqs)));
    CHECK(global_resolution_independence_check(base, base.padded()));
    CHECK(global_resolution_independence_check(base, base.reordered({1, 0})));
    CHECK(global_resolution_independence_check(base.padded(2), base.reordered({1, 0}).padded()));
  }
  const GlobalResolution curve = GlobalResolution::tautological(EmbeddedChart(ideal(r, "x*y")));
  CHECK_THROWS_AS(compare_global_resolutions(curve, curve.padded()), DomainError);
}
