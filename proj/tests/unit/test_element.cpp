#include <doctest.h>

#include "fixtures.hpp"
#include "lpa/error.hpp"
#include "lpa/element.hpp"
#include "random_elements.hpp"

using namespace lpa;
using namespace lpa::testing;

namespace {

Element P(const GraphPtr& g, const char* text) { return parse_element(g, text); }

}  // namespace

TEST_CASE("parsing") {
  auto g = r1();
  auto v = P(g, "v");
  CHECK(v == Element::vertex(g, g->vertex("v")));
  CHECK(to_string(v) == "v");

  auto x = P(g, "2*e + e*'");
  CHECK(x.size() == 2);
  CHECK(x == 2 * Element::edge(g, g->edge("e")) + Element::ghost(g, g->edge("e")));

  CHECK_THROWS_AS(P(l2(), "a.a"), Error);
  CHECK_THROWS_AS(P(g, "q"), Error);
  CHECK_THROWS_AS(P(g, "v*'"), Error);
  CHECK_THROWS_AS(P(g, "2 *"), Error);
  CHECK(P(g, "0").is_zero());
  CHECK(P(g, "-1/2*e + 1/2*e").is_zero());
  CHECK(P(r2(), "3") == 3 * Element::unit(r2()));
}

TEST_CASE("serialization round trips") {
  for (const auto& [name, g] : all_fixtures()) {
    RandomElements gen(g, 11);
    for (int i = 0; i < 30; ++i) {
      Element x = gen.element();
      INFO(name, ": ", to_string(x));
      CHECK(parse_element(g, to_string(x)) == x);
    }
  }
}

TEST_CASE("monomial products") {
  auto g = r1();
  CHECK(P(g, "e*'") * P(g, "e") == P(g, "v"));
  CHECK(P(g, "e") * P(g, "e*'") == P(g, "v"));

  auto r = r2();
  CHECK((P(r, "e*'") * P(r, "f")).is_zero());
  CHECK(P(r, "e.e*'") == P(r, "v") - P(r, "f.f*'"));
  CHECK((P(r, "e.e*' + f.f*' - v")).is_zero());
  CHECK(P(r, "v + e") * P(r, "f") == P(r, "f + e.f"));

  CHECK(P(g, "v") * P(g, "v") == P(g, "v"));
  auto l = l2();
  CHECK((P(l, "u") * P(l, "v")).is_zero());
}

TEST_CASE("normal form contains no reducible monomials") {
  for (const auto& [name, g] : all_fixtures()) {
    RandomElements gen(g, 3);
    for (int i = 0; i < 50; ++i) {
      Element x = gen.element(4, 3) * gen.element(2, 2);
      for (const auto& [m, c] : x.terms()) {
        CHECK_FALSE(m.reducible(*g));
        CHECK(c != 0);
      }
    }
  }
}

TEST_CASE("grading") {
  auto g = r1();
  auto parts = graded_components(P(g, "v + e"));
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(0) == P(g, "v"));
  CHECK(parts.at(1) == P(g, "e"));
  CHECK(graded_components(P(g, "e.e")).size() == 1);
  CHECK(graded_components(Element(g)).empty());

  CHECK(gdeg(P(g, "v")) == 0);
  CHECK(gdeg(P(g, "e*'")) == 1);
  CHECK(gdeg(P(g, "e.e*'.e*'")) == 1);
  CHECK(P(g, "e.e*'.e*'.e*'.e") == P(g, "e*'"));
  CHECK_THROWS_AS(gdeg(Element(g)), Error);
  CHECK(is_homogeneous(P(g, "e + 2*e.e.e*'")));
  CHECK_FALSE(is_homogeneous(P(g, "v + e")));
}

TEST_CASE("mixed graphs are rejected") {
  CHECK_THROWS_AS(P(r1(), "v") + P(r2(), "v"), Error);
  CHECK_THROWS_AS(P(r1(), "v") * P(r2(), "v"), Error);
}

TEST_CASE("scalars") {
  CHECK(to_string(parse_scalar("4/6")) == "2/3");
  CHECK(to_string(parse_scalar("-3")) == "-3");
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
  CHECK_THROWS_AS(parse_scalar("x"), Error);
}
