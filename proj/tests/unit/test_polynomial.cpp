#include <doctest.h>

#include <random>

#include "lpa/error.hpp"
#include "lpa/polynomial.hpp"
#include "oracles.hpp"

using namespace lpa;
using namespace lpa::testing;

namespace {

Polynomial poly(std::initializer_list<int> ascending) {
  std::vector<Scalar> c;
  for (int x : ascending) c.emplace_back(x);
  return Polynomial(c);
}

}  // namespace

TEST_CASE("basic polynomial arithmetic") {
  auto p = poly({-1, 0, 1});
  CHECK(p.degree() == 2);
  CHECK(p.is_monic());
  CHECK(poly({0, 0}).is_zero());
  CHECK(poly({}).degree() == -1);
  CHECK(poly({1, 1}) * poly({-1, 1}) == p);
  CHECK(poly({0, 0, 2, 4}).without_x_factors() == poly({2, 4}));
  CHECK(poly({2, 4}).monic() == Polynomial({Scalar(1, 2), Scalar(1)}));

  auto [q, r] = p.divmod(poly({1, 1}));
  CHECK(q == poly({-1, 1}));
  CHECK(r.is_zero());
  CHECK_THROWS_AS(p.divmod(Polynomial()), Error);
  CHECK(p.to_string() == "x^2 - 1");
}

TEST_CASE("divisibility") {
  CHECK(poly({1, 1}).divides(poly({-1, 0, 1})));
  CHECK_FALSE(poly({-1, 0, 1}).divides(poly({1, 1})));
  CHECK(Polynomial().divides(Polynomial()));
  CHECK_FALSE(Polynomial().divides(poly({1})));
  CHECK(poly({3}).divides(poly({1, 5, 7})));
}

TEST_CASE("gcd against the long division oracle") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-3, 3), deg(0, 3);
  auto random = [&] {
    std::vector<Scalar> v(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : v) x = c(rng);
    return Polynomial(v);
  };
  for (int i = 0; i < 300; ++i) {
    Polynomial common = random(), a = random() * common, b = random() * common;
    Polynomial d = gcd(a, b);
    if (a.is_zero() && b.is_zero()) {
      CHECK(d.is_zero());
      continue;
    }
    CHECK(d.is_monic());
    CHECK(divides_oracle(d.coeffs(), a.coeffs()));
    CHECK(divides_oracle(d.coeffs(), b.coeffs()));
    if (!common.is_zero()) CHECK(divides_oracle(common.coeffs(), d.coeffs()));
    CHECK(d.divides(a) == divides_oracle(d.coeffs(), a.coeffs()));
    CHECK(a.divides(b) == divides_oracle(a.coeffs(), b.coeffs()));
  }
}
