#include "baric/bernstein.hpp"
#include "baric/constructions.hpp"
#include "baric/errors.hpp"
#include "baric/symbolic.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace baric;

TEST_CASE("multivariate polynomial arithmetic") {
  auto vs = fresh_vars("p", 3);
  MultiPoly a = MultiPoly::var(vs[0]), b = MultiPoly::var(vs[1]), c = MultiPoly::var(vs[2]);
  MultiPoly s = a + b;
  CHECK(s * s == a * a + Scalar(2) * a * b + b * b);
  CHECK((a - a).is_zero());
  CHECK(pow(s, 3).size() == 4);
  CHECK(exact_div(s * (a - c) * b, a - c) == s * b);
  CHECK_THROWS_AS(exact_div(a * a + 1, a), InvariantError);
  CHECK((s * s).evaluate({{vs[0], 2}, {vs[1], -1}}) == 1);
  CHECK(s.substitute({{vs[0], 3}}) == b + 3);
  CHECK(to_string(MultiPoly(Scalar(-1, 2))) == "-1/2");
}

TEST_CASE("generic elements") {
  auto A = example_not_train();
  auto g = generic_element(A, "t");
  CHECK(g.vars.size() == 3);
  auto gv = generic_element(A, "t", std::vector<Vector>{{0, 0, 1}});
  CHECK(gv.coords[0].is_zero());
  CHECK(gv.coords[2] == MultiPoly::var(gv.vars[0]));
  // x = t1 u + t2 v: x^2 = 2 t1 t2 u, x^3 = 2 t1 t2^2 u
  auto x = generic_element(A, "t", std::vector<Vector>{{0, 1, 0}, {0, 0, 1}});
  auto t1 = MultiPoly::var(x.vars[0]), t2 = MultiPoly::var(x.vars[1]);
  auto pw = generic_principal_powers(x, 3);
  CHECK(pw[1].coords[1] == Scalar(2) * t1 * t2);
  CHECK(pw[1].coords[2].is_zero());
  CHECK(pw[2].coords[1] == Scalar(2) * t1 * t2 * t2);
}

TEST_CASE("identity checking") {
  CHECK(is_bernstein(example_not_train()).holds);
  auto bad = is_bernstein(fixtures::broken_half());
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.witness_elements.size() == 1);
  auto w = bad.witness_elements[0];
  auto w2 = w * w;
  CHECK(w2 * w2 != weight_of(w) * weight_of(w) * w2);
  CHECK_FALSE(is_bernstein(fixtures::broken_uv()).holds);
  CHECK(jordan_identity(constant_algebra()).holds);
  CHECK_FALSE(jordan_identity(example_not_train()).holds);

  auto A = elementary_algebra(3);
  auto r = check_identity(A, 1, [](const std::vector<SymbolicElement>& xs) {
    return xs[0] * xs[0] - weight_of(xs[0]) * xs[0];
  });
  CHECK(r.holds);
  auto r2 = check_identity(example_not_train(), 1, [](const std::vector<SymbolicElement>& xs) {
    return xs[0] * xs[0] - weight_of(xs[0]) * xs[0];
  });
  REQUIRE_FALSE(r2.holds);
  auto x = r2.witness_elements[0];
  CHECK(x * x != weight_of(x) * x);
}

TEST_CASE("generic degree") {
  auto d1 = generic_degree(elementary_algebra(3));
  CHECK(d1.degree == 1);
  CHECK(d1.certified);
  auto d2 = generic_degree(constant_algebra());
  CHECK(d2.degree == 2);
  CHECK(d2.certified);
  auto d3 = generic_degree(example_not_train());
  CHECK(d3.degree == 3);
  CHECK(d3.certified);
  auto d4 = generic_degree(fixtures::nuclear3());
  CHECK(d4.certified);
}

TEST_CASE("symbolic rank") {
  auto vs = fresh_vars("r", 2);
  MultiPoly a = MultiPoly::var(vs[0]), b = MultiPoly::var(vs[1]);
  CHECK(symbolic_rank({{a, b}, {a * a, a * b}}) == 1);
  CHECK(symbolic_rank({{a, b}, {b, a}}) == 2);
  CHECK(symbolic_rank({{0, 0}, {0, 0}}) == 0);
}
