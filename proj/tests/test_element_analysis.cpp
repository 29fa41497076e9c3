#include "baric/element_analysis.hpp"

#include "baric/bernstein.hpp"
#include "baric/constructions.hpp"
#include "baric/errors.hpp"
#include "baric/symbolic.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace baric;

namespace {

UnivariatePoly poly(std::vector<Scalar> c) {
  for (auto& x : c) x.canonicalize();
  return UnivariatePoly(std::move(c));
}

Scalar q(long n, long d) {
  Scalar s(n, d);
  s.canonicalize();
  return s;
}

}  // namespace

TEST_CASE("element a = e + u + v of the non-train example") {
  auto A = example_not_train();
  Element a(A, {1, 1, 1});
  auto r = analyze_element(a);
  CHECK(r.degree == 3);
  CHECK(r.minimal_poly == poly({0, 0, q(3, 2), q(-5, 2), 1}));
  CHECK(r.minimal_poly == train_form(3, 1) * (UnivariatePoly::X() - UnivariatePoly::constant(q(3, 2))));
  CHECK(to_string(r.minimal_poly) == "X^4 - 5/2 X^3 + 3/2 X^2");
  REQUIRE(r.power_basis.size() == 3);
  CHECK(r.power_basis[1] == Element(A, {1, 3, 0}));
  CHECK(r.power_basis[2] == Element(A, {1, 5, 0}));
  CHECK(is_independent(coords_of(r.power_basis), 3));
  CHECK_FALSE(r.right_nilpotency_index);
  CHECK(minimal_poly_form_check(r));
  CHECK(poly_eval(a, r.minimal_poly).is_zero());

  auto t = train_element_rank(a);
  CHECK_FALSE(t.rank);
  CHECK(t.searched_up_to == 5);
  for (unsigned k = 3; k <= 5; ++k) CHECK_FALSE(f_k(a, k).is_zero());
}

TEST_CASE("degenerate elements") {
  auto A = example_not_train();
  auto e = analyze_element(Element::basis(A, "e"));
  CHECK(e.degree == 1);
  CHECK(e.minimal_poly == poly({0, -1, 1}));
  CHECK(minimal_poly_form_check(e));
  auto z = analyze_element(Element::zero(A));
  CHECK(z.degree == 0);
  CHECK(z.minimal_poly == UnivariatePoly::X());
  CHECK(z.right_nilpotency_index == 1u);
  CHECK(minimal_poly_form_check(z));
  auto u = analyze_element(Element::basis(A, "u"));
  CHECK(u.degree == 1);
  CHECK(u.minimal_poly == poly({0, 0, 1}));
  CHECK(u.right_nilpotency_index == 2u);
}

TEST_CASE("elementary and Jordan elements") {
  auto E = elementary_algebra(3);
  auto r = analyze_element(Element(E, {1, 2, -1, 3}));
  CHECK(r.minimal_poly == poly({0, -1, 1}));
  CHECK(minimal_poly_form_check(r));

  auto C = constant_algebra();
  Element a(C, {1, 1});
  CHECK(f_k(a, 3).is_zero());
  auto ra = analyze_element(a);
  CHECK(ra.degree == 2);
  CHECK(ra.minimal_poly == train_form(3, 1));
  CHECK(train_element_rank(a).rank == 3u);
}

TEST_CASE("three-dimensional family") {
  for (Scalar alpha : {Scalar(0), Scalar(1), q(1, 3), q(3, 2), Scalar(5), q(-7, 4)}) {
    INFO(to_string(alpha));
    auto A = three_dim_alpha(alpha);
    Element x(A, {1, 2, 1});
    auto r = analyze_element(x);
    CHECK(r.degree == 3);
    auto expected = train_form(3, 1) * (UnivariatePoly::X() - UnivariatePoly::constant(alpha - 1));
    CHECK(r.minimal_poly == expected);
    CHECK(minimal_poly_form_check(r));
    auto s = singly_generated_subalgebra(x);
    CHECK(s.table->same_table(*A));
    auto t = train_element_rank(x);
    CHECK(t.rank.has_value() == (alpha == q(3, 2)));
    if (t.rank) CHECK(*t.rank == 4u);
  }
  auto A1 = three_dim_alpha(1);
  auto v = Element::basis(A1, "v1"), u = Element::basis(A1, "u1");
  CHECK((v * v).is_zero());
  CHECK(u * v == q(-1, 2) * u);
}

TEST_CASE("free singly generated truncations") {
  for (std::size_t n = 4; n <= 8; ++n) {
    INFO("n = " << n);
    auto A = free_single_truncated(n);
    Element a(A, unit_vector(n, 0));
    a = a + Scalar(2) * Element::basis(A, "u1") + Element::basis(A, "v1");
    auto r = analyze_element(a);
    CHECK(r.degree == n);
    CHECK(r.minimal_poly == train_form(static_cast<unsigned>(n + 1), 1));
    CHECK(train_element_rank(a).rank == static_cast<unsigned>(n + 1));
    auto s = singly_generated_subalgebra(a);
    CHECK(s.table->same_table(*A));
    for (std::size_t i = 0; i < n; ++i) CHECK(s.basis[i] == unit_vector(n, i));
  }
  // With a nonzero tail the round trip still recovers the table.
  std::vector<Scalar> betas{q(1, 2), 0, -3, 1};
  auto B = free_single_truncated(6, betas);
  Element b(B, {1, 2, 0, 0, 0, 1});
  CHECK(singly_generated_subalgebra(b).table->same_table(*B));
  CHECK_FALSE(train_element_rank(b).rank);
  CHECK(minimal_poly_form_check(analyze_element(b)));
}

TEST_CASE("singly generated subalgebra of an idempotent and bad weights") {
  auto A = example_not_train();
  auto s = singly_generated_subalgebra(Element::basis(A, "e"));
  CHECK(s.table->dim() == 1);
  CHECK_THROWS_AS(singly_generated_subalgebra(Element(A, {2, 0, 1})), InputError);
}

TEST_CASE("from-associative element with vanishing cubes") {
  // C = t K[t]/(t^4), S = K t.
  AssociativeTable c;
  c.labels = {"t", "t2", "t3"};
  c.products[{0, 0}] = {0, 1, 0};
  c.products[{0, 1}] = {0, 0, 1};
  c.products[{1, 0}] = {0, 0, 1};
  auto A = from_associative(c, {{1, 0, 0}}, {"t"});
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    Element t(A, fixtures::random_vector(rng, A->dim()));
    CHECK(f_k(t, 4).is_zero());
  }
}

TEST_CASE("randomized minimal polynomial forms across the catalog") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (const auto& A : fixtures::catalog()) {
    auto deg = generic_degree(A);
    for (int i = 0; i < 20; ++i) {
      Element a(A, fixtures::random_vector(rng, A->dim()));
      auto r = analyze_element(a);
      INFO(A->name() << " " << to_string(a));
      // The case split is derived through alg(a) for a of nonzero weight.
      if (weight_of(a) != 0) CHECK(minimal_poly_form_check(r));
      CHECK(r.degree <= deg.degree);
      if (r.minimal_poly.degree() >= 3) CHECK(r.minimal_poly.coeff(1) == 0);
      CHECK(poly_eval(a, r.minimal_poly).is_zero());
      ++checked;
    }
  }
  CHECK(checked >= 200);
}

TEST_CASE("weight-zero elements can leave the case split") {
  // a = u + 2v: a^2 = 4u, a^3 = 8u, so p_a = X^3 - 2X^2 although w(a) = 0.
  auto A = example_not_train();
  auto r = analyze_element(Element(A, {0, 1, 2}));
  CHECK(r.degree == 2);
  CHECK(r.minimal_poly == poly({0, 0, -2, 1}));
  CHECK_FALSE(minimal_poly_form_check(r));
  CHECK(r.minimal_poly.coeff(1) == 0);
}

TEST_CASE("compositions Q(P(a)) do not vanish in the free truncation") {
  std::mt19937_64 rng(5);
  auto A = free_single_truncated(8);
  auto random_poly = [&](std::size_t d) {
    std::vector<Scalar> c(d + 1);
    for (std::size_t k = 1; k <= d; ++k) c[k] = fixtures::small_rational(rng);
    while (c[d] == 0) c[d] = fixtures::small_rational(rng);
    return UnivariatePoly(c);
  };
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    Vector v = fixtures::random_vector(rng, A->dim());
    if (v[0] == 0) v[0] = 1;
    Element a(A, v);
    auto da = analyze_element(a).degree;
    std::uniform_int_distribution<std::size_t> pick(1, 3);
    std::size_t dp = pick(rng), dq = pick(rng);
    if (dp * dq > da) continue;
    auto p = random_poly(dp), qq = random_poly(dq);
    CHECK_FALSE(poly_eval(poly_eval(a, p), qq).is_zero());
    ++checked;
  }
  CHECK(checked >= 50);
}

TEST_CASE("alg(a)^2 is elementary for weight-one a") {
  std::mt19937_64 rng(3);
  for (const auto& A : fixtures::catalog()) {
    for (int i = 0; i < 10; ++i) {
      Vector v = fixtures::random_vector(rng, A->dim());
      Element a(A, v);
      Scalar w = weight_of(a);
      if (w == 0) continue;
      a = Scalar(1 / w) * a;
      auto r = analyze_element(a);
      std::vector<Element> sq(r.power_basis.begin() + 1, r.power_basis.end());
      for (const auto& x : sq)
        for (const auto& y : sq) {
          auto lhs = x * y;
          auto rhs = q(1, 2) * (weight_of(x) * y + weight_of(y) * x);
          CHECK(lhs == rhs);
        }
    }
  }
}
