#include "baric/bernstein.hpp"
#include "baric/constructions.hpp"
#include "baric/errors.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace baric;

TEST_CASE("Bernstein verification across the catalog") {
  std::vector<TablePtr> all{constant_algebra(), elementary_algebra(2), three_dim_alpha(Scalar(1, 3)),
                            example_not_train(), shift_up_truncated(4), shift_down_truncated(4),
                            free_single_truncated(5), free_single_truncated(6, std::vector<Scalar>{1, 0, 2, -1}),
                            fixtures::nuclear3(), fixtures::mixed4()};
  for (const auto& a : all) {
    INFO(a->name());
    CHECK(is_bernstein(a).holds);
  }
  CHECK(is_bernstein(make_table("K", {"e"}, {{{0, 0}, {1}}}, Vector{1})).holds);
  CHECK_THROWS_AS(is_bernstein(zhevlakov_truncated(3, 2).table), InputError);
}

TEST_CASE("idempotents and Peirce decomposition") {
  auto A = example_not_train();
  auto e = find_idempotent(A);
  CHECK(e == Element::basis(A, "e"));
  auto p = peirce(A, e);
  REQUIRE(p.U.size() == 1);
  REQUIRE(p.V.size() == 1);
  CHECK(same_span(p.U_coords(), {{0, 1, 0}}, 3));
  CHECK(same_span(p.V_coords(), {{0, 0, 1}}, 3));

  auto C = constant_algebra();
  CHECK(find_idempotent(C) == Element::basis(C, "e"));
  CHECK(Element(C, {1, 1}) * Element(C, {1, 1}) == Element::basis(C, "e"));
  auto pc = peirce(C);
  CHECK(pc.U.empty());
  CHECK(pc.V.size() == 1);

  auto K = make_table("K", {"e"}, {{{0, 0}, {1}}}, Vector{1});
  auto pk = peirce(K);
  CHECK(pk.U.empty());
  CHECK(pk.V.empty());

  // u^2 = 0 here, so e + t u is idempotent for every t.
  for (int t = -3; t <= 3; ++t) {
    auto f = idempotent_family(e, Scalar(t) * Element::basis(A, "u"));
    CHECK(f == e + Scalar(t) * Element::basis(A, "u"));
  }
  CHECK(idempotent_family(e, Element::zero(A)) == e);
  CHECK_THROWS_AS(idempotent_family(e, Element::basis(A, "v")), InputError);

  auto F = free_single_truncated(5);
  auto a = Element(F, {1, 2, 0, 0, 1});
  CHECK(a * a == Element::basis(F, "e"));
  auto ef = Element::basis(F, "e");
  auto u1 = Element::basis(F, "u1");
  CHECK(idempotent_family(ef, u1) == ef + u1);

  CHECK_THROWS_AS(peirce(fixtures::broken_half(), Element::basis(fixtures::broken_half(), "e")), InputError);
}

TEST_CASE("three-dimensional singly generated Peirce basis") {
  auto A = three_dim_alpha(Scalar(2, 5));
  Element x(A, {1, 2, 1});
  auto x2 = x * x, x3 = x2 * x;
  auto p = peirce(A, x2);
  CHECK(same_span(p.U_coords(), {(x3 - x2).coords()}, 3));
  CHECK(same_span(p.V_coords(), {(x + x2 - Scalar(2) * x3).coords()}, 3));
}

TEST_CASE("Lyubich ideal and classification") {
  auto A = example_not_train();
  auto r = classify(A);
  CHECK(r.is_bernstein);
  CHECK_FALSE(r.is_jordan);
  CHECK(r.is_exceptional);
  CHECK_FALSE(r.is_nuclear);
  CHECK(r.type_pair == std::pair<std::size_t, std::size_t>{2, 1});
  REQUIRE(r.lyubich_basis.size() == 1);
  CHECK(same_span(coords_of(r.lyubich_basis), {{0, 1, 0}}, 3));

  auto e2 = classify(elementary_algebra(3));
  CHECK(e2.is_jordan);
  CHECK(e2.is_exceptional);
  CHECK(e2.lyubich_basis.size() == 3);

  auto n3 = classify(fixtures::nuclear3());
  CHECK(n3.is_nuclear);
  CHECK_FALSE(n3.is_exceptional);
  CHECK(n3.lyubich_basis.empty());

  auto m4 = classify(fixtures::mixed4());
  CHECK_FALSE(m4.is_nuclear);
  CHECK_FALSE(m4.is_exceptional);

  auto bad = classify(fixtures::broken_uv());
  CHECK_FALSE(bad.is_bernstein);

  auto cst = classify(constant_algebra());
  CHECK(cst.is_jordan);
}

TEST_CASE("removing V^2") {
  auto C = constant_algebra();
  CHECK(zero_v_squared(peirce(C))->same_table(*C));
  auto F = free_single_truncated(5);
  auto Z = zero_v_squared(peirce(F));
  CHECK(Z->product(4, 4).empty());
  CHECK(Z->product(1, 4) == F->product(1, 4));
}
