#include "baric/train_engel.hpp"

#include "baric/bernstein.hpp"
#include "baric/constructions.hpp"
#include "baric/element_analysis.hpp"
#include "baric/errors.hpp"
#include "baric/symbolic.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace baric;

namespace {

Scalar q(long n, long d) {
  Scalar s(n, d);
  s.canonicalize();
  return s;
}

TablePtr zhevlakov_bernstein(std::size_t n, std::size_t len) {
  auto z = zhevlakov_truncated(n, len);
  return adjoin_idempotent(*z.table, z.u_idx, z.v_idx);
}

TablePtr power_series_construction() {
  AssociativeTable c;
  c.labels = {"t", "t2", "t3"};
  c.products[{0, 0}] = {0, 1, 0};
  c.products[{0, 1}] = {0, 0, 1};
  c.products[{1, 0}] = {0, 0, 1};
  return from_associative(c, {{1, 0, 0}}, {"t"});
}

const UnivariatePoly kRank4({0, 0, q(1, 2), q(-3, 2), 1});

}  // namespace

TEST_CASE("non-train example") {
  auto A = example_not_train();
  auto r = train_analysis(A);
  CHECK_FALSE(r.is_train);
  CHECK_FALSE(r.is_locally_train);
  CHECK_FALSE(r.rank);
  CHECK_FALSE(r.nil_index_N);
  CHECK_FALSE(r.operator_index_U);
  CHECK(r.nil_search_bound == 4);
  CHECK(r.rank_search_bound == 5);
  CHECK_FALSE(locally_train_analysis(A));
  // x = u + v: x^3 = x^2, never zero.
  Element x(A, {0, 1, 1});
  CHECK(principal_power(x, 3) == principal_power(x, 2));
  CHECK(lemma_L_k3_check(peirce(A)));
}

TEST_CASE("train verdicts on the catalog") {
  auto E = train_analysis(elementary_algebra(3));
  CHECK(E.rank == 2u);
  CHECK(E.train_poly == UnivariatePoly({0, -1, 1}));
  CHECK(E.nil_index_N == 2u);

  auto C = train_analysis(constant_algebra());
  CHECK(C.rank == 3u);
  CHECK(C.train_poly == train_form(3, 1));

  CHECK(locally_train_analysis(shift_down_truncated(5)));
  auto D = train_analysis(shift_down_truncated(5));
  CHECK(D.is_train);
  CHECK(D.nil_index_N == 6u);

  for (std::size_t n = 4; n <= 7; ++n) {
    auto F = train_analysis(free_single_truncated(n));
    CHECK(F.rank == static_cast<unsigned>(n + 1));
    CHECK(F.train_poly == train_form(static_cast<unsigned>(n + 1), 1));
    CHECK_FALSE(train_analysis(free_single_truncated(n, std::vector<Scalar>(n - 2, 1))).is_train);
  }

  auto Z = train_analysis(zhevlakov_bernstein(4, 4));
  CHECK(Z.rank == 4u);
  CHECK(Z.train_poly == kRank4);

  auto P = train_analysis(power_series_construction());
  CHECK(P.rank == 4u);
  CHECK(P.train_poly == kRank4);
  CHECK(P.operator_index_U == 3u);
}

TEST_CASE("operator nilpotency on U and on L(A)") {
  auto p = peirce(power_series_construction());
  CHECK(operator_nilpotency_check(p, OperatorCarrier::U) == 3u);
  CHECK(operator_nilpotency_check(p, OperatorCarrier::Lyubich) == 3u);
  CHECK_FALSE(operator_nilpotency_check(peirce(example_not_train()), OperatorCarrier::U));
  // Jordan tables satisfy (uv)v = 0.
  for (const auto& A : fixtures::catalog()) {
    if (!classify(A).is_jordan) continue;
    auto idx = operator_nilpotency_check(peirce(A), OperatorCarrier::U);
    REQUIRE(idx);
    CHECK(*idx <= 2u);
  }
  // L(A) = 0 in nuclear3.
  CHECK(operator_nilpotency_check(peirce(fixtures::nuclear3()), OperatorCarrier::Lyubich) == 0u);
}

TEST_CASE("L^{k+3} identity") {
  for (const auto& A : fixtures::catalog()) {
    INFO(A->name());
    CHECK(lemma_L_k3_check(peirce(A), 4));
  }
  CHECK(lemma_L_k3_check(peirce(example_not_train()), 0));
}

TEST_CASE("carriers") {
  auto A = zhevlakov_bernstein(4, 4);
  auto N = make_carrier(A, barideal_basis(*A), "N");
  CHECK(N.sq_sq_zero);
  CHECK(make_carrier(A, {unit_vector(A->dim(), 1)}, "x1").sq_sq_zero);
  CHECK_THROWS_AS(make_carrier(A, {unit_vector(A->dim(), 1), unit_vector(A->dim(), 2)}, "x1,x2"), InputError);
  // Every barideal of a Bernstein algebra satisfies (x^2)^2 = 0, nil or not.
  auto B = example_not_train();
  auto NB = make_carrier(B, barideal_basis(*B), "N");
  CHECK(NB.sq_sq_zero);
  CHECK_FALSE(engel_check(NB));
  auto rb = engel_yagzhev(NB);
  CHECK_FALSE(rb.nil_bounded_index);
  CHECK_FALSE(rb.yagzhev_index);
  auto whole = make_carrier(B, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, "A");
  CHECK_FALSE(whole.sq_sq_zero);
  auto zero = make_table("zero", {"z"}, {});
  CHECK(engel_check(make_carrier(zero, {{1}}, "A")) == 1u);
}

TEST_CASE("Engel, nil and Yagzhev agree on the Zhevlakov barideal") {
  auto A = zhevlakov_bernstein(4, 4);
  auto r = engel_yagzhev(make_carrier(A, barideal_basis(*A), "N"));
  CHECK(r.satisfies_sq_sq_zero);
  CHECK(r.nil_bounded_index == 3u);
  CHECK(r.engel_index.has_value());
  CHECK(r.yagzhev_index == 3u);
  CHECK(r.yagzhev_verified_upto == 6);
  CHECK(r.nil_search_bound == 17);
  CHECK(r.engel_search_bound == 16);
}

TEST_CASE("Engel, nil and Yagzhev on other barideals") {
  for (auto A : {shift_down_truncated(4), free_single_truncated(5), power_series_construction()}) {
    INFO(A->name());
    auto c = make_carrier(A, barideal_basis(*A), "N");
    auto r = engel_yagzhev(c);
    if (!r.satisfies_sq_sq_zero) continue;
    CHECK(r.nil_bounded_index.has_value() == r.engel_index.has_value());
    CHECK(r.nil_bounded_index.has_value() == r.yagzhev_index.has_value());
  }
}

TEST_CASE("T_q by tree enumeration") {
  auto A = shift_down_truncated(5);
  auto c = make_carrier(A, barideal_basis(*A), "N");
  REQUIRE(c.sq_sq_zero);
  auto a = Element::basis(A, "u5") + Element::basis(A, "v");
  CHECK(yagzhev_Tq(c, a, 2) == a * a);
  CHECK(yagzhev_Tq(c, a, 3) == Scalar(2) * principal_power(a, 3));
  CHECK(yagzhev_Tq(c, a, 4) == Scalar(4) * principal_power(a, 4));
  CHECK(yagzhev_Tq(c, a, 6) == Scalar(16) * principal_power(a, 6));
  CHECK(yagzhev_identity_generic(c, 6));
  CHECK(yagzhev_identity_generic(c, 9));
  CHECK_THROWS_AS(yagzhev_Tq(c, a, 1), InputError);
  auto B = example_not_train();
  auto whole = make_carrier(B, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, "A");
  CHECK_THROWS_AS(yagzhev_Tq(whole, Element::basis(B, "u"), 3), InputError);
}

TEST_CASE("tree catalog") {
  TreeCatalog cat(7);
  const std::size_t catalan[] = {0, 1, 1, 2, 5, 14, 42, 132};
  for (std::size_t m = 1; m <= 7; ++m) CHECK(cat.count(m) == catalan[m]);
  CHECK(cat.describe(1, 0) == "a");
  CHECK(cat.describe(2, 0) == "(a a)");
  std::size_t caterpillars = 0;
  for (std::size_t k = 0; k < cat.count(5); ++k) caterpillars += cat.is_caterpillar(5, k);
  CHECK(caterpillars == 8);
  // Sums over trees from the full catalog match the split recursion.
  auto sums = tree_sums<long>(1, 7, [](long x, long y) { return x * y; }, [](long x, long y) { return x + y; });
  for (std::size_t m = 1; m <= 7; ++m) CHECK(sums[m] == static_cast<long>(catalan[m]));
}

TEST_CASE("strong nilpotency oracle") {
  auto A = zhevlakov_bernstein(4, 4);
  auto c = make_carrier(A, barideal_basis(*A), "N");
  std::mt19937_64 rng(9);
  Element a(A, fixtures::random_in_span(rng, c.basis, A->dim()));
  auto t3 = strong_nilpotency_oracle(c, a, 3);
  REQUIRE(t3.size() == 2);
  CHECK(t3[0].value == t3[1].value);
  CHECK(t3[0].value == principal_power(a, 3));
  auto t4 = strong_nilpotency_oracle(c, a, 4);
  CHECK(t4.size() == 5);
  for (const auto& t : t4) CHECK(t.value.is_zero());
  CHECK(strong_nilpotency_index(c, a, 7) == right_nilpotency_index(a, 10));

  auto D = shift_down_truncated(4);
  auto cd = make_carrier(D, barideal_basis(*D), "N");
  auto b = Element::basis(D, "u3") + Element::basis(D, "v");
  auto t5 = strong_nilpotency_oracle(cd, b, 5);
  CHECK(t5.size() == 14);
  for (const auto& t : t5) CHECK(t.value.is_zero());
  auto t3d = strong_nilpotency_oracle(cd, b, 3);
  CHECK_FALSE(t3d[0].value.is_zero());
  CHECK(right_nilpotency_index(b, 10) == 4u);
  CHECK(strong_nilpotency_index(cd, b, 7) == 4u);
}

TEST_CASE("power chains of ideals") {
  auto E = elementary_algebra(3);
  auto ce = ideal_power_chain(E, barideal_basis(*E));
  CHECK(ce.power_dims == std::vector<std::size_t>{3, 0});
  CHECK(ce.nilpotency_index == 2u);

  auto B = example_not_train();
  auto cb = ideal_power_chain(B, barideal_basis(*B));
  CHECK_FALSE(cb.nilpotency_index);
  CHECK(cb.power_dims.back() == 1);
  CHECK(cb.solvability_index == 3u);

  for (const auto& A : fixtures::catalog()) {
    INFO(A->name());
    auto ch = ideal_power_chain(A, barideal_basis(*A));
    REQUIRE(ch.solvability_index);
    CHECK(*ch.solvability_index <= 3u);
  }
  CHECK_THROWS_AS(ideal_power_chain(B, {{0, 0, 1}}), InputError);
}

TEST_CASE("V^2 has no influence on the train verdict") {
  for (const auto& A : fixtures::catalog()) {
    INFO(A->name());
    auto Z = zero_v_squared(peirce(A));
    CHECK(train_analysis(A).is_train == train_analysis(Z).is_train);
  }
}

TEST_CASE("right and strong nilpotency agree on nil barideals") {
  std::mt19937_64 rng(21);
  std::vector<TablePtr> nil{zhevlakov_bernstein(4, 4), shift_down_truncated(5), free_single_truncated(6),
                            power_series_construction(), elementary_algebra(2)};
  int checked = 0;
  for (const auto& A : nil) {
    auto c = make_carrier(A, barideal_basis(*A), "N");
    for (int i = 0; i < 12; ++i) {
      Element a(A, fixtures::random_in_span(rng, c.basis, A->dim()));
      auto right = right_nilpotency_index(a, 8);
      REQUIRE(right);
      CHECK(strong_nilpotency_index(c, a, 7) == right);
      ++checked;
    }
  }
  CHECK(checked >= 50);
}

TEST_CASE("identities on carriers with (x^2)^2 = 0") {
  for (auto A : {zhevlakov_bernstein(4, 3), shift_down_truncated(4), power_series_construction()}) {
    INFO(A->name());
    auto c = make_carrier(A, barideal_basis(*A), "N");
    REQUIRE(c.sq_sq_zero);
    auto x = generic_element(A, "x", c.basis);
    auto pw = generic_principal_powers(x, 7);
    for (std::size_t i = 2; i <= 6; ++i)
      for (std::size_t j = 2; i + j <= 8; ++j) CHECK((pw[i - 1] * pw[j - 1]).is_zero());
    auto y = generic_element(A, "y", c.basis);
    auto z = generic_element(A, "z", c.basis);
    auto x2 = pw[1];
    CHECK((x2 * (x * y)).is_zero());
    CHECK((MultiPoly(2) * ((x * y) * (x * z)) + x2 * (y * z)).is_zero());
  }
}
