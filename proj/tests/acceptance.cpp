// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "baric/associative.hpp"
#include "baric/bernstein.hpp"
#include "baric/constructions.hpp"
#include "baric/element_analysis.hpp"
#include "baric/kurosh.hpp"
#include "baric/linalg.hpp"
#include "baric/symbolic.hpp"
#include "baric/train_engel.hpp"
#include "fixtures.hpp"
#include "suites.hpp"

using namespace baric;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  std::string note;  // printed on PASS

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) detail << what;
    ok = false;
  }
};

Scalar q(long n, long d) {
  Scalar s(n, d);
  s.canonicalize();
  return s;
}

const UnivariatePoly kRank4({0, 0, q(1, 2), q(-3, 2), 1});

TablePtr zhevlakov_bernstein(std::size_t n, std::size_t len) {
  auto z = zhevlakov_truncated(n, len);
  return adjoin_idempotent(*z.table, z.u_idx, z.v_idx);
}

// C = t K[t]/(t^4), S = K t.
TablePtr power_series_construction() {
  AssociativeTable c;
  c.labels = {"t", "t2", "t3"};
  c.products[{0, 0}] = {0, 1, 0};
  c.products[{0, 1}] = {0, 0, 1};
  c.products[{1, 0}] = {0, 0, 1};
  return from_associative(c, {{1, 0, 0}}, {"t"});
}

void example_reproduction(Outcome& o) {
  auto A = example_not_train();
  auto e = Element::basis(A, "e"), u = Element::basis(A, "u"), v = Element::basis(A, "v");
  auto a = e + u + v;
  o.expect(a * a == e + Scalar(3) * u, "a^2 != e + 3u");
  o.expect(principal_power(a, 3) == e + Scalar(5) * u, "a^3 != e + 5u");
  auto r = analyze_element(a);
  o.expect(r.degree == 3, "degree != 3");
  o.expect(!train_analysis(A).is_train, "reported train");

  // Oracle: solve a^4 = c1 a + c2 a^2 + c3 a^3 directly.
  auto pw = principal_powers(a, 4);
  auto m = Matrix::from_columns(coords_of({pw[0], pw[1], pw[2]}), 3);
  auto c = solve(m, pw[3].coords());
  o.expect(c.has_value(), "a^4 not in span(a, a^2, a^3)");
  if (!c) return;
  UnivariatePoly solved({0, -(*c)[0], -(*c)[1], -(*c)[2], 1});
  auto expected = UnivariatePoly({0, 0, -1, 1}) * UnivariatePoly({q(-3, 2), 1});
  o.expect(solved == expected, "linear-solve oracle disagrees with (X^3 - X^2)(X - 3/2)");
  o.expect(r.minimal_poly == expected, "minimal polynomial " + to_string(r.minimal_poly));
}

void shift_algebras(Outcome& o) {
  auto D = shift_down_truncated(8);
  auto vd = Element::basis(D, "v");
  for (std::size_t k = 1; k <= 8; ++k) {
    auto x = Element::basis(D, "u" + std::to_string(k)) + vd;
    o.expect(analyze_element(x).degree == k, "deg alg(u" + std::to_string(k) + " + v)");
  }
  auto U = shift_up_truncated(8);
  auto x = Element::basis(U, "u1") + Element::basis(U, "v");
  for (unsigned i = 2; i <= 8; ++i)
    o.expect(principal_power(x, i) == Scalar(2) * Element::basis(U, "u" + std::to_string(i)),
             "(u1 + v)^" + std::to_string(i));
}

void singly_generated(Outcome& o) {
  std::mt19937_64 rng(3);
  for (std::size_t n = 4; n <= 8; ++n) {
    const auto tag = " (n = " + std::to_string(n) + ")";
    auto A = free_single_truncated(n);
    o.expect(train_analysis(A).is_train, "beta = 0 not train" + tag);
    std::vector<std::optional<std::vector<Scalar>>> samples{std::nullopt};
    for (int s = 0; s < 3; ++s) {
      std::vector<Scalar> betas(n - 2);
      for (auto& b : betas) b = fixtures::small_rational(rng);
      if (std::all_of(betas.begin(), betas.end(), [](const Scalar& b) { return b == 0; })) betas[0] = 1;
      samples.push_back(betas);
      auto B = free_single_truncated(n, betas);
      o.expect(!train_analysis(B).is_train, "sampled beta != 0 reported train" + tag);
    }
    for (const auto& betas : samples) {
      auto B = free_single_truncated(n, betas);
      auto a = Element::basis(B, "e") + Scalar(2) * Element::basis(B, "u1") + Element::basis(B, "v1");
      auto s = singly_generated_subalgebra(a);
      bool identity = s.table->same_table(*B) && s.basis.size() == n;
      for (std::size_t i = 0; identity && i < n; ++i) identity = s.basis[i] == unit_vector(n, i);
      o.expect(identity, "round trip is not the identity" + tag);
    }
  }
}

void minimal_poly_forms(Outcome& o) {
  std::mt19937_64 rng(5);
  auto cat = fixtures::catalog();
  int checked = 0;
  for (std::size_t i = 0; checked < 200; ++i) {
    const auto& A = cat[i % cat.size()];
    Element a(A, fixtures::random_vector(rng, A->dim()));
    if (weight_of(a) == 0) continue;
    auto r = analyze_element(a);
    o.expect(minimal_poly_form_check(r), A->name() + ": form check at " + to_string(a));
    if (r.degree >= 2) o.expect(r.minimal_poly.coeff(1) == 0, A->name() + ": gamma_1 != 0 at " + to_string(a));
    ++checked;
  }
}

void kurosh(Outcome& o) {
  auto r = kurosh_demo(12, 6);
  o.expect(r.groebner_ok && r.added == 0, "relations are not a Groebner basis below 12");
  o.expect(r.nil_span_ok, "(ax + by)^3 does not reduce to zero");
  o.expect(r.hilbert_ok && r.xy_checked_upto >= 6, "Hilbert counts or (xy)^t normality");
  o.expect(r.train_ok && r.train && r.train->rank == 4u && r.train->train_poly == kRank4, "train equation");
  for (const auto& f : r.failures) o.expect(false, f);
}

void zhevlakov(Outcome& o) {
  auto A = zhevlakov_bernstein(4, 4);
  auto N = barideal_basis(*A);
  auto x = generic_element(A, "x", N);
  o.expect(check_identity(((x * x) * x).coords).holds, "x^3 != 0 on N");
  auto t = train_analysis(A);
  o.expect(t.is_train && t.rank == 4u && t.train_poly == kRank4, "train rank 4 with the rank-4 equation");
  auto r = engel_yagzhev(make_carrier(A, N, "N"));
  o.expect(r.satisfies_sq_sq_zero, "(x^2)^2 != 0 on N");
  o.expect(r.nil_bounded_index && r.engel_index && r.yagzhev_index, "nil, Engel, Yagzhev not all true");
  o.expect(r.nil_bounded_index == 3u && r.yagzhev_index == r.nil_bounded_index, "indexes disagree");
}

void yagzhev(Outcome& o) {
  for (auto A : {shift_down_truncated(5), zhevlakov_bernstein(4, 3), power_series_construction()}) {
    auto c = make_carrier(A, barideal_basis(*A), "N");
    o.expect(c.sq_sq_zero, A->name() + ": (x^2)^2 != 0");
    o.expect(yagzhev_identity_generic(c, 6), A->name() + ": T_q != 2^{q-2} x^q");
  }
}

void low_degree(Outcome& o) {
  auto E = elementary_algebra(3);
  o.expect(train_analysis(E).rank == 2u, "elementary algebra is not of rank 2");
  o.expect(generic_degree(E).degree == 1, "elementary generic degree != 1");
  auto id = check_identity(E, 1, [](const std::vector<SymbolicElement>& xs) {
    const auto& x = xs[0];
    return x * x - weight_of(x) * x;
  });
  o.expect(id.holds, "x^2 != w(x) x");
  auto C = constant_algebra();
  o.expect(generic_degree(C).degree == 2, "constant generic degree != 2");
  o.expect(jordan_identity(C).holds, "constant algebra not Jordan");
  auto T = example_not_train();
  o.expect(generic_degree(T).degree == 3, "non-train generic degree != 3");
  o.expect(!jordan_identity(T).holds, "non-train example Jordan");
}

void structure_suites(Outcome& o) {
  std::mt19937_64 rng(9);
  using Suite = std::function<suites::SuiteResult(std::mt19937_64&, std::size_t)>;
  std::vector<std::pair<std::string, Suite>> all{{"Peirce", suites::peirce_relations},
                                                  {"power products", suites::power_products},
                                                  {"idempotent family", suites::idempotent_family_suite},
                                                  {"A/L(A) Jordan", suites::lyubich_quotient_jordan},
                                                  {"N^(3)", suites::barideal_solvable},
                                                  {"L^{k+3}", suites::lemma_L_k3},
                                                  {"(u^2 + v)^k", suites::u2_plus_v_powers}};
  std::size_t total = 0;
  for (const auto& [name, suite] : all) {
    auto r = suite(rng, 120);
    total += r.instances;
    o.expect(r.instances >= 100, name + ": fewer than 100 instances");
    o.expect(r.failures == 0, name + ": " + std::to_string(r.failures) + " failures, first " + r.first_failure);
  }
  o.note = std::to_string(all.size()) + " suites, " + std::to_string(total) + " instances";
}

void nilpotency_oracle(Outcome& o) {
  std::mt19937_64 rng(21);
  std::vector<TablePtr> nil{zhevlakov_bernstein(4, 4), shift_down_truncated(5), free_single_truncated(6),
                            power_series_construction(), elementary_algebra(2)};
  for (int i = 0; i < 50; ++i) {
    const auto& A = nil[i % nil.size()];
    auto c = make_carrier(A, barideal_basis(*A), "N");
    Element a(A, fixtures::random_in_span(rng, c.basis, A->dim()));
    auto right = right_nilpotency_index(a, 8);
    o.expect(right.has_value(), A->name() + ": not nil at " + to_string(a));
    o.expect(strong_nilpotency_index(c, a, 7) == right, A->name() + ": right != strong at " + to_string(a));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"example reproduction", example_reproduction},
      {"shift algebras", shift_algebras},
      {"singly generated structure", singly_generated},
      {"minimal polynomial forms", minimal_poly_forms},
      {"Kurosh end to end", kurosh},
      {"Zhevlakov suite", zhevlakov},
      {"Yagzhev identity", yagzhev},
      {"low-degree theorems", low_degree},
      {"structure property suites", structure_suites},
      {"nilpotency oracle equivalence", nilpotency_oracle}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first;
    if (!o.ok) std::cout << ": " << o.detail.str();
    else if (!o.note.empty()) std::cout << " (" << o.note << ")";
    std::cout << std::endl;
    if (!o.ok) ++failed;
  }
  return failed ? 1 : 0;
}
