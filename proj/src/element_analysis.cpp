#include "baric/element_analysis.hpp"

#include "baric/errors.hpp"

namespace baric {

ElementAnalysis analyze_element(const Element& a) {
  const std::size_t n = a.dim();
  ElementAnalysis r{a, 0, UnivariatePoly::X(), {}, std::nullopt};
  if (a.is_zero()) {
    r.right_nilpotency_index = 1;
    return r;
  }
  Element p = a;
  for (std::size_t k = 1; k <= n + 1; ++k) {
    std::vector<Vector> cols = coords_of(r.power_basis);
    auto c = cols.empty() ? std::optional<Vector>() : solve(Matrix::from_columns(cols, n), p.coords());
    if (c) {
      // a^k = sum_i c_i a^i
      std::vector<Scalar> coeffs(k + 1);
      coeffs[k] = 1;
      for (std::size_t i = 0; i < c->size(); ++i) coeffs[i + 1] = -(*c)[i];
      r.minimal_poly = UnivariatePoly(std::move(coeffs));
      r.degree = k - 1;
      break;
    }
    r.power_basis.push_back(p);
    p = p * a;
  }
  ensure(r.minimal_poly.degree() == static_cast<int>(r.degree) + 1, "power dependence not found within dim + 1");
  ensure(poly_eval(a, r.minimal_poly).is_zero(), "minimal polynomial does not annihilate the element");
  if (r.minimal_poly == UnivariatePoly::monomial(1, r.degree + 1)) r.right_nilpotency_index = r.degree + 1;
  return r;
}

bool minimal_poly_form_check(const ElementAnalysis& an) {
  const auto& p = an.minimal_poly;
  Scalar w = weight_of(an.element);
  switch (p.degree()) {
    case 1:
      return p == UnivariatePoly::X();
    case 2:
      return p == UnivariatePoly({0, -w, 1});
    case 3:
      return p == UnivariatePoly({0, 0, -w, 1});
    default:
      return p.degree() >= 4 && divides(UnivariatePoly({0, 0, -w, 1}), p);
  }
}

SinglyGenerated singly_generated_subalgebra(const Element& a) {
  require(weight_of(a) == 1, "singly generated table needs a generator of weight one");
  const auto& A = a.algebra();
  const std::size_t n = a.dim();
  auto an = analyze_element(a);
  Element a2 = a * a, a3 = a2 * a;
  Element v1 = a + a2 - Scalar(2) * a3;
  std::vector<Vector> basis{a2.coords()};
  std::vector<std::string> labels{"e"};
  Element u = a3 - a2;
  for (std::size_t i = 1; !u.is_zero(); ++i) {
    auto trial = basis;
    trial.push_back(u.coords());
    if (!is_independent(trial, n)) break;
    basis = std::move(trial);
    labels.push_back("u" + std::to_string(i));
    u = v1 * u;
  }
  if (!v1.is_zero()) {
    basis.push_back(v1.coords());
    labels.push_back("v1");
  }
  ensure(is_independent(basis, n) && basis.size() == an.degree,
         "canonical basis does not span alg(a)");
  auto t = std::make_shared<const AlgebraTable>(induced_table(*A, basis, labels, "alg(" + to_string(a) + ")"));
  const std::size_t m = basis.size() - 2;  // number of u's
  if (basis.size() >= 4) {
    Vector v2(basis.size());
    v2[1] = -2;
    v2[2] = -4;
    ensure(t->product_dense(m + 1, m + 1) == v2, "v1^2 != -2u1 - 4u2 in alg(a)");
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t j = i; j <= m; ++j) ensure(t->product(i, j).empty(), "U^2 != 0 in alg(a)");
  }
  return {t, basis};
}

Element f_k(const Element& a, unsigned k) {
  require(k >= 3, "f_k needs k >= 3");
  Scalar w = weight_of(a);
  Element a2 = a * a;
  Element f = a2 * a - w * a2;
  for (unsigned i = 3; i < k; ++i) f = a * f - (w / 2) * f;
  return f;
}

TrainElementRank train_element_rank(const Element& a) {
  Scalar w = weight_of(a);
  require(!is_zero(w), "train element rank needs nonzero weight");
  TrainElementRank r;
  r.searched_up_to = static_cast<unsigned>(a.dim()) + 2;
  Element a2 = a * a;
  Element f = a2 * a - w * a2;
  for (unsigned m = 3; m <= r.searched_up_to; ++m) {
    if (m > 3) f = a * f - (w / 2) * f;
    if (f.is_zero()) {
      r.rank = m;
      break;
    }
  }
  if (r.rank) {
    auto an = analyze_element(a);
    auto form = train_form(*r.rank, w);
    ensure(divides(an.minimal_poly, form), "minimal polynomial does not divide the train form");
    if (an.degree >= 2) ensure(an.minimal_poly == form, "minimal polynomial differs from the train form");
  }
  return r;
}

}  // namespace baric
