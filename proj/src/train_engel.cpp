#include "baric/train_engel.hpp"

#include <algorithm>

#include "baric/errors.hpp"
#include "baric/symbolic.hpp"

namespace baric {

namespace {

std::optional<std::size_t> generic_nil_index(const SymbolicElement& x, std::size_t bound) {
  SymbolicElement p = x;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (p.is_zero()) return k;
    p = p * x;
  }
  return std::nullopt;
}

// Coordinates of a polynomial vector with respect to a fixed basis.
PolyVector project(const Coordinates& coords, const PolyVector& v) {
  const auto& basis = coords.basis();
  const std::size_t n = v.size(), k = basis.size();
  PolyVector out(k);
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    Vector col = coords.project(unit_vector(n, i));
    for (std::size_t r = 0; r < k; ++r)
      if (!is_zero(col[r])) out[r] += col[r] * v[i];
  }
  return out;
}

}  // namespace

std::optional<std::size_t> operator_nilpotency_check(const PeirceDecomposition& p, OperatorCarrier which) {
  const auto& A = *p.algebra();
  std::vector<Vector> carrier = which == OperatorCarrier::U ? p.U_coords() : coords_of(lyubich_ideal(p));
  if (carrier.empty()) return 0;
  for (const auto& v : p.V)
    for (const auto& c : carrier)
      require(in_span(carrier, A.mul(v.coords(), c)), "carrier is not invariant under L_v");
  if (p.V.empty()) return 1;
  SymbolicElement v = generic_element(p.algebra(), "v", p.V_coords());
  return operator_nil_index(v, carrier, carrier.size() + 1);
}

TrainReport train_analysis(const TablePtr& a) {
  TrainReport r;
  auto p = peirce(a);
  auto nb = p.N_coords();
  r.nil_search_bound = nb.size() + 2;
  if (nb.empty()) {
    r.nil_index_N = 1;
  } else {
    r.nil_index_N = generic_nil_index(generic_element(a, "n", nb), r.nil_search_bound);
  }
  r.is_locally_train = r.nil_index_N.has_value();

  r.rank_search_bound = static_cast<unsigned>(a->dim()) + 2;
  SymbolicElement z = generic_weight_one(a, "z");
  SymbolicElement z2 = z * z;
  if ((z2 - z).is_zero()) {
    r.rank = 2;
  } else {
    SymbolicElement f = z2 * z - z2;
    const MultiPoly half(Scalar(1, 2));
    for (unsigned k = 3; k <= r.rank_search_bound; ++k) {
      if (f.is_zero()) {
        r.rank = k;
        break;
      }
      if (k < r.rank_search_bound) f = z * f - half * f;
    }
  }
  r.is_train = r.rank.has_value();
  if (r.rank) r.train_poly = *r.rank == 2 ? UnivariatePoly({0, -1, 1}) : train_form(*r.rank, 1);

  r.operator_index_U = operator_nilpotency_check(p, OperatorCarrier::U);
  ensure(r.is_train == r.is_locally_train, "train verdict disagrees with nilpotency of N");
  ensure(r.is_train == r.operator_index_U.has_value(), "train verdict disagrees with nilpotency of L_v on U");
  return r;
}

bool locally_train_analysis(const TablePtr& a) { return train_analysis(a).is_locally_train; }

bool lemma_L_k3_check(const PeirceDecomposition& p, unsigned k_max) {
  const auto& a = p.algebra();
  auto nb = p.N_coords();
  if (nb.empty()) return true;
  SymbolicElement v = p.V.empty() ? symbolic_zero(a) : generic_element(a, "v", p.V_coords());
  SymbolicElement u = p.U.empty() ? symbolic_zero(a) : generic_element(a, "u", p.U_coords());
  SymbolicElement x = u + v;
  std::vector<Vector> peirce_basis{p.e.coords()};
  for (const auto& b : nb) peirce_basis.push_back(b);
  Coordinates coords(peirce_basis, a->dim());
  const std::size_t first_v = 1 + p.U.size();
  for (const auto& y : nb) {
    SymbolicElement w = x * (x * (x * lift(Element(a, y))));
    // L_x^3 maps N into U.
    PolyVector c = project(coords, w.coords);
    if (!c[0].is_zero()) return false;
    for (std::size_t i = first_v; i < c.size(); ++i)
      if (!c[i].is_zero()) return false;
    SymbolicElement lhs = w, rhs = w;
    for (unsigned k = 1; k <= k_max; ++k) {
      lhs = x * lhs;
      rhs = v * rhs;
      if (!(lhs - rhs).is_zero()) return false;
    }
  }
  return true;
}

Carrier make_carrier(const TablePtr& a, std::vector<Vector> basis, std::string name) {
  Carrier c{a, independent_subset(basis, a->dim()), std::move(name), false};
  for (std::size_t i = 0; i < c.basis.size(); ++i)
    for (std::size_t j = i; j < c.basis.size(); ++j)
      require(in_span(c.basis, a->mul(c.basis[i], c.basis[j])), "carrier '" + c.name + "' is not closed under products");
  if (c.basis.empty()) {
    c.sq_sq_zero = true;
    return c;
  }
  SymbolicElement x = generic_element(a, "c", c.basis);
  SymbolicElement x2 = x * x;
  c.sq_sq_zero = (x2 * x2).is_zero();
  return c;
}

namespace {

void require_member(const Carrier& c, const Element& a) {
  require(a.algebra() == c.algebra || a.algebra()->same_table(*c.algebra), "element is not in the carrier's algebra");
  require(in_span(c.basis, a.coords()), "element is not in the carrier");
}

Scalar two_power(std::size_t q) {
  mpz_class p = 1;
  p <<= static_cast<mp_bitcnt_t>(q - 2);
  return Scalar(p);
}

}  // namespace

std::vector<TreeValue> strong_nilpotency_oracle(const Carrier& c, const Element& a, std::size_t m) {
  require(c.sq_sq_zero, "carrier '" + c.name + "' does not satisfy (x^2)^2 = 0");
  require(m >= 1, "tree size must be positive");
  require_member(c, a);
  TreeCatalog cat(m);
  auto values = cat.evaluate(a, [](const Element& x, const Element& y) { return x * y; });
  std::vector<TreeValue> out;
  for (std::size_t k = 0; k < cat.count(m); ++k) {
    if (m >= 4 && !cat.is_caterpillar(m, k))
      ensure(values[m][k].is_zero(), "non-principal product " + cat.describe(m, k) + " is nonzero");
    out.push_back({k, cat.describe(m, k), values[m][k]});
  }
  return out;
}

std::optional<std::size_t> strong_nilpotency_index(const Carrier& c, const Element& a, std::size_t m_max) {
  require_member(c, a);
  TreeCatalog cat(m_max);
  auto values = cat.evaluate(a, [](const Element& x, const Element& y) { return x * y; });
  std::optional<std::size_t> index;
  for (std::size_t m = m_max; m >= 1; --m) {
    bool all_zero = std::all_of(values[m].begin(), values[m].end(), [](const Element& e) { return e.is_zero(); });
    if (!all_zero) break;
    index = m;
  }
  return index;
}

std::optional<std::size_t> right_nilpotency_index(const Element& a, std::size_t bound) {
  Element p = a;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (p.is_zero()) return k;
    p = p * a;
  }
  return std::nullopt;
}

Element yagzhev_Tq(const Carrier& c, const Element& a, std::size_t q) {
  require(c.sq_sq_zero, "carrier '" + c.name + "' does not satisfy (x^2)^2 = 0");
  require(q >= 2, "T_q needs q >= 2");
  require_member(c, a);
  auto t = tree_sums(a, q, [](const Element& x, const Element& y) { return x * y; },
                     [](const Element& x, const Element& y) { return x + y; });
  ensure(t[q] == two_power(q) * principal_power(a, static_cast<unsigned>(q)), "T_q != 2^{q-2} a^q");
  return t[q];
}

bool yagzhev_identity_generic(const Carrier& c, std::size_t q_max) {
  require(q_max >= 2, "T_q needs q >= 2");
  if (c.basis.empty()) return true;
  SymbolicElement x = generic_element(c.algebra, "y", c.basis);
  auto mul = [](const SymbolicElement& p, const SymbolicElement& q) { return p * q; };
  std::vector<SymbolicElement> sums(q_max + 1, symbolic_zero(c.algebra));
  if (q_max < 8) {
    TreeCatalog cat(q_max);
    auto values = cat.evaluate(x, mul);
    for (std::size_t q = 1; q <= q_max; ++q)
      for (const auto& v : values[q]) sums[q] = sums[q] + v;
  } else {
    sums = tree_sums(x, q_max, mul, [](const SymbolicElement& p, const SymbolicElement& q) { return p + q; });
  }
  auto powers = generic_principal_powers(x, static_cast<unsigned>(q_max));
  for (std::size_t q = 2; q <= q_max; ++q)
    if (!(sums[q] - MultiPoly(two_power(q)) * powers[q - 1]).is_zero()) return false;
  return true;
}

std::optional<std::size_t> engel_check(const Carrier& c) {
  if (c.basis.empty()) return 1;
  SymbolicElement x = generic_element(c.algebra, "x", c.basis);
  auto idx = operator_nil_index(x, c.basis, c.basis.size() + 1);
  if (idx && *idx == 0) return 1;
  return idx;
}

EngelYagzhevReport engel_yagzhev(const Carrier& c) {
  EngelYagzhevReport r;
  r.satisfies_sq_sq_zero = c.sq_sq_zero;
  r.nil_search_bound = c.basis.size() + 2;
  r.engel_search_bound = c.basis.size() + 1;
  SymbolicElement x = c.basis.empty() ? symbolic_zero(c.algebra) : generic_element(c.algebra, "x", c.basis);
  r.nil_bounded_index = generic_nil_index(x, r.nil_search_bound);
  r.engel_index = engel_check(c);
  std::size_t q_max = std::max<std::size_t>(r.nil_bounded_index.value_or(0), 6);
  auto t = tree_sums(x, q_max, [](const SymbolicElement& p, const SymbolicElement& q) { return p * q; },
                     [](const SymbolicElement& p, const SymbolicElement& q) { return p + q; });
  r.yagzhev_verified_upto = q_max;
  for (std::size_t q = q_max; q >= 2; --q) {
    if (!t[q].is_zero()) break;
    r.yagzhev_index = q;
  }
  if (r.satisfies_sq_sq_zero) {
    ensure(yagzhev_identity_generic(c, std::min<std::size_t>(q_max, 7)), "T_q != 2^{q-2} x^q on the carrier");
    ensure(r.nil_bounded_index.has_value() == r.engel_index.has_value(), "nil and Engel verdicts disagree");
    ensure(r.nil_bounded_index.has_value() == r.yagzhev_index.has_value(), "nil and Yagzhev verdicts disagree");
    if (r.nil_bounded_index && r.yagzhev_index) {
      std::size_t expect = std::max<std::size_t>(*r.nil_bounded_index, 2);
      ensure(*r.yagzhev_index == expect, "Yagzhev index differs from the nil index");
    }
  }
  return r;
}

std::vector<Vector> product_space(const AlgebraTable& t, const std::vector<Vector>& a, const std::vector<Vector>& b) {
  std::vector<Vector> prods;
  for (const auto& x : a)
    for (const auto& y : b) {
      Vector z = t.mul(x, y);
      if (!is_zero(z)) prods.push_back(std::move(z));
    }
  return span_basis(prods, t.dim());
}

PowerChain ideal_power_chain(const TablePtr& a, const std::vector<Vector>& ideal_basis) {
  const auto& A = *a;
  for (std::size_t b = 0; b < A.dim(); ++b)
    for (const auto& x : ideal_basis)
      require(in_span(ideal_basis, A.mul(unit_vector(A.dim(), b), x)), "subspace is not an ideal");
  PowerChain r;
  auto base = span_basis(ideal_basis, A.dim());
  const std::size_t bound = base.size() + 2;
  std::vector<std::vector<Vector>> pw{{}, base};
  r.power_dims.push_back(base.size());
  if (base.empty()) r.nilpotency_index = 1;
  for (std::size_t n = 2; n <= bound && !r.nilpotency_index; ++n) {
    std::vector<Vector> all;
    for (std::size_t i = 1; i < n; ++i) {
      auto part = product_space(A, pw[i], pw[n - i]);
      all.insert(all.end(), part.begin(), part.end());
    }
    pw.push_back(span_basis(all, A.dim()));
    r.power_dims.push_back(pw.back().size());
    if (pw.back().empty()) r.nilpotency_index = n;
  }
  auto cur = base;
  r.plenary_dims.push_back(cur.size());
  if (cur.empty()) r.solvability_index = 1;
  for (std::size_t n = 2; n <= bound && !r.solvability_index; ++n) {
    auto next = product_space(A, cur, cur);
    r.plenary_dims.push_back(next.size());
    if (next.empty()) r.solvability_index = n;
    if (next.size() == cur.size()) break;
    cur = std::move(next);
  }
  return r;
}

}  // namespace baric
