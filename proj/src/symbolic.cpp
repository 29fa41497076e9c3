#include "baric/symbolic.hpp"

#include <random>

#include "baric/errors.hpp"

namespace baric {

bool SymbolicElement::is_zero() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return false;
  return true;
}

SymbolicElement lift(const Element& x) {
  SymbolicElement s{x.algebra(), PolyVector(x.dim()), {}};
  for (std::size_t i = 0; i < x.dim(); ++i) s.coords[i] = MultiPoly(x.coords()[i]);
  return s;
}

SymbolicElement symbolic_zero(const TablePtr& algebra) { return {algebra, PolyVector(algebra->dim()), {}}; }

namespace {

std::vector<VarId> joined_vars(const SymbolicElement& a, const SymbolicElement& b) {
  std::vector<VarId> v = a.vars;
  for (auto id : b.vars)
    if (std::find(v.begin(), v.end(), id) == v.end()) v.push_back(id);
  return v;
}

void check_same(const SymbolicElement& a, const SymbolicElement& b) {
  require(a.algebra == b.algebra || a.algebra->same_table(*b.algebra), "symbolic elements of different algebras");
}

}  // namespace

SymbolicElement operator+(const SymbolicElement& a, const SymbolicElement& b) {
  check_same(a, b);
  SymbolicElement r{a.algebra, a.coords, joined_vars(a, b)};
  for (std::size_t i = 0; i < r.dim(); ++i) r.coords[i] += b.coords[i];
  return r;
}

SymbolicElement operator-(const SymbolicElement& a, const SymbolicElement& b) {
  check_same(a, b);
  SymbolicElement r{a.algebra, a.coords, joined_vars(a, b)};
  for (std::size_t i = 0; i < r.dim(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

SymbolicElement operator*(const MultiPoly& c, const SymbolicElement& a) {
  SymbolicElement r{a.algebra, PolyVector(a.dim()), a.vars};
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!a.coords[i].is_zero()) r.coords[i] = c * a.coords[i];
  return r;
}

SymbolicElement multiply(const SymbolicElement& x, const SymbolicElement& y) {
  check_same(x, y);
  const AlgebraTable& A = *x.algebra;
  const std::size_t n = A.dim();
  std::vector<PolyAccumulator> acc(n);
  std::vector<bool> touched(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (x.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y.coords[j].is_zero()) continue;
      const auto& p = A.product(i, j);
      if (p.empty()) continue;
      if (p.size() == 1) {
        acc[p[0].first].add_product(x.coords[i], y.coords[j], p[0].second);
        touched[p[0].first] = true;
      } else {
        MultiPoly xy = x.coords[i] * y.coords[j];
        for (const auto& [k, c] : p) {
          acc[k].add(xy, c);
          touched[k] = true;
        }
      }
    }
  }
  SymbolicElement r{x.algebra, PolyVector(n), joined_vars(x, y)};
  for (std::size_t k = 0; k < n; ++k)
    if (touched[k]) r.coords[k] = acc[k].take();
  return r;
}

MultiPoly weight_of(const SymbolicElement& x) {
  const Vector& w = x.algebra->weight();
  PolyAccumulator acc;
  for (std::size_t i = 0; i < x.dim(); ++i)
    if (!is_zero(w[i])) acc.add(x.coords[i], w[i]);
  return acc.take();
}

Element evaluate(const SymbolicElement& x, const std::map<VarId, Scalar>& values) {
  Vector v(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) v[i] = x.coords[i].evaluate(values);
  return Element(x.algebra, std::move(v));
}

SymbolicElement generic_element(const TablePtr& algebra, const std::string& prefix,
                                const std::optional<std::vector<Vector>>& restrict_to) {
  std::vector<Vector> span;
  if (restrict_to) {
    span = *restrict_to;
  } else {
    for (std::size_t i = 0; i < algebra->dim(); ++i) span.push_back(unit_vector(algebra->dim(), i));
  }
  return generic_affine(Element::zero(algebra), prefix, span);
}

SymbolicElement generic_affine(const Element& anchor, const std::string& prefix, const std::vector<Vector>& span) {
  SymbolicElement s = lift(anchor);
  s.vars = fresh_vars(prefix, span.size());
  for (std::size_t k = 0; k < span.size(); ++k) {
    require(span[k].size() == anchor.dim(), "generic element basis vector length mismatch");
    MultiPoly t = MultiPoly::var(s.vars[k]);
    for (std::size_t i = 0; i < anchor.dim(); ++i)
      if (!is_zero(span[k][i])) s.coords[i] += span[k][i] * t;
  }
  return s;
}

std::vector<SymbolicElement> generic_principal_powers(const SymbolicElement& x, unsigned k_max) {
  std::vector<SymbolicElement> out;
  if (k_max == 0) return out;
  out.push_back(x);
  for (unsigned k = 2; k <= k_max; ++k) out.push_back(multiply(out.back(), x));
  return out;
}

std::optional<std::size_t> operator_nil_index(const SymbolicElement& x, const std::vector<Vector>& carrier,
                                              std::size_t bound) {
  std::size_t index = 0;
  for (const auto& c : carrier) {
    SymbolicElement w = lift(Element(x.algebra, c));
    std::size_t p = 0;
    while (!w.is_zero()) {
      if (p == bound) return std::nullopt;
      w = x * w;
      ++p;
    }
    index = std::max(index, p);
  }
  return index;
}

IdentityResult check_identity(const PolyVector& residual) {
  IdentityResult r;
  const MultiPoly* target = nullptr;
  for (const auto& p : residual)
    if (!p.is_zero()) {
      target = &p;
      break;
    }
  if (target == nullptr) return r;
  r.holds = false;
  MultiPoly p = *target;
  for (VarId v : target->variables()) {
    for (long k = 0;; ++k) {
      // 0, 1, -1, 2, -2, ...
      long val = (k % 2 == 1) ? (k + 1) / 2 : -(k / 2);
      MultiPoly q = p.substitute({{v, Scalar(val)}});
      if (!q.is_zero()) {
        r.witness[v] = val;
        p = std::move(q);
        break;
      }
    }
  }
  ensure(p.is_constant() && !p.is_zero(), "witness search did not reach a nonzero value");
  return r;
}

IdentityResult check_identity(const TablePtr& algebra, std::size_t arity, const IdentityExpr& expr,
                              const std::optional<std::vector<Vector>>& restrict_to) {
  std::vector<SymbolicElement> xs;
  for (std::size_t i = 0; i < arity; ++i)
    xs.push_back(generic_element(algebra, std::string(1, static_cast<char>('s' + i % 8)), restrict_to));
  SymbolicElement res = expr(xs);
  IdentityResult r = check_identity(res.coords);
  if (!r.holds) {
    std::map<VarId, Scalar> full = r.witness;
    for (const auto& x : xs)
      for (auto v : x.vars) full.try_emplace(v, 0);
    for (const auto& x : xs) r.witness_elements.push_back(evaluate(x, full));
    r.witness = std::move(full);
  }
  return r;
}

std::size_t symbolic_rank(std::vector<PolyVector> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t row = 0;
  MultiPoly prev(1);
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && m[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        MultiPoly t = m[row][col] * m[i][j] - m[i][col] * m[row][j];
        m[i][j] = exact_div(t, prev);
      }
      m[i][col] = MultiPoly();
    }
    prev = m[row][col];
    ++row;
  }
  return row;
}

namespace {

std::size_t power_rank(const Element& x) {
  auto pw = principal_powers(x, static_cast<unsigned>(x.dim() + 1));
  return rank_of(coords_of(pw), x.dim());
}

}  // namespace

DegreeResult generic_degree(const TablePtr& algebra, unsigned seed, std::size_t symbolic_dim_limit) {
  const std::size_t n = algebra->dim();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  DegreeResult r;
  for (int trial = 0; trial < 3; ++trial) {
    Vector v(n);
    for (auto& c : v) {
      c = Scalar(num(rng), den(rng));
      c.canonicalize();
    }
    r.degree = std::max(r.degree, power_rank(Element(algebra, v)));
  }
  if (r.degree == n) {
    r.certified = true;
    r.method = "random evaluation reached the dimension";
    return r;
  }
  if (n > symbolic_dim_limit) {
    r.method = "random evaluation (lower bound, not certified symbolically)";
    return r;
  }
  // Rank is invariant under scaling, so a weight-one slice is generic enough.
  SymbolicElement x = generic_element(algebra, "g");
  if (algebra->has_weight()) {
    const Vector& w = algebra->weight();
    std::size_t pivot = 0;
    while (is_zero(w[pivot])) ++pivot;
    Vector anchor = (1 / w[pivot]) * unit_vector(n, pivot);
    std::vector<Vector> span;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pivot) continue;
      span.push_back(unit_vector(n, i) - (w[i] / w[pivot]) * unit_vector(n, pivot));
    }
    x = generic_affine(Element(algebra, anchor), "g", span);
  }
  auto pw = generic_principal_powers(x, static_cast<unsigned>(n + 1));
  // deg(x) = d iff x^(d+1) lies in span(x, ..., x^d), since the span is L_x-invariant.
  std::size_t d = r.degree;
  while (d < n) {
    std::vector<PolyVector> rows(n, PolyVector(d + 1));
    for (std::size_t j = 0; j <= d; ++j)
      for (std::size_t i = 0; i < n; ++i) rows[i][j] = pw[j].coords[i];
    if (symbolic_rank(std::move(rows)) <= d) break;
    ++d;
  }
  r.degree = d;
  r.certified = true;
  r.method = "symbolic rank of the power matrix";
  return r;
}

}  // namespace baric
