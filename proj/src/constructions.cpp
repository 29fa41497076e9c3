#include "baric/constructions.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "baric/bernstein.hpp"
#include "baric/errors.hpp"

namespace baric {

namespace {

const Scalar kHalf(1, 2);

// Labels e, u1..un, v with the idempotent part filled in.
struct ShiftLayout {
  std::vector<std::string> labels;
  ProductMap products;
  Vector weight;
};

ShiftLayout shift_layout(std::size_t n) {
  ShiftLayout s;
  const std::size_t d = n + 2;
  s.labels.push_back("e");
  for (std::size_t i = 1; i <= n; ++i) s.labels.push_back(fmt::format("u{}", i));
  s.labels.push_back("v");
  s.products[{0, 0}] = unit_vector(d, 0);
  for (std::size_t i = 1; i <= n; ++i) s.products[{0, i}] = kHalf * unit_vector(d, i);
  s.weight = unit_vector(d, 0);
  return s;
}

TablePtr verified(TablePtr t) {
  auto r = is_bernstein(t);
  ensure(r.holds, "construction '" + t->name() + "' is not Bernstein");
  return t;
}

}  // namespace

TablePtr constant_algebra() {
  ProductMap p;
  p[{0, 0}] = {1, 0};
  return make_table("constant", {"e", "v"}, p, Vector{1, 0});
}

TablePtr elementary_algebra(std::size_t n) {
  std::vector<std::string> labels{"e"};
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(fmt::format("u{}", i));
  const std::size_t d = n + 1;
  ProductMap p;
  p[{0, 0}] = unit_vector(d, 0);
  for (std::size_t i = 1; i <= n; ++i) p[{0, i}] = kHalf * unit_vector(d, i);
  return make_table(fmt::format("elementary({})", n), labels, p, unit_vector(d, 0));
}

TablePtr three_dim_alpha(const Scalar& alpha) {
  ProductMap p;
  p[{0, 0}] = {1, 0, 0};
  p[{0, 1}] = {0, kHalf, 0};
  p[{2, 2}] = {0, 4 * (1 - alpha), 0};
  p[{1, 2}] = {0, alpha - Scalar(3, 2), 0};
  auto t = make_table(fmt::format("three_dim_alpha({})", alpha.get_str()), {"e", "u1", "v1"}, p, Vector{1, 0, 0});
  Element x(t, {1, 2, 1});
  ensure(rank_of(coords_of(principal_powers(x, 3)), 3) == 3, "e + 2u1 + v1 does not generate");
  return t;
}

TablePtr example_not_train() {
  ProductMap p;
  p[{0, 0}] = {1, 0, 0};
  p[{0, 1}] = {0, kHalf, 0};
  p[{1, 2}] = {0, 1, 0};
  return make_table("example_not_train", {"e", "u", "v"}, p, Vector{1, 0, 0});
}

TablePtr shift_up_truncated(std::size_t n) {
  require(n >= 1, "shift algebra needs n >= 1");
  auto s = shift_layout(n);
  const std::size_t v = n + 1;
  for (std::size_t i = 1; i < n; ++i) s.products[{i, v}] = unit_vector(n + 2, i + 1);
  return make_table(fmt::format("shift_up({})", n), s.labels, s.products, s.weight);
}

TablePtr shift_down_truncated(std::size_t n) {
  require(n >= 1, "shift algebra needs n >= 1");
  auto s = shift_layout(n);
  const std::size_t v = n + 1;
  for (std::size_t i = 2; i <= n; ++i) s.products[{i, v}] = unit_vector(n + 2, i - 1);
  return make_table(fmt::format("shift_down({})", n), s.labels, s.products, s.weight);
}

TablePtr free_single_truncated(std::size_t n, const std::optional<std::vector<Scalar>>& betas) {
  require(n >= 4, "free singly generated truncation needs n >= 4");
  const std::size_t m = n - 2;  // number of u's
  std::vector<Scalar> beta = betas.value_or(std::vector<Scalar>(m));
  require(beta.size() == m, "betas must have length n - 2");
  std::vector<std::string> labels{"e"};
  for (std::size_t i = 1; i <= m; ++i) labels.push_back(fmt::format("u{}", i));
  labels.push_back("v1");
  const std::size_t v = m + 1;
  ProductMap p;
  p[{0, 0}] = unit_vector(n, 0);
  for (std::size_t i = 1; i <= m; ++i) p[{0, i}] = kHalf * unit_vector(n, i);
  for (std::size_t i = 1; i < m; ++i) p[{i, v}] = unit_vector(n, i + 1);
  Vector top(n);
  for (std::size_t i = 1; i <= m; ++i) top[i] = beta[i - 1];
  if (!is_zero(top)) p[{m, v}] = top;
  Vector v2(n);
  v2[1] = -2;
  v2[2] = -4;
  p[{v, v}] = v2;
  bool zero_beta = std::all_of(beta.begin(), beta.end(), [](const Scalar& b) { return is_zero(b); });
  std::string name = zero_beta ? fmt::format("free_single({})", n) : fmt::format("free_single({}, betas)", n);
  return make_table(name, labels, p, unit_vector(n, 0));
}

TablePtr adjoin_idempotent(const AlgebraTable& nt, const std::vector<std::size_t>& u_idx,
                           const std::vector<std::size_t>& v_idx) {
  const std::size_t n = nt.dim();
  require(!nt.has_weight(), "adjoin_idempotent expects a weightless table");
  require(u_idx.size() + v_idx.size() == n, "U and V indices must partition the basis");
  std::vector<int> role(n, -1);  // 0 = U, 1 = V
  for (auto i : u_idx) {
    require(i < n && role[i] == -1, "bad U index");
    role[i] = 0;
  }
  for (auto i : v_idx) {
    require(i < n && role[i] == -1, "bad V index");
    role[i] = 1;
  }
  auto in_u = [&](const SparseVector& s) {
    return std::all_of(s.begin(), s.end(), [&](const auto& kc) { return role[kc.first] == 0; });
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const auto& p = nt.product(i, j);
      if (role[i] == 0 && role[j] == 0) require(p.empty(), "U^2 != 0: " + nt.labels()[i] + "*" + nt.labels()[j]);
      else require(in_u(p), "product " + nt.labels()[i] + "*" + nt.labels()[j] + " leaves U");
    }
  const std::size_t d = n + 1;
  std::vector<std::string> labels{"e"};
  for (const auto& l : nt.labels()) {
    require(l != "e", "label 'e' is reserved for the adjoined idempotent");
    labels.push_back(l);
  }
  ProductMap p;
  p[{0, 0}] = unit_vector(d, 0);
  for (auto i : u_idx) p[{0, i + 1}] = kHalf * unit_vector(d, i + 1);
  for (const auto& [key, value] : nt.products()) {
    Vector w(d);
    for (std::size_t k = 0; k < n; ++k) w[k + 1] = value[k];
    p[{key.first + 1, key.second + 1}] = w;
  }
  return verified(make_table(nt.name() + "+e", labels, p, unit_vector(d, 0)));
}

ZhevlakovTruncation zhevlakov_truncated(std::size_t num_vars, std::size_t max_len) {
  require(num_vars >= 2, "Zhevlakov truncation needs at least two letters");
  require(max_len >= 1 && max_len <= num_vars, "word length bound must be in 1..num_vars");
  // Regular words as index sets, ordered by length then lexicographically.
  std::vector<std::vector<std::size_t>> words;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<bool> pick(num_vars, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(len), true);
    std::vector<std::vector<std::size_t>> level;
    do {
      std::vector<std::size_t> w;
      for (std::size_t i = 0; i < num_vars; ++i)
        if (pick[i]) w.push_back(i + 1);
      level.push_back(w);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(level.begin(), level.end());
    words.insert(words.end(), level.begin(), level.end());
  }
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::string> labels;
  ZhevlakovTruncation z;
  for (std::size_t k = 0; k < words.size(); ++k) {
    index[words[k]] = k;
    std::string l;
    for (auto i : words[k]) l += fmt::format("x{}", i);
    labels.push_back(l);
    (words[k].size() == 1 ? z.v_idx : z.u_idx).push_back(k);
  }
  const std::size_t d = words.size();
  ProductMap p;
  auto set = [&](std::size_t a, std::size_t b, std::size_t target, int sign) {
    auto key = std::minmax(a, b);
    p[{key.first, key.second}] = Scalar(sign) * unit_vector(d, target);
  };
  for (std::size_t a = 0; a < d; ++a) {
    const auto& w = words[a];
    for (std::size_t i = 1; i <= num_vars; ++i) {
      std::size_t b = index.at({i});
      if (w.size() == 1) {
        // x_j * x_i = x_j x_i for j < i
        if (w[0] < i && max_len >= 2) set(a, b, index.at({w[0], i}), 1);
        continue;
      }
      // Insertion needs i > first letter, no repeated letter, room below max_len.
      if (i <= w[0] || w.size() == max_len || std::find(w.begin(), w.end(), i) != w.end()) continue;
      std::size_t inversions = std::count_if(w.begin(), w.end(), [&](std::size_t j) { return j > i; });
      std::vector<std::size_t> merged = w;
      merged.insert(std::upper_bound(merged.begin(), merged.end(), i), i);
      set(a, b, index.at(merged), inversions % 2 == 0 ? 1 : -1);
    }
  }
  z.table = make_table(fmt::format("zhevlakov({},{})", num_vars, max_len), labels, p);
  return z;
}

TablePtr from_associative(const AssociativeTable& c, const std::vector<Vector>& s_basis,
                          const std::vector<std::string>& s_labels) {
  require(s_basis.size() == s_labels.size(), "S labels do not match S basis");
  require(is_independent(s_basis, c.dim()), "S basis is not linearly independent");
  require(c.is_associative(), "C is not associative on its basis");
  // S generates C: the closure of span(S) under products is everything.
  std::vector<Vector> span = span_basis(s_basis, c.dim());
  for (bool grew = true; grew;) {
    grew = false;
    auto current = span;
    for (const auto& x : current)
      for (const auto& y : current) {
        auto z = c.mul(x, y);
        if (!in_span(span, z)) {
          span.push_back(z);
          grew = true;
        }
      }
  }
  require(span.size() == c.dim(), "S does not generate C");
  const std::size_t nc = c.dim(), ns = s_basis.size(), d = 1 + nc + ns;
  std::vector<std::string> labels{"e"};
  for (const auto& l : c.labels) labels.push_back("c:" + l);
  for (const auto& l : s_labels) labels.push_back("s:" + l);
  ProductMap p;
  p[{0, 0}] = unit_vector(d, 0);
  for (std::size_t i = 0; i < nc; ++i) p[{0, 1 + i}] = kHalf * unit_vector(d, 1 + i);
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < ns; ++j) {
      Vector prod = c.mul(unit_vector(nc, i), s_basis[j]);
      if (is_zero(prod)) continue;
      Vector w(d);
      for (std::size_t k = 0; k < nc; ++k) w[1 + k] = prod[k];
      p[{1 + i, 1 + nc + j}] = w;
    }
  return verified(make_table("from_associative", labels, p, unit_vector(d, 0)));
}

bool is_ideal(const AlgebraTable& a, const std::vector<Vector>& basis) {
  for (std::size_t b = 0; b < a.dim(); ++b)
    for (const auto& x : basis)
      if (!in_span(basis, a.mul(unit_vector(a.dim(), b), x))) return false;
  return true;
}

std::vector<Vector> ideal_closure(const AlgebraTable& a, const std::vector<Vector>& seed) {
  std::vector<Vector> basis = independent_subset(seed, a.dim());
  for (std::size_t next = 0; next < basis.size(); ++next)
    for (std::size_t b = 0; b < a.dim(); ++b) {
      Vector z = a.mul(unit_vector(a.dim(), b), basis[next]);
      if (!in_span(basis, z)) basis.push_back(z);
    }
  return basis;
}

TablePtr quotient(const TablePtr& a, const std::vector<Vector>& ideal_basis) {
  const auto& A = *a;
  const std::size_t n = A.dim();
  auto ideal = independent_subset(ideal_basis, n);
  require(is_ideal(A, ideal), "subspace is not an ideal");
  if (A.has_weight())
    for (const auto& x : ideal) require(is_zero(A.weight_of(x)), "weight is undefined on the quotient: ideal is not in N");
  std::vector<Vector> full = ideal;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i) {
    auto trial = full;
    trial.push_back(unit_vector(n, i));
    if (rank_of(trial, n) == trial.size()) {
      full = std::move(trial);
      kept.push_back(i);
    }
  }
  require(!kept.empty(), "quotient by the whole algebra");
  Coordinates coords(full, n);
  const std::size_t k = kept.size(), off = ideal.size();
  std::vector<std::string> labels;
  for (auto i : kept) labels.push_back(A.labels()[i]);
  ProductMap p;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Vector c = coords.project(A.product_dense(kept[i], kept[j]));
      Vector w(c.begin() + static_cast<std::ptrdiff_t>(off), c.end());
      if (!is_zero(w)) p[{i, j}] = w;
    }
  std::optional<Vector> weight;
  if (A.has_weight()) {
    Vector w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = A.weight()[kept[i]];
    weight = w;
  }
  return make_table(A.name() + "/I", labels, p, weight);
}

Subalgebra subalgebra(const TablePtr& a, const std::vector<Vector>& generators) {
  const auto& A = *a;
  std::vector<Vector> basis = independent_subset(generators, A.dim());
  require(!basis.empty(), "subalgebra needs a nonzero generator");
  for (std::size_t next = 0; next < basis.size(); ++next)
    for (std::size_t j = 0; j <= next; ++j) {
      Vector z = A.mul(basis[next], basis[j]);
      if (!in_span(basis, z)) basis.push_back(z);
    }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i) labels.push_back(fmt::format("w{}", i + 1));
  auto t = std::make_shared<const AlgebraTable>(induced_table(A, basis, labels, A.name() + ".sub"));
  return {t, basis};
}

}  // namespace baric
