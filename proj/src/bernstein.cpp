#include "baric/bernstein.hpp"

#include "baric/errors.hpp"

namespace baric {

std::vector<Vector> barideal_basis(const AlgebraTable& a) {
  return kernel(Matrix::from_rows({a.weight()}));
}

SymbolicElement generic_weight_one(const TablePtr& a, const std::string& prefix) {
  const Vector& w = a->weight();
  std::size_t pivot = 0;
  while (is_zero(w[pivot])) ++pivot;
  Element anchor(a, (1 / w[pivot]) * unit_vector(a->dim(), pivot));
  return generic_affine(anchor, prefix, barideal_basis(*a));
}

namespace {

IdentityResult with_witness(IdentityResult r, const std::vector<SymbolicElement>& xs) {
  if (r.holds) return r;
  for (const auto& x : xs)
    for (auto v : x.vars) r.witness.try_emplace(v, 0);
  for (const auto& x : xs) r.witness_elements.push_back(evaluate(x, r.witness));
  return r;
}

}  // namespace

IdentityResult is_bernstein(const TablePtr& a) {
  require(a->has_weight(), "Bernstein check needs a weight functional");
  // Homogeneous of degree 4, so the weight-one slice decides it.
  SymbolicElement x = generic_weight_one(a, "x");
  SymbolicElement x2 = x * x;
  SymbolicElement res = x2 * x2 - x2;
  return with_witness(check_identity(res.coords), {x});
}

IdentityResult jordan_identity(const TablePtr& a) {
  // Linear in y: check y over the basis. Cubic homogeneous in x.
  SymbolicElement x = a->has_weight() ? generic_weight_one(a, "x") : generic_element(a, "x");
  SymbolicElement x2 = x * x;
  for (std::size_t k = 0; k < a->dim(); ++k) {
    SymbolicElement y = lift(Element::basis(a, k));
    SymbolicElement res = x * (x2 * y) - x2 * (x * y);
    auto r = check_identity(res.coords);
    if (!r.holds) {
      r = with_witness(std::move(r), {x});
      r.witness_elements.push_back(Element::basis(a, k));
      return r;
    }
  }
  return {};
}

Element find_idempotent(const TablePtr& a) {
  const Vector& w = a->weight();
  std::size_t pivot = 0;
  while (is_zero(w[pivot])) ++pivot;
  Element x(a, (1 / w[pivot]) * unit_vector(a->dim(), pivot));
  Element e = x * x;
  require(e * e == e, "square of a weight-one element is not idempotent; the algebra is not Bernstein");
  return e;
}

Element idempotent_family(const Element& e, const Element& u) {
  require(Scalar(2) * (e * u) == u && weight_of(u) == 0, "element is not in the U-component of the idempotent");
  Element f = e + u + u * u;
  ensure(f * f == f, "e + u + u^2 is not idempotent");
  return f;
}

std::vector<Vector> PeirceDecomposition::N_coords() const {
  auto n = U_coords();
  auto v = V_coords();
  n.insert(n.end(), v.begin(), v.end());
  return n;
}

PeirceDecomposition peirce(const TablePtr& a, const Element& e) {
  require(e * e == e && weight_of(e) == 1, "Peirce decomposition needs an idempotent of weight one");
  const std::size_t n = a->dim();
  Matrix Le = a->left_mult(e.coords());
  auto eigen = [&](const Scalar& lambda) {
    Matrix m(n + 1, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Le(i, j) - (i == j ? lambda : Scalar(0));
    for (std::size_t j = 0; j < n; ++j) m(n, j) = a->weight()[j];
    return elements_of(a, kernel(m));
  };
  PeirceDecomposition p{e, eigen(Scalar(1, 2)), eigen(0)};
  require(p.U.size() + p.V.size() + 1 == n, "not a Bernstein Peirce decomposition: N is not the sum of the 1/2 and 0 eigenspaces");
  return p;
}

PeirceDecomposition peirce(const TablePtr& a) { return peirce(a, find_idempotent(a)); }

std::vector<Element> lyubich_ideal(const PeirceDecomposition& p) {
  const auto& A = *p.algebra();
  const std::size_t n = A.dim(), r = p.U.size();
  if (r == 0) return {};
  // Columns: coefficient c_i; rows: coordinates of sum_i c_i u_i u_j, all j.
  Matrix m(n * r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Vector prod = A.mul(p.U[i].coords(), p.U[j].coords());
      for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = prod[k];
    }
  std::vector<Element> out;
  for (const auto& c : kernel(m)) {
    Vector v(n);
    for (std::size_t i = 0; i < r; ++i) axpy(v, c[i], p.U[i].coords());
    out.emplace_back(p.algebra(), v);
  }
  auto basis = coords_of(out);
  for (std::size_t b = 0; b < n && !basis.empty(); ++b)
    for (const auto& l : basis)
      ensure(in_span(basis, A.mul(unit_vector(n, b), l)), "Lyubich subspace is not an ideal");
  return out;
}

StructureReport classify(const TablePtr& a) {
  StructureReport r;
  r.bernstein_check = is_bernstein(a);
  r.is_bernstein = r.bernstein_check.holds;
  if (!r.is_bernstein) return r;
  auto p = peirce(a);
  const auto& A = *a;
  r.type_pair = {1 + p.U.size(), p.V.size()};
  std::vector<Vector> u2;
  for (std::size_t i = 0; i < p.U.size(); ++i)
    for (std::size_t j = i; j < p.U.size(); ++j) u2.push_back(A.mul(p.U[i].coords(), p.U[j].coords()));
  r.is_exceptional = rank_of(u2, A.dim()) == 0;
  r.is_nuclear = same_span(u2, p.V_coords(), A.dim());
  r.lyubich_basis = lyubich_ideal(p);

  bool identity = jordan_identity(a).holds;
  bool criterion = true;
  for (std::size_t i = 0; i < p.V.size() && criterion; ++i)
    for (std::size_t j = i; j < p.V.size() && criterion; ++j)
      criterion = is_zero(A.mul(p.V[i].coords(), p.V[j].coords()));
  if (criterion && !p.V.empty()) {
    SymbolicElement v = generic_element(a, "v", p.V_coords());
    for (const auto& u : p.U) {
      if (!((lift(u) * v) * v).is_zero()) {
        criterion = false;
        break;
      }
    }
  }
  ensure(identity == criterion, "Jordan identity and the Peirce criterion disagree");
  r.is_jordan = identity;
  return r;
}

TablePtr zero_v_squared(const PeirceDecomposition& p) {
  const auto& A = *p.algebra();
  const std::size_t n = A.dim();
  std::vector<Vector> basis{p.e.coords()};
  for (const auto& u : p.U) basis.push_back(u.coords());
  const std::size_t v0 = basis.size();
  for (const auto& v : p.V) basis.push_back(v.coords());
  Coordinates coords(basis, n);
  std::vector<Vector> vpart(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector c = coords.project(unit_vector(n, i));
    Vector v(n);
    for (std::size_t k = v0; k < basis.size(); ++k) axpy(v, c[k], basis[k]);
    vpart[i] = std::move(v);
  }
  ProductMap products;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector prod = A.product_dense(i, j) - A.mul(vpart[i], vpart[j]);
      if (!is_zero(prod)) products[{i, j}] = prod;
    }
  auto t = make_table(A.name() + "/V2", A.labels(), products, A.weight());
  ensure(is_bernstein(t).holds, "removing V^2 broke the Bernstein identity");
  return t;
}

}  // namespace baric
