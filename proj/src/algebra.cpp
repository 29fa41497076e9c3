#include "baric/algebra.hpp"

#include <set>

#include "baric/errors.hpp"

namespace baric {

AlgebraTable::AlgebraTable(std::string name, std::vector<std::string> labels, const ProductMap& products,
                           std::optional<Vector> weight)
    : name_(std::move(name)), labels_(std::move(labels)), weight_(std::move(weight)) {
  const std::size_t n = labels_.size();
  require(n > 0, "algebra must have positive dimension");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    require(!l.empty(), "empty basis label");
    require(seen.insert(l).second, "duplicate basis label '" + l + "'");
  }
  table_.assign(n * n, {});
  for (const auto& [key, value] : products) {
    auto [i, j] = key;
    require(i < n && j < n, "product index out of range");
    require(value.size() == n, "product vector length mismatch");
    SparseVector sv;
    for (std::size_t k = 0; k < n; ++k)
      if (!baric::is_zero(value[k])) sv.emplace_back(k, value[k]);
    table_[i * n + j] = sv;
    table_[j * n + i] = sv;
  }
  if (weight_) {
    const Vector& w = *weight_;
    require(w.size() == n, "weight vector length mismatch");
    require(!baric::is_zero(w), "weight functional is zero");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Scalar wp;
        for (const auto& [k, c] : product(i, j)) wp += c * w[k];
        require(wp == w[i] * w[j], "weight is not multiplicative on " + labels_[i] + "*" + labels_[j]);
      }
  }
}

std::optional<std::size_t> AlgebraTable::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

const Vector& AlgebraTable::weight() const {
  require(weight_.has_value(), "algebra '" + name_ + "' has no weight functional");
  return *weight_;
}

Vector AlgebraTable::product_dense(std::size_t i, std::size_t j) const {
  Vector v(dim());
  for (const auto& [k, c] : product(i, j)) v[k] = c;
  return v;
}

ProductMap AlgebraTable::products() const {
  ProductMap m;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i; j < dim(); ++j)
      if (!product(i, j).empty()) m[{i, j}] = product_dense(i, j);
  return m;
}

Vector AlgebraTable::mul(const Vector& x, const Vector& y) const {
  require(x.size() == dim() && y.size() == dim(), "element length mismatch");
  Vector r(dim());
  Scalar t;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (baric::is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (baric::is_zero(y[j])) continue;
      const auto& p = product(i, j);
      if (p.empty()) continue;
      t = x[i] * y[j];
      for (const auto& [k, c] : p) r[k] += t * c;
    }
  }
  return r;
}

Scalar AlgebraTable::weight_of(const Vector& x) const { return dot(weight(), x); }

Matrix AlgebraTable::left_mult(const Vector& x) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    auto col = mul(x, unit_vector(dim(), j));
    for (std::size_t i = 0; i < dim(); ++i) m(i, j) = col[i];
  }
  return m;
}

bool AlgebraTable::same_table(const AlgebraTable& other) const {
  return labels_ == other.labels_ && table_ == other.table_ && weight_ == other.weight_;
}

TablePtr make_table(std::string name, std::vector<std::string> labels, const ProductMap& products,
                    std::optional<Vector> weight) {
  return std::make_shared<const AlgebraTable>(std::move(name), std::move(labels), products, std::move(weight));
}

Element::Element(TablePtr algebra, Vector coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  require(algebra_ != nullptr, "element without algebra");
  require(coords_.size() == algebra_->dim(), "element length does not match algebra dimension");
}

Element Element::zero(const TablePtr& algebra) { return Element(algebra, zero_vector(algebra->dim())); }

Element Element::basis(const TablePtr& algebra, std::size_t i) {
  require(i < algebra->dim(), "basis index out of range");
  return Element(algebra, unit_vector(algebra->dim(), i));
}

Element Element::basis(const TablePtr& algebra, std::string_view label) {
  auto i = algebra->index_of(label);
  require(i.has_value(), "unknown basis label '" + std::string(label) + "'");
  return basis(algebra, *i);
}

namespace {
void same_algebra(const Element& a, const Element& b) {
  require(a.algebra() == b.algebra() || a.algebra()->same_table(*b.algebra()),
          "elements belong to different algebras");
}
}  // namespace

Element operator+(const Element& a, const Element& b) {
  same_algebra(a, b);
  return Element(a.algebra(), a.coords() + b.coords());
}

Element operator-(const Element& a, const Element& b) {
  same_algebra(a, b);
  return Element(a.algebra(), a.coords() - b.coords());
}

Element operator*(const Scalar& c, const Element& a) { return Element(a.algebra(), c * a.coords()); }

Element multiply(const Element& x, const Element& y) {
  same_algebra(x, y);
  return Element(x.algebra(), x.algebra()->mul(x.coords(), y.coords()));
}

Element principal_power(const Element& x, unsigned k) {
  require(k >= 1, "principal power exponent must be >= 1");
  Element p = x;
  for (unsigned i = 1; i < k; ++i) p = multiply(p, x);
  return p;
}

std::vector<Element> principal_powers(const Element& x, unsigned k_max) {
  std::vector<Element> out;
  if (k_max == 0) return out;
  out.push_back(x);
  for (unsigned k = 2; k <= k_max; ++k) out.push_back(multiply(out.back(), x));
  return out;
}

Scalar weight_of(const Element& x) { return x.algebra()->weight_of(x.coords()); }

Element poly_eval(const Element& x, const UnivariatePoly& p) {
  require(is_zero(p.coeff(0)), "polynomial has a nonzero constant term; the algebra has no unit");
  Element acc = Element::zero(x.algebra());
  if (p.degree() < 1) return acc;
  auto pw = principal_powers(x, static_cast<unsigned>(p.degree()));
  for (std::size_t k = 1; k <= pw.size(); ++k)
    if (!is_zero(p.coeff(k))) acc = acc + p.coeff(k) * pw[k - 1];
  return acc;
}

std::vector<Vector> coords_of(const std::vector<Element>& elements) {
  std::vector<Vector> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.coords());
  return out;
}

std::vector<Element> elements_of(const TablePtr& algebra, const std::vector<Vector>& vectors) {
  std::vector<Element> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.emplace_back(algebra, v);
  return out;
}

Matrix left_mult_operator(const Element& x, const std::vector<Element>& carrier) {
  const std::size_t k = carrier.size();
  if (k == 0) return Matrix(0, 0);
  Coordinates coords(coords_of(carrier), x.dim());
  require(coords.size() == k, "carrier is not linearly independent");
  Matrix m(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    auto image = coords.of(x.algebra()->mul(x.coords(), carrier[j].coords()));
    require(image.has_value(), "carrier is not invariant under the multiplication operator");
    for (std::size_t i = 0; i < k; ++i) m(i, j) = (*image)[i];
  }
  return m;
}

std::string format_vector(const AlgebraTable& a, const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    bool neg = sgn(v[i]) < 0;
    Scalar mag = neg ? Scalar(-v[i]) : v[i];
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mag != 1) out += mag.get_str() + " ";
    out += a.labels()[i];
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const Element& x) { return format_vector(*x.algebra(), x.coords()); }

AlgebraTable induced_table(const AlgebraTable& a, const std::vector<Vector>& basis, std::vector<std::string> labels,
                           std::string name) {
  require(labels.size() == basis.size(), "label count does not match basis size");
  Coordinates coords(basis, a.dim());
  const std::size_t k = basis.size();
  ProductMap products;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      auto c = coords.of(a.mul(basis[i], basis[j]));
      require(c.has_value(), "subspace is not closed under multiplication");
      if (!is_zero(*c)) products[{i, j}] = *c;
    }
  std::optional<Vector> weight;
  if (a.has_weight()) {
    Vector w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = a.weight_of(basis[i]);
    if (!is_zero(w)) weight = std::move(w);
  }
  return AlgebraTable(std::move(name), std::move(labels), products, std::move(weight));
}

}  // namespace baric
