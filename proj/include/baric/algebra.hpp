#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "baric/linalg.hpp"
#include "baric/scalar.hpp"
#include "baric/univariate.hpp"

namespace baric {

using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;
// Keys are (i, j) with i <= j; absent keys are zero products.
using ProductMap = std::map<std::pair<std::size_t, std::size_t>, Vector>;

// Commutative algebra given by structure constants on a labelled basis.
class AlgebraTable {
 public:
  AlgebraTable(std::string name, std::vector<std::string> labels, const ProductMap& products,
               std::optional<Vector> weight = std::nullopt);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool has_weight() const { return weight_.has_value(); }
  const Vector& weight() const;

  const SparseVector& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Vector product_dense(std::size_t i, std::size_t j) const;
  // Nonzero products keyed by (i, j), i <= j.
  ProductMap products() const;

  Vector mul(const Vector& x, const Vector& y) const;
  Scalar weight_of(const Vector& x) const;
  // Matrix of y -> x y on the whole algebra.
  Matrix left_mult(const Vector& x) const;

  // Structural equality: labels, products and weight. Names are ignored.
  bool same_table(const AlgebraTable& other) const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<SparseVector> table_;  // dim * dim, symmetric
  std::optional<Vector> weight_;
};

using TablePtr = std::shared_ptr<const AlgebraTable>;

TablePtr make_table(std::string name, std::vector<std::string> labels, const ProductMap& products,
                    std::optional<Vector> weight = std::nullopt);

class Element {
 public:
  Element(TablePtr algebra, Vector coords);
  static Element zero(const TablePtr& algebra);
  static Element basis(const TablePtr& algebra, std::size_t i);
  static Element basis(const TablePtr& algebra, std::string_view label);

  const TablePtr& algebra() const { return algebra_; }
  const Vector& coords() const { return coords_; }
  std::size_t dim() const { return coords_.size(); }
  bool is_zero() const { return baric::is_zero(coords_); }

  friend bool operator==(const Element& a, const Element& b) { return a.coords_ == b.coords_; }

 private:
  TablePtr algebra_;
  Vector coords_;
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const Scalar& c, const Element& a);

Element multiply(const Element& x, const Element& y);
inline Element operator*(const Element& x, const Element& y) { return multiply(x, y); }
// x^k = x^(k-1) x, k >= 1.
Element principal_power(const Element& x, unsigned k);
// x, x^2, ..., x^k_max.
std::vector<Element> principal_powers(const Element& x, unsigned k_max);
Scalar weight_of(const Element& x);
// Requires a zero constant term: the algebras here have no unit.
Element poly_eval(const Element& x, const UnivariatePoly& p);
// Matrix of L_x on span(carrier) in carrier coordinates.
Matrix left_mult_operator(const Element& x, const std::vector<Element>& carrier);

std::vector<Vector> coords_of(const std::vector<Element>& elements);
std::vector<Element> elements_of(const TablePtr& algebra, const std::vector<Vector>& vectors);

// "e + 3u", "-1/2 u1 + v1", "0".
std::string to_string(const Element& x);
std::string format_vector(const AlgebraTable& a, const Vector& v);

// Table of the subalgebra spanned by `basis` (must be closed under products),
// written in the coordinates of `basis`. The weight is inherited when the
// restriction is nonzero.
AlgebraTable induced_table(const AlgebraTable& a, const std::vector<Vector>& basis,
                           std::vector<std::string> labels, std::string name);

}  // namespace baric
