#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "baric/algebra.hpp"
#include "baric/multipoly.hpp"

namespace baric {

using PolyVector = std::vector<MultiPoly>;

// Element whose coordinates are polynomials in commuting indeterminates.
struct SymbolicElement {
  TablePtr algebra;
  PolyVector coords;
  std::vector<VarId> vars;  // indeterminates introduced by generic_element

  std::size_t dim() const { return coords.size(); }
  bool is_zero() const;
};

SymbolicElement lift(const Element& x);
SymbolicElement symbolic_zero(const TablePtr& algebra);
SymbolicElement operator+(const SymbolicElement& a, const SymbolicElement& b);
SymbolicElement operator-(const SymbolicElement& a, const SymbolicElement& b);
SymbolicElement operator*(const MultiPoly& c, const SymbolicElement& a);
SymbolicElement multiply(const SymbolicElement& x, const SymbolicElement& y);
inline SymbolicElement operator*(const SymbolicElement& x, const SymbolicElement& y) { return multiply(x, y); }
MultiPoly weight_of(const SymbolicElement& x);
Element evaluate(const SymbolicElement& x, const std::map<VarId, Scalar>& values);

// sum_i t_i b_i over the basis vectors of `restrict_to`, or over the whole
// basis when absent.
SymbolicElement generic_element(const TablePtr& algebra, const std::string& prefix,
                                const std::optional<std::vector<Vector>>& restrict_to = std::nullopt);
// anchor + generic element of the span, e.g. a weight-one slice e + N.
SymbolicElement generic_affine(const Element& anchor, const std::string& prefix, const std::vector<Vector>& span);

// x, x^2, ..., x^k_max.
std::vector<SymbolicElement> generic_principal_powers(const SymbolicElement& x, unsigned k_max);
// Least p <= bound with L_x^p == 0 on span(carrier), found by applying L_x
// to each carrier basis vector. Requires the carrier to be L_x-invariant.
std::optional<std::size_t> operator_nil_index(const SymbolicElement& x, const std::vector<Vector>& carrier,
                                              std::size_t bound);

struct IdentityResult {
  bool holds = true;
  // Values of the indeterminates at a point where the residual is nonzero.
  std::map<VarId, Scalar> witness;
  // The generic elements evaluated at the witness.
  std::vector<Element> witness_elements;
};

// True iff every polynomial vanishes identically. Otherwise a witness is
// found by substituting 0, 1, -1, 2, -2, ... one variable at a time.
IdentityResult check_identity(const PolyVector& residual);

using IdentityExpr = std::function<SymbolicElement(const std::vector<SymbolicElement>&)>;
// Evaluates `expr` on `arity` independent generic elements (restricted to
// `restrict_to` when given) and checks that the result vanishes.
IdentityResult check_identity(const TablePtr& algebra, std::size_t arity, const IdentityExpr& expr,
                              const std::optional<std::vector<Vector>>& restrict_to = std::nullopt);

// Rank of a matrix of polynomials by fraction-free elimination.
std::size_t symbolic_rank(std::vector<PolyVector> rows);

struct DegreeResult {
  std::size_t degree = 0;
  bool certified = false;
  std::string method;
};

// Largest dim alg(x). Lower bound from random rational points; certified by
// symbolic rank when dim <= symbolic_dim_limit, or when it reaches dim.
DegreeResult generic_degree(const TablePtr& algebra, unsigned seed = 0, std::size_t symbolic_dim_limit = 6);

}  // namespace baric
