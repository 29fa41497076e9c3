#pragma once

#include <utility>
#include <vector>

#include "baric/algebra.hpp"
#include "baric/symbolic.hpp"

namespace baric {

// Kernel of the weight functional.
std::vector<Vector> barideal_basis(const AlgebraTable& a);

// Generic element of weight one: b/w(b) + N for the first basis vector b of
// nonzero weight. Homogeneous identities need only be checked on this slice.
SymbolicElement generic_weight_one(const TablePtr& a, const std::string& prefix);

// (x^2)^2 - w(x)^2 x^2 == 0.
IdentityResult is_bernstein(const TablePtr& a);
// x(x^2 y) - x^2(x y) == 0.
IdentityResult jordan_identity(const TablePtr& a);

// x^2 for the first basis vector x of nonzero weight, scaled to weight one.
Element find_idempotent(const TablePtr& a);
// e + u + u^2, which is again idempotent.
Element idempotent_family(const Element& e, const Element& u);

struct PeirceDecomposition {
  Element e;
  std::vector<Element> U;  // 2eu = u, w(u) = 0
  std::vector<Element> V;  // ev = 0, w(v) = 0

  const TablePtr& algebra() const { return e.algebra(); }
  std::vector<Vector> U_coords() const { return coords_of(U); }
  std::vector<Vector> V_coords() const { return coords_of(V); }
  std::vector<Vector> N_coords() const;
};

PeirceDecomposition peirce(const TablePtr& a, const Element& e);
PeirceDecomposition peirce(const TablePtr& a);

// {u in U : uU = 0}.
std::vector<Element> lyubich_ideal(const PeirceDecomposition& p);

struct StructureReport {
  bool is_bernstein = false;
  IdentityResult bernstein_check;
  bool is_nuclear = false;
  bool is_exceptional = false;
  bool is_jordan = false;
  std::vector<Element> lyubich_basis;
  std::pair<std::size_t, std::size_t> type_pair{0, 0};
};

// Throws InvariantError if the Jordan identity and the Peirce criterion
// (V^2 = 0 and (uv)v = 0) disagree.
StructureReport classify(const TablePtr& a);

// The table with every product of two V-components removed. Labels are kept:
// b_i b_j becomes b_i b_j - v_i v_j where v_i is the V-part of b_i.
TablePtr zero_v_squared(const PeirceDecomposition& p);

}  // namespace baric
