#pragma once

#include <optional>
#include <vector>

#include "baric/algebra.hpp"
#include "baric/associative.hpp"

namespace baric {

// Basis (e, v): e^2 = e, ev = v^2 = 0, w(e) = 1. The two-dimensional singly
// generated algebra; its table is read with e idempotent.
TablePtr constant_algebra();

// Basis (e, u1..un): eu_i = u_i/2, all other products zero. Satisfies
// x^2 = w(x) x.
TablePtr elementary_algebra(std::size_t n);

// Basis (e, u1, v1): eu1 = u1/2, v1^2 = 4(1 - alpha) u1, u1 v1 = (alpha - 3/2) u1.
TablePtr three_dim_alpha(const Scalar& alpha);

// Basis (e, u, v): e^2 = e, eu = u/2, uv = u. Algebraic of degree 3, not train.
TablePtr example_not_train();

// Basis (e, u1..un, v): u_i v = u_{i+1}, with u_n v = 0. The top product is
// the quotient by the tail ideal spanned by u_{n+1}, u_{n+2}, ...
TablePtr shift_up_truncated(std::size_t n);

// Basis (e, u1..un, v): u_i v = u_{i-1}, u_1 v = 0. A subalgebra of the
// infinite descending shift, so no truncation is involved.
TablePtr shift_down_truncated(std::size_t n);

// Basis (e, u1..u_{n-2}, v1): v1 u_i = u_{i+1}, v1 u_{n-2} = sum beta_i u_i,
// v1^2 = -2u1 - 4u2, U^2 = 0. With betas zero this is the quotient of the free
// one-generator algebra by the tail ideal from u_{n-1}. Generated by
// e + 2u1 + v1.
TablePtr free_single_truncated(std::size_t n, const std::optional<std::vector<Scalar>>& betas = std::nullopt);

// Adds e with e^2 = e, eu = u/2, ev = 0 and weight w(ae + n) = a to a
// weightless table. Requires U^2 = 0, UV in U, V^2 in U.
TablePtr adjoin_idempotent(const AlgebraTable& n_table, const std::vector<std::size_t>& u_idx,
                           const std::vector<std::size_t>& v_idx);

struct ZhevlakovTruncation {
  TablePtr table;  // weightless
  std::vector<std::size_t> u_idx;  // words of length >= 2
  std::vector<std::size_t> v_idx;  // letters
};

// Regular words x_{i1}..x_{ik}, i1 < ... < ik, k <= max_len, over num_vars
// letters. Products that would exceed max_len are zero: the span of longer
// words is an ideal.
ZhevlakovTruncation zhevlakov_truncated(std::size_t num_vars, std::size_t max_len);

// K x C x S with (a, c1, s1)(b, c2, s2) = (ab, (a c2 + b c1)/2 + c1 s2 + c2 s1, 0).
// Basis labels: e, c:<label> for C, s:<label> for S. S must generate C.
TablePtr from_associative(const AssociativeTable& c, const std::vector<Vector>& s_basis,
                          const std::vector<std::string>& s_labels);

// Table on a complement of the ideal; labels of the kept basis vectors.
TablePtr quotient(const TablePtr& a, const std::vector<Vector>& ideal_basis);

struct Subalgebra {
  TablePtr table;
  std::vector<Vector> basis;  // in ambient coordinates
};

// Closure of span(generators) under products.
Subalgebra subalgebra(const TablePtr& a, const std::vector<Vector>& generators);

// Smallest subspace containing `seed` and closed under multiplication by A.
std::vector<Vector> ideal_closure(const AlgebraTable& a, const std::vector<Vector>& seed);
bool is_ideal(const AlgebraTable& a, const std::vector<Vector>& basis);

}  // namespace baric
