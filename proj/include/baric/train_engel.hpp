#pragma once

#include <optional>
#include <string>
#include <vector>

#include "baric/algebra.hpp"
#include "baric/bernstein.hpp"
#include "baric/trees.hpp"
#include "baric/univariate.hpp"

namespace baric {

struct TrainReport {
  bool is_train = false;
  std::optional<unsigned> rank;
  // Train polynomial at w = 1; the equation is homogeneous in (x, w(x)).
  std::optional<UnivariatePoly> train_poly;
  std::optional<std::size_t> nil_index_N;
  bool is_locally_train = false;
  // Least p with L_v^p = 0 on U for generic v in V.
  std::optional<std::size_t> operator_index_U;
  std::size_t nil_search_bound = 0;
  unsigned rank_search_bound = 0;
};

// Nil index of generic x in N (bound dim N + 2), least r with
// f_r(generic x) = 0 (bound dim + 2), and nilpotency of generic L_v on U.
// The three routes must agree; disagreement is an InvariantError.
TrainReport train_analysis(const TablePtr& a);
bool locally_train_analysis(const TablePtr& a);

enum class OperatorCarrier { U, Lyubich };

// Least p with (L_v)^p = 0 on the carrier for generic v in V; bound dim + 1.
std::optional<std::size_t> operator_nilpotency_check(const PeirceDecomposition& p, OperatorCarrier carrier);

// L_x^{k+3} = L_v^k o L_x^3 on N for generic x = u + v, k = 0..k_max.
bool lemma_L_k3_check(const PeirceDecomposition& p, unsigned k_max = 4);

// Subalgebra on which the nil and Engel analyses run.
struct Carrier {
  TablePtr algebra;
  std::vector<Vector> basis;
  std::string name;
  bool sq_sq_zero = false;  // (x^2)^2 = 0 for all x in the carrier
};

// Checks closure under products and evaluates (x^2)^2 = 0 symbolically.
Carrier make_carrier(const TablePtr& a, std::vector<Vector> basis, std::string name);

struct TreeValue {
  std::size_t tree = 0;
  std::string shape;
  Element value;
};

// All parenthesized products of m copies of a. For m >= 4, every tree that
// is not a caterpillar must vanish (InvariantError otherwise).
std::vector<TreeValue> strong_nilpotency_oracle(const Carrier& c, const Element& a, std::size_t m);
// Least m such that every product of m' copies vanishes for m <= m' <= m_max.
std::optional<std::size_t> strong_nilpotency_index(const Carrier& c, const Element& a, std::size_t m_max);
// Least m <= bound with a^m = 0.
std::optional<std::size_t> right_nilpotency_index(const Element& a, std::size_t bound);

// Sum over all trees with q leaves; checked against 2^{q-2} a^q.
Element yagzhev_Tq(const Carrier& c, const Element& a, std::size_t q);

// T_q(x) = 2^{q-2} x^q for generic x in the carrier, 2 <= q <= q_max, by full
// tree enumeration when q < 8 and by the split recursion otherwise.
bool yagzhev_identity_generic(const Carrier& c, std::size_t q_max);

// Least p <= dim + 1 with (L_x)^p = 0 for generic x in the carrier.
std::optional<std::size_t> engel_check(const Carrier& c);

struct EngelYagzhevReport {
  bool satisfies_sq_sq_zero = false;
  std::optional<std::size_t> nil_bounded_index;
  std::optional<std::size_t> engel_index;
  // Least q with T_q = 0 identically, verified for every q up to the bound.
  std::optional<std::size_t> yagzhev_index;
  std::size_t yagzhev_verified_upto = 0;
  std::size_t nil_search_bound = 0;
  std::size_t engel_search_bound = 0;
};

// On carriers with (x^2)^2 = 0 the nil, Engel and Yagzhev verdicts must agree.
EngelYagzhevReport engel_yagzhev(const Carrier& c);

struct PowerChain {
  std::vector<std::size_t> power_dims;    // dim I^1, I^2, ...
  std::vector<std::size_t> plenary_dims;  // dim I^(1), I^(2), ...
  std::optional<std::size_t> nilpotency_index;   // least n with I^n = 0
  std::optional<std::size_t> solvability_index;  // least n with I^(n) = 0
};

PowerChain ideal_power_chain(const TablePtr& a, const std::vector<Vector>& ideal_basis);

// span{xy : x in a, y in b}
std::vector<Vector> product_space(const AlgebraTable& t, const std::vector<Vector>& a, const std::vector<Vector>& b);

}  // namespace baric
