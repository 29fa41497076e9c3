#pragma once

#include <optional>
#include <vector>

#include "baric/algebra.hpp"
#include "baric/univariate.hpp"

namespace baric {

struct ElementAnalysis {
  Element element;
  std::size_t degree = 0;             // dim alg(a)
  UnivariatePoly minimal_poly;        // monic, zero constant term
  std::vector<Element> power_basis;   // a, a^2, ..., a^degree
  std::optional<std::size_t> right_nilpotency_index;  // least m with a^m = 0
};

ElementAnalysis analyze_element(const Element& a);

// deg p = 1: X; 2: X^2 - wX; 3: X^3 - wX^2; >= 4: divisible by X^3 - wX^2.
bool minimal_poly_form_check(const ElementAnalysis& analysis);

struct SinglyGenerated {
  TablePtr table;             // basis (e, u1, ..., um, v1)
  std::vector<Vector> basis;  // the same basis in ambient coordinates
};

// alg(a) for w(a) = 1 in the basis e = a^2, u1 = a^3 - a^2, u_{i+1} = v1 u_i,
// v1 = a + a^2 - 2a^3. From dimension 4 on, checks v1^2 = -2u1 - 4u2 and U^2 = 0.
SinglyGenerated singly_generated_subalgebra(const Element& a);

// (a^3 - w a^2)(a - w/2)^(k-3), by f_{k+1} = a f_k - (w/2) f_k.
Element f_k(const Element& a, unsigned k);

struct TrainElementRank {
  std::optional<unsigned> rank;  // least m >= 3 with f_m(a) = 0
  unsigned searched_up_to = 0;
};

// Search bound dim + 2. When found and deg(a) >= 2, checks that the minimal
// polynomial is exactly the train form of that rank.
TrainElementRank train_element_rank(const Element& a);

}  // namespace baric
