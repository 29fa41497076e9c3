#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "baric/scalar.hpp"

namespace baric {

// Finite-dimensional (not necessarily commutative) algebra on a labelled
// basis. Keys are ordered pairs; absent keys are zero products.
struct AssociativeTable {
  std::vector<std::string> labels;
  std::map<std::pair<std::size_t, std::size_t>, Vector> products;
  // Set when products past a degree bound were replaced by zero.
  bool truncated = false;
  std::size_t truncation_degree = 0;

  std::size_t dim() const { return labels.size(); }
  Vector mul(const Vector& x, const Vector& y) const;
  // (b_i b_j) b_k == b_i (b_j b_k) on all basis triples.
  bool is_associative() const;
};

}  // namespace baric
