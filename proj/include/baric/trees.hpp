#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "baric/errors.hpp"

namespace baric {

// Full binary trees with a given number of leaves, i.e. the parenthesized
// products of m copies of one element. Trees are numbered per leaf count;
// tree k with m leaves splits into (left subtree with i leaves, right subtree).
class TreeCatalog {
 public:
  struct Node {
    std::size_t left_leaves = 0;  // 0 for the single leaf
    std::size_t left = 0;
    std::size_t right = 0;
  };

  explicit TreeCatalog(std::size_t max_leaves);

  std::size_t max_leaves() const { return levels_.size() - 1; }
  std::size_t count(std::size_t leaves) const { return levels_.at(leaves).size(); }
  const Node& node(std::size_t leaves, std::size_t k) const { return levels_.at(leaves).at(k); }
  // "((a a) a)"
  std::string describe(std::size_t leaves, std::size_t k) const;
  // Every internal node has a leaf child. Under commutativity these are the
  // trees equal to the principal power.
  bool is_caterpillar(std::size_t leaves, std::size_t k) const;

  // values[m][k] = evaluation of tree k with m leaves at x.
  template <class T, class Mul>
  std::vector<std::vector<T>> evaluate(const T& x, Mul mul) const {
    std::vector<std::vector<T>> values(levels_.size());
    if (levels_.size() > 1) values[1].push_back(x);
    for (std::size_t m = 2; m < levels_.size(); ++m) {
      values[m].reserve(levels_[m].size());
      for (const auto& nd : levels_[m])
        values[m].push_back(mul(values[nd.left_leaves][nd.left], values[m - nd.left_leaves][nd.right]));
    }
    return values;
  }

 private:
  std::vector<std::vector<Node>> levels_;
};

// Sum over all trees with q leaves, by T_q = sum_{i} T_i T_{q-i}. Entry 0 is
// a placeholder.
template <class T, class Mul, class Add>
std::vector<T> tree_sums(const T& x, std::size_t q_max, Mul mul, Add add) {
  std::vector<T> t(q_max + 1, x);
  if (q_max == 0) return t;
  t[1] = x;
  for (std::size_t q = 2; q <= q_max; ++q) {
    T acc = mul(t[1], t[q - 1]);
    for (std::size_t i = 2; i < q; ++i) acc = add(acc, mul(t[i], t[q - i]));
    t[q] = acc;
  }
  return t;
}

}  // namespace baric
