#include "baric/trees.hpp"

namespace baric {

TreeCatalog::TreeCatalog(std::size_t max_leaves) : levels_(max_leaves + 1) {
  require(max_leaves >= 1, "tree catalog needs at least one leaf");
  levels_[1].push_back(Node{});
  for (std::size_t m = 2; m <= max_leaves; ++m)
    for (std::size_t i = 1; i < m; ++i)
      for (std::size_t l = 0; l < levels_[i].size(); ++l)
        for (std::size_t r = 0; r < levels_[m - i].size(); ++r) levels_[m].push_back(Node{i, l, r});
}

std::string TreeCatalog::describe(std::size_t leaves, std::size_t k) const {
  if (leaves == 1) return "a";
  const auto& nd = node(leaves, k);
  return "(" + describe(nd.left_leaves, nd.left) + " " + describe(leaves - nd.left_leaves, nd.right) + ")";
}

bool TreeCatalog::is_caterpillar(std::size_t leaves, std::size_t k) const {
  if (leaves <= 2) return true;
  const auto& nd = node(leaves, k);
  std::size_t rl = leaves - nd.left_leaves;
  if (nd.left_leaves == 1) return is_caterpillar(rl, nd.right);
  if (rl == 1) return is_caterpillar(nd.left_leaves, nd.left);
  return false;
}

}  // namespace baric
