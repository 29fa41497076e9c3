#include "baric/associative.hpp"

#include "baric/errors.hpp"

namespace baric {

Vector AssociativeTable::mul(const Vector& x, const Vector& y) const {
  require(x.size() == dim() && y.size() == dim(), "associative element length mismatch");
  Vector r(dim());
  for (const auto& [key, value] : products) {
    const auto& [i, j] = key;
    if (is_zero(x[i]) || is_zero(y[j])) continue;
    axpy(r, x[i] * y[j], value);
  }
  return r;
}

bool AssociativeTable::is_associative() const {
  const std::size_t n = dim();
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector ij = mul(basis[i], basis[j]);
      for (std::size_t k = 0; k < n; ++k)
        if (mul(ij, basis[k]) != mul(basis[i], mul(basis[j], basis[k]))) return false;
    }
  return true;
}

}  // namespace baric
