#pragma once

#include <random>

#include "baric/algebra.hpp"
#include "baric/constructions.hpp"

namespace fixtures {

using namespace baric;

// e, u, v with eu = u/2 and u^2 = v: U^2 = V.
inline TablePtr nuclear3() {
  ProductMap p;
  p[{0, 0}] = {1, 0, 0};
  p[{0, 1}] = {0, Scalar(1, 2), 0};
  p[{1, 1}] = {0, 0, 1};
  return make_table("nuclear3", {"e", "u", "v"}, p, Vector{1, 0, 0});
}

// e, u, v1, v2 with u^2 = v1: neither nuclear nor exceptional.
inline TablePtr mixed4() {
  ProductMap p;
  p[{0, 0}] = {1, 0, 0, 0};
  p[{0, 1}] = {0, Scalar(1, 2), 0, 0};
  p[{1, 1}] = {0, 0, 1, 0};
  return make_table("mixed4", {"e", "u", "v1", "v2"}, p, Vector{1, 0, 0, 0});
}

// Same as the three-dimensional example but with eu = u: fails the identity.
inline TablePtr broken_half() {
  ProductMap p;
  p[{0, 0}] = {1, 0, 0};
  p[{0, 1}] = {0, 1, 0};
  p[{1, 2}] = {0, 1, 0};
  return make_table("broken_half", {"e", "u", "v"}, p, Vector{1, 0, 0});
}

// Same as the three-dimensional example but with uv = v.
inline TablePtr broken_uv() {
  ProductMap p;
  p[{0, 0}] = {1, 0, 0};
  p[{0, 1}] = {0, Scalar(1, 2), 0};
  p[{1, 2}] = {0, 0, 1};
  return make_table("broken_uv", {"e", "u", "v"}, p, Vector{1, 0, 0});
}

inline Scalar small_rational(std::mt19937_64& rng, long range = 5, long den = 3) {
  std::uniform_int_distribution<long> n(-range, range), d(1, den);
  Scalar q(n(rng), d(rng));
  q.canonicalize();
  return q;
}

inline Vector random_vector(std::mt19937_64& rng, std::size_t dim) {
  Vector v(dim);
  for (auto& c : v) c = small_rational(rng);
  return v;
}

// Random element of the span of `basis`.
inline Vector random_in_span(std::mt19937_64& rng, const std::vector<Vector>& basis, std::size_t dim) {
  Vector v(dim);
  for (const auto& b : basis) axpy(v, small_rational(rng), b);
  return v;
}

// Bernstein tables used by the randomized suites.
inline std::vector<TablePtr> catalog() {
  auto z = zhevlakov_truncated(4, 3);
  return {constant_algebra(),
          elementary_algebra(2),
          three_dim_alpha(Scalar(1, 3)),
          three_dim_alpha(Scalar(3, 2)),
          example_not_train(),
          shift_up_truncated(4),
          shift_down_truncated(4),
          free_single_truncated(5),
          free_single_truncated(6, std::vector<Scalar>{1, 0, 2, -1}),
          adjoin_idempotent(*z.table, z.u_idx, z.v_idx),
          nuclear3(),
          mixed4()};
}

}  // namespace fixtures
