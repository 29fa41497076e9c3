#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "baric/scalar.hpp"

namespace baric {

using VarId = std::uint32_t;

// Global registry of indeterminates. Ids are never reused; names may repeat.
VarId fresh_var(const std::string& name);
std::vector<VarId> fresh_vars(const std::string& prefix, std::size_t n);
std::string var_name(VarId id);

// Product of indeterminates, stored as sorted packed (var << 8 | exponent).
class Monomial {
 public:
  static constexpr unsigned kMaxExponent = 255;

  Monomial() = default;
  static Monomial var(VarId v, unsigned exp = 1);

  bool is_one() const { return packed_.empty(); }
  unsigned degree() const;
  unsigned exponent(VarId v) const;
  const std::vector<std::uint32_t>& packed() const { return packed_; }
  std::size_t hash() const;

  static VarId var_of(std::uint32_t p) { return p >> 8; }
  static unsigned exp_of(std::uint32_t p) { return p & 0xffu; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Lexicographic order with lower variable ids larger.
  friend bool lex_greater(const Monomial& a, const Monomial& b);
  // a / b when b divides a.
  friend bool divides(const Monomial& b, const Monomial& a);
  friend Monomial operator/(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::uint32_t> packed_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

class PolyAccumulator;

// Polynomial over the rationals in commuting indeterminates. Terms are kept
// in decreasing lex order, so the first term is the leading one.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Scalar>;

  MultiPoly() = default;
  MultiPoly(const Scalar& c);  // NOLINT: constants convert implicitly
  MultiPoly(int c) : MultiPoly(Scalar(c)) {}  // NOLINT
  static MultiPoly var(VarId v);
  static MultiPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  Scalar constant_value() const;
  std::size_t size() const { return terms_.size(); }
  unsigned total_degree() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::set<VarId> variables() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Scalar& c);

  // Substitute values for some indeterminates.
  MultiPoly substitute(const std::map<VarId, Scalar>& values) const;
  Scalar evaluate(const std::map<VarId, Scalar>& values) const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  friend class PolyAccumulator;
  std::vector<Term> terms_;
};

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const Scalar& c, const MultiPoly& a);
MultiPoly pow(const MultiPoly& a, unsigned k);
// Exact quotient; throws InvariantError when b does not divide a.
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);

// Sums of scaled products, accumulated without intermediate sorting.
class PolyAccumulator {
 public:
  void add(const MultiPoly& a, const Scalar& c = 1);
  void add_product(const MultiPoly& a, const MultiPoly& b, const Scalar& c = 1);
  MultiPoly take();

 private:
  friend class MultiPoly;
  std::unordered_map<Monomial, Scalar, MonomialHash> acc_;
};

std::string to_string(const MultiPoly& p);

}  // namespace baric
