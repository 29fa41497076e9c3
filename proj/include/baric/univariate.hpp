#pragma once

#include <string>
#include <vector>

#include "baric/scalar.hpp"

namespace baric {

// Polynomial in one indeterminate X; coefficient k multiplies X^k.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Scalar> coeffs);
  static UnivariatePoly monomial(const Scalar& c, std::size_t k);
  static UnivariatePoly X() { return monomial(1, 1); }
  static UnivariatePoly constant(const Scalar& c) { return monomial(c, 0); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  Scalar operator()(const Scalar& x) const;

  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b);
UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b);
UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
UnivariatePoly operator*(const Scalar& c, const UnivariatePoly& a);
UnivariatePoly pow(const UnivariatePoly& a, unsigned k);

struct DivMod {
  UnivariatePoly quotient;
  UnivariatePoly remainder;
};
DivMod divmod(const UnivariatePoly& a, const UnivariatePoly& b);
bool divides(const UnivariatePoly& d, const UnivariatePoly& a);

// (X^3 - w X^2)(X - w/2)^(r-3), r >= 3.
UnivariatePoly train_form(unsigned r, const Scalar& w);

// "X^4 - 5/2 X^3 + 3/2 X^2"
std::string to_string(const UnivariatePoly& p, const std::string& var = "X");

}  // namespace baric
