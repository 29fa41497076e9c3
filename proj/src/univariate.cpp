#include "baric/univariate.hpp"

#include <fmt/format.h>

#include "baric/errors.hpp"

namespace baric {

UnivariatePoly::UnivariatePoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UnivariatePoly UnivariatePoly::monomial(const Scalar& c, std::size_t k) {
  std::vector<Scalar> v(k + 1);
  v[k] = c;
  return UnivariatePoly(std::move(v));
}

void UnivariatePoly::trim() {
  while (!coeffs_.empty() && baric::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Scalar UnivariatePoly::operator()(const Scalar& x) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
  std::vector<Scalar> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return UnivariatePoly(std::move(c));
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) {
  std::vector<Scalar> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
  return UnivariatePoly(std::move(c));
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return UnivariatePoly(std::move(c));
}

UnivariatePoly operator*(const Scalar& c, const UnivariatePoly& a) {
  std::vector<Scalar> v(a.coeffs());
  for (auto& x : v) x *= c;
  return UnivariatePoly(std::move(v));
}

UnivariatePoly pow(const UnivariatePoly& a, unsigned k) {
  UnivariatePoly r = UnivariatePoly::constant(1);
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

DivMod divmod(const UnivariatePoly& a, const UnivariatePoly& b) {
  require(!b.is_zero(), "polynomial division by zero");
  std::vector<Scalar> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
  UnivariatePoly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
    Scalar c = r.leading() / b.leading();
    q[shift] += c;
    r = r - UnivariatePoly::monomial(c, shift) * b;
  }
  return {UnivariatePoly(std::move(q)), r};
}

bool divides(const UnivariatePoly& d, const UnivariatePoly& a) { return divmod(a, d).remainder.is_zero(); }

UnivariatePoly train_form(unsigned r, const Scalar& w) {
  require(r >= 3, "train form needs r >= 3");
  auto base = UnivariatePoly({0, 0, -w, 1});
  return base * pow(UnivariatePoly({-w / 2, 1}), r - 3);
}

std::string to_string(const UnivariatePoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Scalar c = p.coeff(static_cast<std::size_t>(k));
    if (is_zero(c)) continue;
    bool neg = sgn(c) < 0;
    Scalar mag = neg ? Scalar(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    bool unit = mag == 1 && k > 0;
    if (!unit) out += mag.get_str();
    if (k > 0) {
      if (!unit) out += " ";
      out += var;
      if (k > 1) out += fmt::format("^{}", k);
    }
  }
  return out;
}

}  // namespace baric
