#include "baric/multipoly.hpp"

#include <algorithm>
#include <mutex>

#include <fmt/format.h>

#include "baric/errors.hpp"

namespace baric {

namespace {

std::mutex registry_mutex;
std::vector<std::string>& registry() {
  static std::vector<std::string> names;
  return names;
}

std::uint32_t pack(VarId v, unsigned e) {
  ensure(e <= Monomial::kMaxExponent, "monomial exponent overflow");
  ensure(v < (1u << 24), "too many indeterminates");
  return (v << 8) | e;
}

bool term_order(const MultiPoly::Term& a, const MultiPoly::Term& b) { return lex_greater(a.first, b.first); }

}  // namespace

VarId fresh_var(const std::string& name) {
  std::lock_guard lock(registry_mutex);
  registry().push_back(name);
  return static_cast<VarId>(registry().size() - 1);
}

std::vector<VarId> fresh_vars(const std::string& prefix, std::size_t n) {
  std::vector<VarId> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(fresh_var(fmt::format("{}{}", prefix, i + 1)));
  return out;
}

std::string var_name(VarId id) {
  std::lock_guard lock(registry_mutex);
  require(id < registry().size(), "unknown indeterminate");
  return registry()[id];
}

Monomial Monomial::var(VarId v, unsigned exp) {
  Monomial m;
  if (exp > 0) m.packed_.push_back(pack(v, exp));
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto p : packed_) d += exp_of(p);
  return d;
}

unsigned Monomial::exponent(VarId v) const {
  for (auto p : packed_)
    if (var_of(p) == v) return exp_of(p);
  return 0;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto p : packed_) {
    h ^= p;
    h *= 1099511628211ull;
  }
  return h;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.packed_.reserve(a.packed_.size() + b.packed_.size());
  std::size_t i = 0, j = 0;
  while (i < a.packed_.size() && j < b.packed_.size()) {
    VarId va = Monomial::var_of(a.packed_[i]), vb = Monomial::var_of(b.packed_[j]);
    if (va < vb) {
      m.packed_.push_back(a.packed_[i++]);
    } else if (vb < va) {
      m.packed_.push_back(b.packed_[j++]);
    } else {
      m.packed_.push_back(pack(va, Monomial::exp_of(a.packed_[i]) + Monomial::exp_of(b.packed_[j])));
      ++i;
      ++j;
    }
  }
  m.packed_.insert(m.packed_.end(), a.packed_.begin() + static_cast<std::ptrdiff_t>(i), a.packed_.end());
  m.packed_.insert(m.packed_.end(), b.packed_.begin() + static_cast<std::ptrdiff_t>(j), b.packed_.end());
  return m;
}

bool lex_greater(const Monomial& a, const Monomial& b) {
  const auto& x = a.packed_;
  const auto& y = b.packed_;
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == y[i]) continue;
    VarId vx = Monomial::var_of(x[i]), vy = Monomial::var_of(y[i]);
    if (vx != vy) return vx < vy;
    return Monomial::exp_of(x[i]) > Monomial::exp_of(y[i]);
  }
  return x.size() > y.size();
}

bool divides(const Monomial& b, const Monomial& a) {
  std::size_t j = 0;
  for (auto p : b.packed_) {
    while (j < a.packed_.size() && Monomial::var_of(a.packed_[j]) < Monomial::var_of(p)) ++j;
    if (j == a.packed_.size() || Monomial::var_of(a.packed_[j]) != Monomial::var_of(p) ||
        Monomial::exp_of(a.packed_[j]) < Monomial::exp_of(p))
      return false;
  }
  return true;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  ensure(divides(b, a), "monomial division is not exact");
  Monomial m;
  std::size_t j = 0;
  for (auto p : a.packed_) {
    VarId v = Monomial::var_of(p);
    unsigned e = Monomial::exp_of(p);
    if (j < b.packed_.size() && Monomial::var_of(b.packed_[j]) == v) e -= Monomial::exp_of(b.packed_[j++]);
    if (e > 0) m.packed_.push_back(pack(v, e));
  }
  return m;
}

MultiPoly::MultiPoly(const Scalar& c) {
  if (!baric::is_zero(c)) terms_.emplace_back(Monomial(), c);
}

MultiPoly MultiPoly::var(VarId v) {
  MultiPoly p;
  p.terms_.emplace_back(Monomial::var(v), Scalar(1));
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  PolyAccumulator acc;
  for (auto& [m, c] : terms) {
    auto [it, inserted] = acc.acc_.try_emplace(std::move(m), 0);
    it->second += c;
  }
  return acc.take();
}

Scalar MultiPoly::constant_value() const {
  ensure(is_constant(), "polynomial is not constant");
  return terms_.empty() ? Scalar(0) : terms_[0].second;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree());
  return d;
}

std::set<VarId> MultiPoly::variables() const {
  std::set<VarId> vs;
  for (const auto& t : terms_)
    for (auto p : t.first.packed()) vs.insert(Monomial::var_of(p));
  return vs;
}

namespace {

std::vector<MultiPoly::Term> merge(const std::vector<MultiPoly::Term>& a, const std::vector<MultiPoly::Term>& b,
                                   bool subtract) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && lex_greater(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || lex_greater(b[j].first, a[i].first)) {
      out.emplace_back(b[j].first, subtract ? Scalar(-b[j].second) : b[j].second);
      ++j;
    } else {
      Scalar c = subtract ? Scalar(a[i].second - b[j].second) : Scalar(a[i].second + b[j].second);
      if (!is_zero(c)) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
  if (baric::is_zero(c)) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

MultiPoly MultiPoly::substitute(const std::map<VarId, Scalar>& values) const {
  PolyAccumulator acc;
  for (const auto& [m, c] : terms_) {
    Scalar coeff = c;
    Monomial rest;
    for (auto p : m.packed()) {
      auto it = values.find(Monomial::var_of(p));
      if (it == values.end()) {
        rest = rest * Monomial::var(Monomial::var_of(p), Monomial::exp_of(p));
      } else {
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), it->second.get_num_mpz_t(), Monomial::exp_of(p));
        mpz_pow_ui(den.get_mpz_t(), it->second.get_den_mpz_t(), Monomial::exp_of(p));
        coeff *= Scalar(num, den);
      }
    }
    if (baric::is_zero(coeff)) continue;
    auto [it, inserted] = acc.acc_.try_emplace(std::move(rest), 0);
    it->second += coeff;
  }
  return acc.take();
}

Scalar MultiPoly::evaluate(const std::map<VarId, Scalar>& values) const {
  MultiPoly r = substitute(values);
  require(r.is_constant(), "evaluation left free indeterminates");
  return r.constant_value();
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r += b;
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r -= b;
  return r;
}

MultiPoly operator-(const MultiPoly& a) { return Scalar(-1) * a; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  PolyAccumulator acc;
  acc.add_product(a, b);
  return acc.take();
}

MultiPoly operator*(const Scalar& c, const MultiPoly& a) {
  MultiPoly r = a;
  r *= c;
  return r;
}

MultiPoly pow(const MultiPoly& a, unsigned k) {
  MultiPoly r(1);
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
  ensure(!b.is_zero(), "polynomial division by zero");
  std::vector<MultiPoly::Term> q;
  MultiPoly r = a;
  const auto& [lm, lc] = b.terms().front();
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.terms().front();
    ensure(divides(lm, rm), "polynomial division is not exact");
    MultiPoly t = MultiPoly::from_terms({{rm / lm, rc / lc}});
    q.emplace_back(rm / lm, rc / lc);
    r -= t * b;
  }
  return MultiPoly::from_terms(std::move(q));
}

void PolyAccumulator::add(const MultiPoly& a, const Scalar& c) {
  for (const auto& [m, x] : a.terms()) {
    auto [it, inserted] = acc_.try_emplace(m, 0);
    it->second += c * x;
  }
}

void PolyAccumulator::add_product(const MultiPoly& a, const MultiPoly& b, const Scalar& c) {
  Scalar t;
  for (const auto& [ma, xa] : a.terms()) {
    t = c * xa;
    for (const auto& [mb, xb] : b.terms()) {
      auto [it, inserted] = acc_.try_emplace(ma * mb, 0);
      it->second += t * xb;
    }
  }
}

MultiPoly PolyAccumulator::take() {
  std::vector<MultiPoly::Term> terms;
  terms.reserve(acc_.size());
  for (auto& [m, c] : acc_)
    if (!is_zero(c)) terms.emplace_back(m, std::move(c));
  acc_.clear();
  std::sort(terms.begin(), terms.end(), term_order);
  MultiPoly p;
  p.terms_ = std::move(terms);
  return p;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    bool neg = sgn(c) < 0;
    Scalar mag = neg ? Scalar(-c) : c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono;
    for (auto q : m.packed()) {
      if (!mono.empty()) mono += "*";
      mono += var_name(Monomial::var_of(q));
      if (Monomial::exp_of(q) > 1) mono += fmt::format("^{}", Monomial::exp_of(q));
    }
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

}  // namespace baric
