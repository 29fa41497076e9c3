#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace baric {

// Exact rational. gmpxx keeps results of arithmetic canonical; values built
// from strings are canonicalized by parse_scalar.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& c, const Vector& v);
Vector& axpy(Vector& y, const Scalar& a, const Vector& x);  // y += a x
Scalar dot(const Vector& a, const Vector& b);

}  // namespace baric
