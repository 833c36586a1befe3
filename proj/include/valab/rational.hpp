#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace valab {

/// Arbitrary-precision rational, always kept in canonical form
/// (gcd(num, den) = 1, den > 0).
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q". Throws Error{ParseError} on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Vector& v);

/// Exact square root when q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

Vector zeros(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Vector operator+(const Vector& x, const Vector& y);
Vector operator-(const Vector& x, const Vector& y);
Vector operator-(const Vector& x);
Vector operator*(const Rational& c, const Vector& x);
Vector& operator+=(Vector& x, const Vector& y);
Rational dot(const Vector& x, const Vector& y);

/// Concatenation, used to assemble A (+) B coordinates.
Vector concat(const Vector& x, const Vector& y);

}  // namespace valab
