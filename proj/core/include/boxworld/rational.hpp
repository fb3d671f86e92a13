#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace boxworld {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Parses "p", "p/q" or a finite decimal literal such as "0.25" exactly.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q == 1).
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

/// Exact binomial coefficient; zero when k < 0, n < 0 or k > n.
BigInt binomial(long long n, long long k);
BigInt binomial(const BigInt& n, long long k);

/// Scales a rational vector to the primitive integer vector on the same ray.
std::vector<BigInt> primitive_integer_vector(const std::vector<Rational>& v);

/// Divides by the gcd of the entries (no-op on the zero vector).
void make_primitive(std::vector<BigInt>& v);

}  // namespace boxworld
