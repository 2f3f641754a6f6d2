#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace rkt {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

// Accepts optional sign, digits, and for rationals an optional "/den".
Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);

Integer ipow(const Integer& base, unsigned long exp);
Integer binomial(unsigned long n, unsigned long k);

// Distinct prime divisors of |n| in ascending order; n must be nonzero.
// Trial division is used, so callers only pass small or smooth values.
std::vector<unsigned long> prime_divisors(const Integer& n);

bool is_prime(unsigned long p);
unsigned long euler_phi(unsigned long m);

// Floor of the square root and an exactness test for perfect squares.
Integer isqrt(const Integer& n);
bool is_square(const Integer& n);

// a = q*b + r with 0 <= r < |b|.
Integer floor_div(const Integer& a, const Integer& b);

}  // namespace rkt
