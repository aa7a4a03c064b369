#pragma once

#include <gmpxx.h>

#include <string>

namespace pbundle {

using Integer = mpz_class;
using Rational = mpq_class;

Integer ipow(const Integer& base, unsigned long exponent);

/// True iff a != 0 and a divides b.
bool divides(const Integer& a, const Integer& b);

/// Residue of x in [0, m); m must be positive.
Integer mod_floor(const Integer& x, const Integer& m);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// (-1)^k as an Integer.
inline Integer sign_power(long k) { return (k % 2 == 0) ? Integer(1) : Integer(-1); }

}  // namespace pbundle
