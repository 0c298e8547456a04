#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace monalg {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Serializes as "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// Converts to int64, throwing PreconditionError when the value does not fit.
std::int64_t to_int64(const Integer& z);

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
void make_primitive(IntVector& v);

/// Scales a rational vector by the lcm of its denominators.
IntVector clear_denominators(const RatVector& v);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);

}  // namespace monalg
