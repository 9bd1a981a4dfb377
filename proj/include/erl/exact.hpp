#pragma once

#include <gmpxx.h>

#include <string>

namespace erl {

// Arbitrary-precision signed integer. Sequence entries such as 2^n for
// n up to several hundred must be exact, so everything is GMP-backed.
using ExactInt = mpz_class;

// Rational in lowest terms with positive denominator (mpq canonical form).
using ExactRational = mpq_class;

// Builds a canonicalized rational; rejects zero denominator.
ExactRational make_rational(const ExactInt& num, const ExactInt& den);

bool is_integer(const ExactRational& q);

// Requires is_integer(q).
ExactInt to_integer(const ExactRational& q);

// 2^n as an ExactInt.
ExactInt pow2(unsigned long n);

// Renders "p" for integers and "p/q" otherwise.
std::string to_string(const ExactRational& q);

}  // namespace erl
