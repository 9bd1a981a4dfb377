#pragma once

#include <vector>

#include "erl/exact.hpp"

namespace erl {

// All divisors of n in increasing order, including 1 and n. Trial division
// up to sqrt(n); horizons here stay in the low thousands.
std::vector<unsigned long> divisors(unsigned long n);

// Moebius function: mu(1) = 1, mu(n) = 0 if n has a squared prime factor,
// (-1)^k for a product of k distinct primes.
int mobius(unsigned long n);

bool is_prime(unsigned long n);

// Largest v with p^v | m. Requires p prime and m >= 1.
unsigned long padic_valuation(unsigned long p, const ExactInt& m);

}  // namespace erl
