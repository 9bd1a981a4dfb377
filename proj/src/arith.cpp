#include "erl/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace erl {

std::vector<unsigned long> divisors(unsigned long n) {
    if (n == 0) {
        throw std::invalid_argument("divisors: n must be positive");
    }
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int mobius(unsigned long n) {
    if (n == 0) {
        throw std::invalid_argument("mobius: n must be positive");
    }
    int sign = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;  // squared factor
            }
            sign = -sign;
        }
    }
    if (n > 1) {
        sign = -sign;
    }
    return sign;
}

bool is_prime(unsigned long n) {
    if (n < 2) {
        return false;
    }
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            return false;
        }
    }
    return true;
}

unsigned long padic_valuation(unsigned long p, const ExactInt& m) {
    if (!is_prime(p)) {
        throw std::invalid_argument("padic_valuation: p must be prime");
    }
    if (m == 0) {
        throw std::invalid_argument("padic_valuation: valuation of 0 is infinite");
    }
    ExactInt rest = abs(m);
    unsigned long v = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++v;
    }
    return v;
}

}  // namespace erl
