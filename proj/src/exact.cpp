#include "erl/exact.hpp"

#include <stdexcept>

namespace erl {

ExactRational make_rational(const ExactInt& num, const ExactInt& den) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    ExactRational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const ExactRational& q) {
    return q.get_den() == 1;
}

ExactInt to_integer(const ExactRational& q) {
    if (!is_integer(q)) {
        throw std::invalid_argument("rational " + to_string(q) + " is not an integer");
    }
    return q.get_num();
}

ExactInt pow2(unsigned long n) {
    ExactInt r = 1;
    r <<= n;
    return r;
}

std::string to_string(const ExactRational& q) {
    if (is_integer(q)) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace erl
