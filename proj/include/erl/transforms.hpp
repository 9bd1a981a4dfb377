#pragma once

#include <cstddef>
#include <optional>

#include "erl/sequence.hpp"

namespace erl {

// fix(c)_n = sum_{d|n} d * c_d. Inverse of orb.
Sequence fix(const Sequence& c);

// fix extended to rational inputs (needed to round-trip orb output).
OrbSequence fix(const OrbSequence& c);

// orb(a)_n = (1/n) sum_{d|n} mu(n/d) * a_d, exact rationals throughout.
// Non-integrality is information, never an error.
OrbSequence orb(const Sequence& a);
OrbSequence orb(const OrbSequence& a);

struct IntegralityViolation {
    std::size_t index = 0;
    ExactRational value;
};

struct IntegralityReport {
    std::vector<bool> is_integer_flags;      // flag at i covers index i+1
    std::vector<bool> is_nonnegative_flags;
    std::optional<IntegralityViolation> first_non_integer;
    std::optional<IntegralityViolation> first_negative;

    bool all_integer() const { return !first_non_integer.has_value(); }
    bool all_nonnegative() const { return !first_negative.has_value(); }
};

IntegralityReport integrality_report(const OrbSequence& o);

}  // namespace erl
