#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "erl/sequence.hpp"
#include "erl/transforms.hpp"

namespace erl {

// Sparse coefficient family {b_n} u {a_{d,n}} of the power-series
// decomposition sum b_n x^n + sum a_{d,n} (-x^d + x^n).
//
// The decompose() constructor only ever emits a-keys of the forms
// (n/2, n) and (n, 2n). Decompositions extracted from arbitrary triples
// may additionally carry diagonal keys (d, d), whose series term is zero
// but which enter coefficient_at through the subtracted sum.
struct OrbitDecomposition {
    std::size_t horizon = 0;                              // N
    std::map<std::size_t, ExactInt> b;                    // n -> b_n, n <= N
    std::map<std::pair<std::size_t, std::size_t>, ExactInt> a;  // (d, n), d | n, n <= 2N

    // b_n + sum_{stored (d,n), d<n} a_{d,n} - sum_{stored (n,kn)} a_{n,kn}.
    ExactInt coefficient_at(std::size_t n) const;

    // Throws if a coefficient is negative, a key violates d | n, d <= n,
    // or an index exceeds the horizon budget.
    void validate() const;
};

enum class RealizabilityMode { exact, relative };

enum class ViolationReason { non_integer, negative };

struct RealizabilityViolation {
    std::size_t index = 0;
    ExactRational value;
    ViolationReason reason = ViolationReason::non_integer;
};

struct RealizabilityReport {
    RealizabilityMode mode = RealizabilityMode::exact;
    std::size_t horizon = 0;
    std::optional<RealizabilityViolation> first_violation;
    OrbSequence orbit_counts;

    // realizable-up-to-N iff no violation was found.
    bool realizable() const { return !first_violation.has_value(); }
};

// Basic Lemma criterion: f is exactly realizable up to N iff every entry
// of f is >= 0 and orb(f) is a non-negative integer sequence.
RealizabilityReport check_exact(const Sequence& f);

// Relative criterion: h is realizable as a difference of fixed point
// counts up to N iff orb(h) is an integer sequence; sign is irrelevant.
RealizabilityReport check_relative(const Sequence& h);

// Constructive decomposition of an integer orbit-count prefix eta,
// processing n = 1..N in order with the odd/even case split. Throws on
// non-integer input (run check_relative first).
OrbitDecomposition decompose(const OrbSequence& eta);
OrbitDecomposition decompose(const Sequence& eta);

Sequence pointwise_add(const Sequence& f, const Sequence& g);
Sequence pointwise_mul(const Sequence& f, const Sequence& g);

}  // namespace erl
