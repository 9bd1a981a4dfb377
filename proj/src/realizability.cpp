#include "erl/realizability.hpp"

#include <stdexcept>

namespace erl {

ExactInt OrbitDecomposition::coefficient_at(std::size_t n) const {
    ExactInt result = 0;
    if (auto it = b.find(n); it != b.end()) {
        result += it->second;
    }
    for (const auto& [key, value] : a) {
        const auto& [d, m] = key;
        if (m == n && d < n) {
            result += value;
        }
        if (d == n) {
            result -= value;
        }
    }
    return result;
}

void OrbitDecomposition::validate() const {
    for (const auto& [n, value] : b) {
        if (value < 0) {
            throw std::invalid_argument("negative b coefficient at n=" + std::to_string(n));
        }
        if (n == 0 || n > horizon) {
            throw std::invalid_argument("b index out of range: " + std::to_string(n));
        }
    }
    for (const auto& [key, value] : a) {
        const auto& [d, n] = key;
        if (value < 0) {
            throw std::invalid_argument("negative a coefficient at (" + std::to_string(d) +
                                        "," + std::to_string(n) + ")");
        }
        if (d == 0 || d > n || n % d != 0 || n > 2 * horizon) {
            throw std::invalid_argument("bad a key (" + std::to_string(d) + "," +
                                        std::to_string(n) + ")");
        }
    }
}

namespace {

RealizabilityReport check(const Sequence& seq, RealizabilityMode mode) {
    RealizabilityReport report;
    report.mode = mode;
    report.horizon = seq.length();
    report.orbit_counts = orb(seq);
    for (std::size_t n = 1; n <= seq.length(); ++n) {
        // Fixed point counts are cardinalities: exact mode rejects
        // negative entries of f before looking at the orbit counts.
        if (mode == RealizabilityMode::exact && seq.entry(n) < 0) {
            report.first_violation = RealizabilityViolation{
                n, ExactRational(seq.entry(n)), ViolationReason::negative};
            break;
        }
        const ExactRational& c = report.orbit_counts.entry(n);
        if (!is_integer(c)) {
            report.first_violation =
                RealizabilityViolation{n, c, ViolationReason::non_integer};
            break;
        }
        if (mode == RealizabilityMode::exact && c < 0) {
            report.first_violation =
                RealizabilityViolation{n, c, ViolationReason::negative};
            break;
        }
    }
    return report;
}

}  // namespace

RealizabilityReport check_exact(const Sequence& f) {
    return check(f, RealizabilityMode::exact);
}

RealizabilityReport check_relative(const Sequence& h) {
    return check(h, RealizabilityMode::relative);
}

OrbitDecomposition decompose(const OrbSequence& eta) {
    if (!eta.all_integer()) {
        throw std::invalid_argument("decompose: input orbit counts are not all integers");
    }
    return decompose(eta.to_integer_sequence());
}

OrbitDecomposition decompose(const Sequence& eta) {
    OrbitDecomposition dec;
    dec.horizon = eta.length();
    const std::size_t N = eta.length();
    for (std::size_t n = 1; n <= N; ++n) {
        ExactInt s = eta.entry(n);
        if (n % 2 == 0) {
            // a_{n/2,n} was fixed at step n/2 (zero if absent).
            if (auto it = dec.a.find({n / 2, n}); it != dec.a.end()) {
                s -= it->second;
            }
        }
        if (s >= 0) {
            if (s > 0) {
                dec.b[n] = s;
            }
        } else {
            dec.a[{n, 2 * n}] = -s;
        }
    }
    return dec;
}

Sequence pointwise_add(const Sequence& f, const Sequence& g) {
    if (f.length() != g.length()) {
        throw std::invalid_argument("pointwise_add: length mismatch");
    }
    std::vector<ExactInt> out;
    out.reserve(f.length());
    for (std::size_t n = 1; n <= f.length(); ++n) {
        out.push_back(f.entry(n) + g.entry(n));
    }
    return Sequence(std::move(out));
}

Sequence pointwise_mul(const Sequence& f, const Sequence& g) {
    if (f.length() != g.length()) {
        throw std::invalid_argument("pointwise_mul: length mismatch");
    }
    std::vector<ExactInt> out;
    out.reserve(f.length());
    for (std::size_t n = 1; n <= f.length(); ++n) {
        out.push_back(f.entry(n) * g.entry(n));
    }
    return Sequence(std::move(out));
}

}  // namespace erl
