#include "erl/transforms.hpp"

#include "erl/arith.hpp"

namespace erl {

Sequence fix(const Sequence& c) {
    std::vector<ExactInt> out;
    out.reserve(c.length());
    for (std::size_t n = 1; n <= c.length(); ++n) {
        ExactInt sum = 0;
        for (unsigned long d : divisors(n)) {
            sum += ExactInt(d) * c.entry(d);
        }
        out.push_back(std::move(sum));
    }
    return Sequence(std::move(out));
}

OrbSequence fix(const OrbSequence& c) {
    std::vector<ExactRational> out;
    out.reserve(c.length());
    for (std::size_t n = 1; n <= c.length(); ++n) {
        ExactRational sum = 0;
        for (unsigned long d : divisors(n)) {
            sum += ExactRational(ExactInt(d)) * c.entry(d);
        }
        out.push_back(std::move(sum));
    }
    return OrbSequence(std::move(out));
}

OrbSequence orb(const Sequence& a) {
    return orb(OrbSequence::from_integers(a));
}

OrbSequence orb(const OrbSequence& a) {
    std::vector<ExactRational> out;
    out.reserve(a.length());
    for (std::size_t n = 1; n <= a.length(); ++n) {
        ExactRational sum = 0;
        for (unsigned long d : divisors(n)) {
            int mu = mobius(n / d);
            if (mu != 0) {
                sum += ExactRational(ExactInt(mu)) * a.entry(d);
            }
        }
        sum /= ExactRational(ExactInt(static_cast<long>(n)));
        out.push_back(std::move(sum));
    }
    return OrbSequence(std::move(out));
}

IntegralityReport integrality_report(const OrbSequence& o) {
    IntegralityReport report;
    report.is_integer_flags.reserve(o.length());
    report.is_nonnegative_flags.reserve(o.length());
    for (std::size_t n = 1; n <= o.length(); ++n) {
        const ExactRational& v = o.entry(n);
        bool integral = is_integer(v);
        bool nonneg = v >= 0;
        report.is_integer_flags.push_back(integral);
        report.is_nonnegative_flags.push_back(nonneg);
        if (!integral && !report.first_non_integer) {
            report.first_non_integer = IntegralityViolation{n, v};
        }
        if (!nonneg && !report.first_negative) {
            report.first_negative = IntegralityViolation{n, v};
        }
    }
    return report;
}

}  // namespace erl
