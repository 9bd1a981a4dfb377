#include "erl/paper_sequences.hpp"

#include <sstream>
#include <stdexcept>

#include "erl/arith.hpp"
#include "erl/transforms.hpp"

namespace erl {

namespace {

int parity_sign(std::size_t n) {
    return n % 2 == 0 ? 1 : -1;
}

Sequence tmpd_fix(std::size_t n) {
    std::vector<ExactInt> out;
    out.reserve(n);
    for (std::size_t m = 1; m <= n; ++m) {
        out.push_back(pow2(m) + parity_sign(m) - 1);
    }
    return Sequence(std::move(out));
}

Sequence mersenne_fix(std::size_t n) {
    std::vector<ExactInt> out;
    out.reserve(n);
    for (std::size_t m = 1; m <= n; ++m) {
        out.push_back(pow2(m) - 1);
    }
    return Sequence(std::move(out));
}

Sequence s3_fix(std::size_t n) {
    std::vector<ExactInt> out;
    out.reserve(n);
    for (std::size_t m = 1; m <= n; ++m) {
        ExactInt v;
        unsigned long e = padic_valuation(3, pow2(m) - 1);
        mpz_ui_pow_ui(v.get_mpz_t(), 3, e);
        out.push_back(std::move(v));
    }
    return Sequence(std::move(out));
}

// Lucas numbers L(1) = 1, L(2) = 3, L(n) = L(n-1) + L(n-2).
std::vector<ExactInt> lucas(std::size_t n) {
    std::vector<ExactInt> l;
    l.reserve(n);
    for (std::size_t m = 1; m <= n; ++m) {
        if (m == 1) {
            l.emplace_back(1);
        } else if (m == 2) {
            l.emplace_back(3);
        } else {
            l.push_back(l[m - 2] + l[m - 3]);
        }
    }
    return l;
}

Sequence alternating_sign(std::size_t n) {
    std::vector<ExactInt> out;
    out.reserve(n);
    for (std::size_t m = 1; m <= n; ++m) {
        out.emplace_back(parity_sign(m));
    }
    return Sequence(std::move(out));
}

const Sequence& penrose_diff_fix_fixture() {
    static const Sequence fixture{-1, 9, -16, 29, -51, 84, -141};
    return fixture;
}

const Sequence& penrose_diff_orb_fixture() {
    static const Sequence fixture{-1, 5, -5, 5, -10, 15, -20};
    return fixture;
}

Sequence fixture_prefix(const Sequence& fixture, const std::string& name, std::size_t n) {
    if (n > fixture.length()) {
        throw std::invalid_argument(name + " is a " + std::to_string(fixture.length()) +
                                    "-term fixture; cannot extrapolate to " +
                                    std::to_string(n) + " terms");
    }
    std::vector<ExactInt> out(fixture.entries().begin(), fixture.entries().begin() + n);
    return Sequence(std::move(out));
}

Sequence orb_as_integers(const Sequence& s) {
    return orb(s).to_integer_sequence();
}

}  // namespace

const std::vector<NamedSequenceSpec>& sequence_catalog() {
    static const std::vector<NamedSequenceSpec> catalog = {
        {"tmpd_fix", "fixed point counts 2^n + (-1)^n - 1 shared by the Thue-Morse and period-doubling systems (A099430)", 0},
        {"tmpd_orb", "orbit counts of tmpd_fix", 0},
        {"mersenne_fix", "2^n - 1 (A000225)", 0},
        {"mersenne_orb", "orbit counts of 2^n - 1 (A060280)", 0},
        {"all_ones", "the constant sequence u (A000012)", 0},
        {"orb_u", "orbit counts of u: 1,0,0,... (A000007 shape)", 0},
        {"zero", "the zero sequence (A000004)", 0},
        {"s3_fix", "3-adic norm inverses 3^{v_3(2^n - 1)}", 0},
        {"s3_diff", "all_ones - s3_fix", 0},
        {"lucas_fix", "L(n) - 1 (A001610)", 0},
        {"golden_factor_fix", "L(n) - 1 - (-1)^n (A001350)", 0},
        {"fib_diff", "(-1)^n", 0},
        {"penrose_diff_fix", "Penrose relative fixed point counts, 7-term fixture", 7},
        {"penrose_diff_orb", "Penrose relative orbit counts, 7-term fixture", 7},
    };
    return catalog;
}

Sequence gen(const std::string& name, std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("gen: need at least one term");
    }
    if (name == "tmpd_fix") {
        return tmpd_fix(n);
    }
    if (name == "tmpd_orb") {
        return orb_as_integers(tmpd_fix(n));
    }
    if (name == "mersenne_fix") {
        return mersenne_fix(n);
    }
    if (name == "mersenne_orb") {
        return orb_as_integers(mersenne_fix(n));
    }
    if (name == "all_ones") {
        return Sequence::constant(n, 1);
    }
    if (name == "orb_u") {
        Sequence s = Sequence::constant(n, 0);
        s.entry(1) = 1;
        return s;
    }
    if (name == "zero") {
        return Sequence::constant(n, 0);
    }
    if (name == "s3_fix") {
        return s3_fix(n);
    }
    if (name == "s3_diff") {
        Sequence s = s3_fix(n);
        std::vector<ExactInt> out;
        out.reserve(n);
        for (std::size_t m = 1; m <= n; ++m) {
            out.push_back(1 - s.entry(m));
        }
        return Sequence(std::move(out));
    }
    if (name == "lucas_fix") {
        auto l = lucas(n);
        std::vector<ExactInt> out;
        out.reserve(n);
        for (std::size_t m = 1; m <= n; ++m) {
            out.push_back(l[m - 1] - 1);
        }
        return Sequence(std::move(out));
    }
    if (name == "golden_factor_fix") {
        auto l = lucas(n);
        std::vector<ExactInt> out;
        out.reserve(n);
        for (std::size_t m = 1; m <= n; ++m) {
            out.push_back(l[m - 1] - 1 - parity_sign(m));
        }
        return Sequence(std::move(out));
    }
    if (name == "fib_diff") {
        return alternating_sign(n);
    }
    if (name == "penrose_diff_fix") {
        return fixture_prefix(penrose_diff_fix_fixture(), name, n);
    }
    if (name == "penrose_diff_orb") {
        return fixture_prefix(penrose_diff_orb_fixture(), name, n);
    }
    throw std::invalid_argument("gen: unknown sequence name '" + name + "'");
}

Sequence beta(std::size_t n) {
    const Sequence c = gen("tmpd_orb", n);
    std::vector<ExactInt> b;
    b.reserve(n);
    for (std::size_t m = 1; m <= n; ++m) {
        ExactRational v;
        if (m % 2 == 1) {
            v = make_rational(c.entry(m), 2);
        } else {
            v = make_rational(c.entry(m) + b[m / 2 - 1], 2);
        }
        b.push_back(to_integer(v));
    }
    Sequence recurrence(std::move(b));
    if (recurrence != beta_closed_form(n)) {
        throw std::logic_error("beta recurrence and closed form disagree");
    }
    return recurrence;
}

Sequence beta_closed_form(std::size_t n) {
    std::vector<ExactInt> out;
    out.reserve(n);
    for (std::size_t m = 1; m <= n; ++m) {
        // (1/2m) sum over odd d | m of mu(d) 2^{m/d}, minus 1 at m = 1.
        ExactInt sum = 0;
        for (unsigned long d : divisors(m)) {
            if (d % 2 == 1) {
                sum += ExactInt(mobius(d)) * pow2(m / d);
            }
        }
        ExactInt v = to_integer(make_rational(sum, 2 * static_cast<long>(m)));
        if (m == 1) {
            v -= 1;
        }
        out.push_back(std::move(v));
    }
    return Sequence(std::move(out));
}

Sequence alpha(std::size_t n) {
    const Sequence c = gen("tmpd_orb", n);
    const Sequence b = beta(n);
    std::vector<ExactInt> out;
    out.reserve(n);
    for (std::size_t m = 1; m <= n; ++m) {
        out.push_back(c.entry(m) - b.entry(m));
    }
    return Sequence(std::move(out));
}

BFile parse_bfile(const std::string& text) {
    BFile file;
    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        std::istringstream fields(line);
        long index;
        std::string value_text;
        std::string rest;
        if (!(fields >> index >> value_text)) {
            throw std::invalid_argument("b-file parse error at line " + std::to_string(line_no) +
                                        ": '" + line + "'");
        }
        ExactInt value;
        if (mpz_set_str(value.get_mpz_t(), value_text.c_str(), 10) != 0) {
            throw std::invalid_argument("b-file parse error at line " + std::to_string(line_no) +
                                        ": bad value '" + value_text + "'");
        }
        if (fields >> rest) {
            throw std::invalid_argument("b-file parse error at line " + std::to_string(line_no) +
                                        ": trailing content '" + rest + "'");
        }
        if (file.entries.empty()) {
            file.offset = index;
        } else if (index != file.entries.back().first + 1) {
            throw std::invalid_argument("b-file indices not consecutive at line " +
                                        std::to_string(line_no));
        }
        file.entries.emplace_back(index, std::move(value));
    }
    if (file.entries.empty()) {
        throw std::invalid_argument("b-file contains no entries");
    }
    return file;
}

Sequence normalize(const BFile& bfile, OffsetAlign align, std::size_t skip) {
    std::vector<ExactInt> out;
    for (const auto& [index, value] : bfile.entries) {
        if (align == OffsetAlign::index1 && index < 1) {
            continue;
        }
        if (skip > 0) {
            --skip;
            continue;
        }
        out.push_back(value);
    }
    if (out.empty()) {
        throw std::invalid_argument("normalize: no terms left after alignment and skip");
    }
    return Sequence(std::move(out));
}

Classification classify(const Sequence& seq) {
    Classification result;
    result.horizon = seq.length();
    result.exact_report = check_exact(seq);
    result.relative_report = check_relative(seq);
    if (result.exact_report.realizable()) {
        result.verdict = SequenceClass::exactly_realizable;
    } else if (result.relative_report.realizable()) {
        result.verdict = SequenceClass::relatively_but_not_exactly_realizable;
    } else {
        result.verdict = SequenceClass::not_relatively_realizable;
    }
    return result;
}

std::string to_string(SequenceClass c) {
    switch (c) {
        case SequenceClass::exactly_realizable:
            return "exactly-realizable";
        case SequenceClass::relatively_but_not_exactly_realizable:
            return "relatively-but-not-exactly-realizable";
        case SequenceClass::not_relatively_realizable:
            return "not-relatively-realizable";
    }
    return "unknown";
}

}  // namespace erl
