#include <doctest.h>

#include <random>

#include "erl/transforms.hpp"

using namespace erl;

namespace {

Sequence random_sequence(std::mt19937& rng, std::size_t len, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    std::vector<ExactInt> entries;
    entries.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        entries.emplace_back(dist(rng));
    }
    return Sequence(std::move(entries));
}

}  // namespace

TEST_CASE("fix examples") {
    CHECK(fix(Sequence{1, 0, 0, 0}) == Sequence{1, 1, 1, 1});
    CHECK(fix(Sequence{0, 2, 2, 3, 6, 9}) == Sequence{0, 4, 6, 16, 30, 64});
    CHECK(fix(Sequence{2, 1, 2, 3, 6, 9}) == Sequence{2, 4, 8, 16, 32, 64});
}

TEST_CASE("orb of the constant sequence is the indicator of n = 1") {
    OrbSequence o = orb(Sequence::constant(10, 1));
    CHECK(o.all_integer());
    Sequence expected = Sequence::constant(10, 0);
    expected.entry(1) = 1;
    CHECK(o.to_integer_sequence() == expected);
}

TEST_CASE("orb of the printed Penrose difference vectors") {
    OrbSequence o = orb(Sequence{-1, 9, -16, 29, -51, 84, -141});
    CHECK(o.all_integer());
    CHECK(o.to_integer_sequence() == Sequence{-1, 5, -5, 5, -10, 15, -20});
}

TEST_CASE("orb of the alternating sign sequence") {
    OrbSequence o = orb(Sequence{-1, 1, -1, 1, -1, 1});
    CHECK(o.all_integer());
    CHECK(o.to_integer_sequence() == Sequence{-1, 1, 0, 0, 0, 0});
}

TEST_CASE("integrality report flags the first violations") {
    SUBCASE("non-integer at n = 2") {
        IntegralityReport r = integrality_report(orb(Sequence{1, 2, 3, 4}));
        REQUIRE(r.first_non_integer.has_value());
        CHECK(r.first_non_integer->index == 2);
        CHECK(r.first_non_integer->value == make_rational(1, 2));
        CHECK(r.is_integer_flags[0]);
        CHECK_FALSE(r.is_integer_flags[1]);
    }
    SUBCASE("all integer and non-negative") {
        IntegralityReport r = integrality_report(orb(Sequence{2, 4, 8, 16}));
        CHECK(r.all_integer());
        CHECK(r.all_nonnegative());
    }
    SUBCASE("integer but negative at n = 2") {
        IntegralityReport r = integrality_report(orb(Sequence{0, -2, 0, -2, 0, -8}));
        CHECK(r.all_integer());
        REQUIRE(r.first_negative.has_value());
        CHECK(r.first_negative->index == 2);
        CHECK(r.first_negative->value == ExactRational(-1));
    }
}

TEST_CASE("fix and orb are mutually inverse on random sequences") {
    std::mt19937 rng(20260823);
    for (int trial = 0; trial < 50; ++trial) {
        Sequence f = random_sequence(rng, 128, -1000000, 1000000);
        // fix(orb(f)) = f, orb output re-read as exact rationals
        OrbSequence round = fix(orb(f));
        CHECK(round.all_integer());
        CHECK(round.to_integer_sequence() == f);
        // orb(fix(c)) = c for integer c
        Sequence c = random_sequence(rng, 128, -1000000, 1000000);
        OrbSequence back = orb(fix(c));
        CHECK(back.all_integer());
        CHECK(back.to_integer_sequence() == c);
    }
}

TEST_CASE("orb is linear over integer scalars") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Sequence f = random_sequence(rng, 48, -50, 50);
        Sequence g = random_sequence(rng, 48, -50, 50);
        long alpha = 3, beta = -7;
        std::vector<ExactInt> comb;
        for (std::size_t n = 1; n <= 48; ++n) {
            comb.push_back(alpha * f.entry(n) + beta * g.entry(n));
        }
        OrbSequence lhs = orb(Sequence(std::move(comb)));
        OrbSequence of = orb(f), og = orb(g);
        for (std::size_t n = 1; n <= 48; ++n) {
            CHECK(lhs.entry(n) == ExactRational(alpha) * of.entry(n) +
                                      ExactRational(beta) * og.entry(n));
        }
    }
}

TEST_CASE("fix preserves integrality, orb need not") {
    std::mt19937 rng(11);
    Sequence f = random_sequence(rng, 64, -100, 100);
    Sequence a = fix(f);  // integer in, integer out by construction
    CHECK(a.length() == 64);
    // the converse counterexample: fix((1,2,3,4)) is integer but orb is not
    CHECK_FALSE(orb(Sequence{1, 2, 3, 4}).all_integer());
}
