#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "erl/exact.hpp"

namespace erl {

// Finite 1-indexed prefix of an integer sequence. entry(1) is the first term.
class Sequence {
public:
    Sequence() = default;
    explicit Sequence(std::vector<ExactInt> entries) : entries_(std::move(entries)) {}
    Sequence(std::initializer_list<long> values) {
        entries_.assign(values.begin(), values.end());
    }

    std::size_t length() const { return entries_.size(); }

    const ExactInt& entry(std::size_t n) const { return entries_.at(n - 1); }
    ExactInt& entry(std::size_t n) { return entries_.at(n - 1); }

    const std::vector<ExactInt>& entries() const { return entries_; }

    void push_back(ExactInt v) { entries_.push_back(std::move(v)); }

    bool operator==(const Sequence&) const = default;

    std::string to_csv() const;

    // Parses "a,b,c" with optional whitespace; arbitrary-precision literals.
    static Sequence from_csv(const std::string& text);

    // The constant sequence of a given value, e.g. u = constant(N, 1).
    static Sequence constant(std::size_t n, long value);

private:
    std::vector<ExactInt> entries_;
};

// 1-indexed prefix of exact rationals, the codomain of the orb transform.
class OrbSequence {
public:
    OrbSequence() = default;
    explicit OrbSequence(std::vector<ExactRational> entries) : entries_(std::move(entries)) {}

    std::size_t length() const { return entries_.size(); }

    const ExactRational& entry(std::size_t n) const { return entries_.at(n - 1); }

    const std::vector<ExactRational>& entries() const { return entries_; }

    void push_back(ExactRational v) { entries_.push_back(std::move(v)); }

    bool operator==(const OrbSequence&) const = default;

    bool all_integer() const;

    // Requires all_integer().
    Sequence to_integer_sequence() const;

    static OrbSequence from_integers(const Sequence& s);

    std::string to_csv() const;

private:
    std::vector<ExactRational> entries_;
};

}  // namespace erl
