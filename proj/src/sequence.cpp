#include "erl/sequence.hpp"

#include <sstream>
#include <stdexcept>

namespace erl {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return "";
    }
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::string Sequence::to_csv() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) {
            out << ',';
        }
        out << entries_[i].get_str();
    }
    return out.str();
}

Sequence Sequence::from_csv(const std::string& text) {
    std::vector<ExactInt> entries;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        token = trim(token);
        ExactInt v;
        if (token.empty() || mpz_set_str(v.get_mpz_t(), token.c_str(), 10) != 0) {
            throw std::invalid_argument("invalid integer literal: '" + token + "'");
        }
        entries.push_back(std::move(v));
    }
    if (entries.empty()) {
        throw std::invalid_argument("empty sequence");
    }
    return Sequence(std::move(entries));
}

Sequence Sequence::constant(std::size_t n, long value) {
    return Sequence(std::vector<ExactInt>(n, ExactInt(value)));
}

bool OrbSequence::all_integer() const {
    for (const auto& q : entries_) {
        if (!is_integer(q)) {
            return false;
        }
    }
    return true;
}

Sequence OrbSequence::to_integer_sequence() const {
    std::vector<ExactInt> out;
    out.reserve(entries_.size());
    for (const auto& q : entries_) {
        out.push_back(to_integer(q));
    }
    return Sequence(std::move(out));
}

OrbSequence OrbSequence::from_integers(const Sequence& s) {
    std::vector<ExactRational> out;
    out.reserve(s.length());
    for (const auto& v : s.entries()) {
        out.emplace_back(v);
    }
    return OrbSequence(std::move(out));
}

std::string OrbSequence::to_csv() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) {
            out << ',';
        }
        out << to_string(entries_[i]);
    }
    return out.str();
}

}  // namespace erl
