#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "erl/realizability.hpp"
#include "erl/sequence.hpp"

namespace erl {

struct NamedSequenceSpec {
    std::string name;
    std::string description;
    // 0 means unbounded; fixture-backed sequences refuse extrapolation.
    std::size_t max_terms = 0;
};

// Catalog of every generatable sequence, in stable order.
const std::vector<NamedSequenceSpec>& sequence_catalog();

// Generates the named sequence to N terms. Throws on unknown names and
// on N beyond a fixture's length.
Sequence gen(const std::string& name, std::size_t n);

// Thue-Morse / period-doubling orbit fate statistics. beta counts the
// factor n-orbits whose preimages are single 2n-orbits, alpha those
// with two n-orbit preimages; c_n = alpha(n) + beta(n). beta is
// computed both by the halving recurrence and by the closed-form
// divisor sum; the two must agree.
Sequence beta(std::size_t n);
Sequence alpha(std::size_t n);

// Closed form only, exposed for the recurrence/closed-form cross-check.
Sequence beta_closed_form(std::size_t n);

// OEIS b-file: "index value" lines, '#' comments and blank lines ignored.
struct BFile {
    long offset = 0;  // first index present
    std::vector<std::pair<long, ExactInt>> entries;
};

BFile parse_bfile(const std::string& text);

enum class OffsetAlign {
    first,   // first retained entry becomes index 1
    index1,  // drop entries with index < 1
};

// Re-indexes the b-file to a 1-indexed Sequence, optionally skipping
// further leading terms after alignment.
Sequence normalize(const BFile& bfile, OffsetAlign align, std::size_t skip = 0);

enum class SequenceClass {
    exactly_realizable,
    relatively_but_not_exactly_realizable,
    not_relatively_realizable,
};

struct Classification {
    SequenceClass verdict = SequenceClass::exactly_realizable;
    std::size_t horizon = 0;
    RealizabilityReport exact_report;
    RealizabilityReport relative_report;
};

Classification classify(const Sequence& seq);

std::string to_string(SequenceClass c);

}  // namespace erl
