#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "erl/realizability.hpp"
#include "erl/sequence.hpp"

namespace erl {

// One cycle of a finite permutation, points in orbit order:
// T(points[k]) = points[(k+1) mod length].
struct Cycle {
    std::size_t id = 0;
    std::vector<std::size_t> points;

    std::size_t length() const { return points.size(); }
    // The first listed point is the anchor used by the element-wise
    // factor map construction.
    std::size_t anchor() const { return points.front(); }
};

// A finite permutation given as labeled cycles plus one distinguished
// fixed point standing in for the compactification point. Point labels
// are dense non-negative integers in construction order; the infinity
// point always carries label 0.
struct PermutationSystem {
    std::vector<Cycle> cycles;  // excludes the infinity 1-cycle
    std::size_t infinity_point = 0;
    std::size_t point_count = 1;  // includes infinity

    // Successor array over all point labels; infinity maps to itself.
    std::vector<std::size_t> successor() const;

    // Number of cycles per length 1..max_length, infinity excluded.
    Sequence cycle_counts(std::size_t max_length) const;

    // Cycle index containing each point; infinity gets cycles.size().
    std::vector<std::size_t> cycle_of_point() const;
};

// phi as a cycle assignment (target length must divide source length)
// together with the induced total point map.
struct FactorMap {
    // (source cycle id, target cycle id) in assignment order.
    std::vector<std::pair<std::size_t, std::size_t>> cycle_assignment;
    // phi on point labels; index = X point, value = Y point.
    std::vector<std::size_t> point_map;
};

struct RealizationTriple {
    PermutationSystem X;
    PermutationSystem Y;
    FactorMap phi;
    Sequence target;  // the h being realized
    std::size_t horizon = 0;
};

struct VerificationReport {
    bool equivariant = false;
    bool surjective = false;
    bool difference_ok = false;
    // Witness X point where phi(T(x)) != S(phi(x)).
    std::optional<std::size_t> equivariance_witness;
    // Witness Y point with empty preimage.
    std::optional<std::size_t> surjectivity_witness;
    // First index n with count difference != target_n.
    std::optional<std::size_t> difference_witness;
    Sequence x_counts;
    Sequence y_counts;

    bool all_pass() const { return equivariant && surjective && difference_ok; }
};

// Builds the permutation systems and factor map of the power-series
// decomposition: X carries, per length n <= 2N, one baseline n-cycle,
// b_n extra n-cycles and a_{d,n} extra n-cycles per stored key; Y
// carries one baseline n-cycle plus a_{n,kn} extra n-cycles. Baselines
// map to baselines, b-extras to the baseline of the same length,
// a-extras to their paired Y cycles, infinity to infinity.
RealizationTriple build_realization(const OrbitDecomposition& dec, std::size_t horizon);

// Counts points with T^n(x) = x by literal n-fold iteration of the
// successor array, independent of the fix transform.
Sequence fixed_point_counts(const PermutationSystem& sys, std::size_t horizon);

// Checks equivariance at every point, surjectivity of phi, and that the
// fixed point count difference reproduces the target on 1..horizon.
VerificationReport verify_factor(const RealizationTriple& triple);

// Forward direction: reads a decomposition off an arbitrary triple.
// Each Y-orbit of length d is attributed to a_{d,k} with k the minimal
// preimage cycle length (coinciding images counted once; diagonal keys
// d = k allowed); b_k makes up the rest of the X cycle count. Requires
// the triple to pass equivariance and surjectivity.
OrbitDecomposition extract_decomposition(const RealizationTriple& triple);

// Relative realization of an exactly realizable f via the doubled
// system: X has two copies of each orbit, Y one, difference f.
RealizationTriple doubling_realization(const Sequence& f);

// Relative realization of f via an exact realization of f + u factoring
// onto the one-point identity system.
RealizationTriple plus_u_realization(const Sequence& f);

}  // namespace erl
