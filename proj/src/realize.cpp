#include "erl/realize.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace erl {

namespace {

constexpr std::size_t kMaxPoints = 10'000'000;

// Cycle counts must materialize as actual points.
std::size_t to_count(const ExactInt& v) {
    if (v < 0) {
        throw std::invalid_argument("negative cycle count");
    }
    if (!v.fits_ulong_p() || v.get_ui() > kMaxPoints) {
        throw std::invalid_argument("cycle count " + v.get_str() +
                                    " exceeds the point budget");
    }
    return static_cast<std::size_t>(v.get_ui());
}

class SystemBuilder {
public:
    SystemBuilder() {
        sys_.infinity_point = 0;
        sys_.point_count = 1;
    }

    std::size_t add_cycle(std::size_t length) {
        if (length == 0) {
            throw std::invalid_argument("zero-length cycle");
        }
        if (sys_.point_count + length > kMaxPoints) {
            throw std::invalid_argument("system exceeds the point budget");
        }
        Cycle c;
        c.id = sys_.cycles.size();
        c.points.reserve(length);
        for (std::size_t i = 0; i < length; ++i) {
            c.points.push_back(sys_.point_count++);
        }
        sys_.cycles.push_back(std::move(c));
        return sys_.cycles.back().id;
    }

    PermutationSystem take() { return std::move(sys_); }

private:
    PermutationSystem sys_;
};

// phi(T^k(x)) = S^{k mod d}(y) from the anchors; forces d | n.
void assign_cycle(FactorMap& phi, const Cycle& src, const Cycle& dst) {
    const std::size_t n = src.length();
    const std::size_t d = dst.length();
    if (n % d != 0) {
        throw std::invalid_argument("image cycle length " + std::to_string(d) +
                                    " does not divide source length " + std::to_string(n));
    }
    phi.cycle_assignment.emplace_back(src.id, dst.id);
    for (std::size_t k = 0; k < n; ++k) {
        phi.point_map.at(src.points[k]) = dst.points[k % d];
    }
}

}  // namespace

std::vector<std::size_t> PermutationSystem::successor() const {
    std::vector<std::size_t> next(point_count);
    next[infinity_point] = infinity_point;
    for (const Cycle& c : cycles) {
        const std::size_t n = c.length();
        for (std::size_t k = 0; k < n; ++k) {
            next[c.points[k]] = c.points[(k + 1) % n];
        }
    }
    return next;
}

Sequence PermutationSystem::cycle_counts(std::size_t max_length) const {
    std::vector<ExactInt> counts(max_length, ExactInt(0));
    for (const Cycle& c : cycles) {
        if (c.length() <= max_length) {
            counts[c.length() - 1] += 1;
        }
    }
    return Sequence(std::move(counts));
}

std::vector<std::size_t> PermutationSystem::cycle_of_point() const {
    std::vector<std::size_t> owner(point_count, cycles.size());
    for (const Cycle& c : cycles) {
        for (std::size_t p : c.points) {
            owner[p] = c.id;
        }
    }
    return owner;
}

RealizationTriple build_realization(const OrbitDecomposition& dec, std::size_t horizon) {
    dec.validate();
    if (dec.horizon > horizon) {
        throw std::invalid_argument("decomposition horizon exceeds requested horizon");
    }
    for (const auto& [key, value] : dec.a) {
        if (key.second > 2 * horizon) {
            throw std::invalid_argument("a key exceeds the 2N cycle budget");
        }
    }

    const std::size_t span = 2 * horizon;
    SystemBuilder bx, by;

    // Per-length Y cycle ids: baseline plus the paired extras per a-key.
    std::vector<std::size_t> baseline_y(span + 1);
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> extra_y;
    for (std::size_t n = 1; n <= span; ++n) {
        baseline_y[n] = by.add_cycle(n);
        for (const auto& [key, value] : dec.a) {
            if (key.first == n) {
                auto& ids = extra_y[key];
                for (std::size_t i = to_count(value); i > 0; --i) {
                    ids.push_back(by.add_cycle(n));
                }
            }
        }
    }

    struct Assignment {
        std::size_t src;
        std::size_t dst;
    };
    std::vector<Assignment> pending;

    std::vector<std::size_t> baseline_x(span + 1);
    for (std::size_t n = 1; n <= span; ++n) {
        baseline_x[n] = bx.add_cycle(n);
        pending.push_back({baseline_x[n], baseline_y[n]});
        if (n <= horizon) {
            if (auto it = dec.b.find(n); it != dec.b.end()) {
                for (std::size_t i = to_count(it->second); i > 0; --i) {
                    pending.push_back({bx.add_cycle(n), baseline_y[n]});
                }
            }
        }
        for (const auto& [key, value] : dec.a) {
            if (key.second == n) {
                const auto& targets = extra_y.at(key);
                for (std::size_t i = 0; i < targets.size(); ++i) {
                    pending.push_back({bx.add_cycle(n), targets[i]});
                }
            }
        }
    }

    RealizationTriple triple;
    triple.X = bx.take();
    triple.Y = by.take();
    triple.horizon = horizon;

    triple.phi.point_map.assign(triple.X.point_count, triple.Y.infinity_point);
    for (const auto& [src, dst] : pending) {
        assign_cycle(triple.phi, triple.X.cycles[src], triple.Y.cycles[dst]);
    }

    // Target on 1..N is the fix transform of the decomposition coefficients.
    std::vector<ExactInt> coeffs;
    for (std::size_t n = 1; n <= horizon; ++n) {
        coeffs.push_back(dec.coefficient_at(n));
    }
    triple.target = fix(Sequence(std::move(coeffs)));
    return triple;
}

Sequence fixed_point_counts(const PermutationSystem& sys, std::size_t horizon) {
    const std::vector<std::size_t> next = sys.successor();
    std::vector<ExactInt> counts;
    counts.reserve(horizon);
    for (std::size_t n = 1; n <= horizon; ++n) {
        unsigned long fixed = 0;
        for (std::size_t x = 0; x < next.size(); ++x) {
            std::size_t y = x;
            for (std::size_t step = 0; step < n; ++step) {
                y = next[y];
            }
            if (y == x) {
                ++fixed;
            }
        }
        counts.emplace_back(fixed);
    }
    return Sequence(std::move(counts));
}

VerificationReport verify_factor(const RealizationTriple& triple) {
    VerificationReport report;
    const auto next_x = triple.X.successor();
    const auto next_y = triple.Y.successor();
    const auto& phi = triple.phi.point_map;

    report.equivariant = true;
    if (phi.size() != triple.X.point_count) {
        report.equivariant = false;
    } else {
        for (std::size_t x = 0; x < phi.size(); ++x) {
            if (phi[x] >= triple.Y.point_count || phi[next_x[x]] != next_y[phi[x]]) {
                report.equivariant = false;
                report.equivariance_witness = x;
                break;
            }
        }
    }

    std::vector<bool> covered(triple.Y.point_count, false);
    for (std::size_t x = 0; x < phi.size(); ++x) {
        if (phi[x] < covered.size()) {
            covered[phi[x]] = true;
        }
    }
    report.surjective = true;
    for (std::size_t y = 0; y < covered.size(); ++y) {
        if (!covered[y]) {
            report.surjective = false;
            report.surjectivity_witness = y;
            break;
        }
    }

    report.x_counts = fixed_point_counts(triple.X, triple.horizon);
    report.y_counts = fixed_point_counts(triple.Y, triple.horizon);
    report.difference_ok = triple.target.length() >= triple.horizon;
    if (report.difference_ok) {
        for (std::size_t n = 1; n <= triple.horizon; ++n) {
            if (report.x_counts.entry(n) - report.y_counts.entry(n) != triple.target.entry(n)) {
                report.difference_ok = false;
                report.difference_witness = n;
                break;
            }
        }
    }
    return report;
}

OrbitDecomposition extract_decomposition(const RealizationTriple& triple) {
    VerificationReport check = verify_factor(triple);
    if (!check.equivariant || !check.surjective) {
        throw std::invalid_argument("extract_decomposition: triple fails verification");
    }

    // Treat the infinity points as ordinary 1-cycles; they attribute one
    // matched orbit at length 1 and cancel in every coefficient.
    const auto owner_y = triple.Y.cycle_of_point();
    const std::size_t y_inf_cycle = triple.Y.cycles.size();

    std::size_t max_len = 1;
    for (const Cycle& c : triple.X.cycles) {
        max_len = std::max(max_len, c.length());
    }
    for (const Cycle& c : triple.Y.cycles) {
        max_len = std::max(max_len, c.length());
    }

    // Minimal preimage cycle length per Y cycle (index cycles.size() = infinity).
    std::vector<std::size_t> min_preimage(triple.Y.cycles.size() + 1, 0);
    auto note_preimage = [&](std::size_t target_cycle, std::size_t source_len) {
        std::size_t& slot = min_preimage[target_cycle];
        if (slot == 0 || source_len < slot) {
            slot = source_len;
        }
    };
    note_preimage(y_inf_cycle, 1);  // infinity maps to infinity
    for (const Cycle& c : triple.X.cycles) {
        std::size_t image_point = triple.phi.point_map[c.anchor()];
        std::size_t target = image_point == triple.Y.infinity_point
                                 ? y_inf_cycle
                                 : owner_y[image_point];
        note_preimage(target, c.length());
    }

    OrbitDecomposition dec;
    dec.horizon = max_len;

    // nu_k including the infinity 1-cycle.
    std::vector<ExactInt> nu(max_len + 1, ExactInt(0));
    nu[1] += 1;
    for (const Cycle& c : triple.X.cycles) {
        nu[c.length()] += 1;
    }

    auto attribute = [&](std::size_t d, std::size_t k) { dec.a[{d, k}] += 1; };
    attribute(1, min_preimage[y_inf_cycle]);
    for (const Cycle& c : triple.Y.cycles) {
        attribute(c.length(), min_preimage[c.id]);
    }

    for (std::size_t k = 1; k <= max_len; ++k) {
        ExactInt b = nu[k];
        for (const auto& [key, value] : dec.a) {
            if (key.second == k && key.first < k) {
                b -= value;
            }
        }
        if (b > 0) {
            dec.b[k] = b;
        }
    }
    dec.validate();
    return dec;
}

RealizationTriple doubling_realization(const Sequence& f) {
    RealizabilityReport rep = check_exact(f);
    if (!rep.realizable()) {
        throw std::invalid_argument("doubling_realization: sequence is not exactly realizable");
    }
    const Sequence c = rep.orbit_counts.to_integer_sequence();
    const std::size_t N = f.length();

    SystemBuilder bx, by;
    RealizationTriple triple;
    std::vector<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t n = 1; n <= N; ++n) {
        for (std::size_t i = to_count(c.entry(n)); i > 0; --i) {
            std::size_t y = by.add_cycle(n);
            pending.emplace_back(bx.add_cycle(n), y);
            pending.emplace_back(bx.add_cycle(n), y);
        }
    }
    triple.X = bx.take();
    triple.Y = by.take();
    triple.horizon = N;
    triple.target = f;
    triple.phi.point_map.assign(triple.X.point_count, triple.Y.infinity_point);
    for (const auto& [src, dst] : pending) {
        assign_cycle(triple.phi, triple.X.cycles[src], triple.Y.cycles[dst]);
    }
    return triple;
}

RealizationTriple plus_u_realization(const Sequence& f) {
    const Sequence g = pointwise_add(f, Sequence::constant(f.length(), 1));
    RealizabilityReport rep = check_exact(g);
    if (!rep.realizable()) {
        throw std::invalid_argument("plus_u_realization: f + u is not exactly realizable");
    }
    const Sequence c = rep.orbit_counts.to_integer_sequence();
    const std::size_t N = f.length();

    SystemBuilder bx, by;
    RealizationTriple triple;
    std::size_t fixed_target = by.add_cycle(1);  // the one-point identity system
    std::vector<std::size_t> sources;
    for (std::size_t n = 1; n <= N; ++n) {
        for (std::size_t i = to_count(c.entry(n)); i > 0; --i) {
            sources.push_back(bx.add_cycle(n));
        }
    }
    triple.X = bx.take();
    triple.Y = by.take();
    triple.horizon = N;
    triple.target = f;
    triple.phi.point_map.assign(triple.X.point_count, triple.Y.infinity_point);
    for (std::size_t src : sources) {
        assign_cycle(triple.phi, triple.X.cycles[src], triple.Y.cycles[fixed_target]);
    }
    return triple;
}

}  // namespace erl
