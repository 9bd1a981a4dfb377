#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "erl/paper_sequences.hpp"
#include "erl/realizability.hpp"
#include "erl/realize.hpp"
#include "erl/serialize.hpp"
#include "erl/transforms.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string read_stdin() {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

// CSV of exact rationals; accepts "p/q" tokens and "-" for stdin.
erl::OrbSequence parse_rational_csv(const std::string& text) {
    std::vector<erl::ExactRational> entries;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        auto b = token.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) {
            throw InputError("empty entry in sequence input");
        }
        auto e = token.find_last_not_of(" \t\r\n");
        token = token.substr(b, e - b + 1);
        erl::ExactRational q;
        if (mpq_set_str(q.get_mpq_t(), token.c_str(), 10) != 0 || q.get_den() == 0) {
            throw InputError("invalid rational literal: '" + token + "'");
        }
        q.canonicalize();
        entries.push_back(std::move(q));
    }
    if (entries.empty()) {
        throw InputError("empty sequence input");
    }
    return erl::OrbSequence(std::move(entries));
}

struct SequenceInput {
    std::string terms;
    std::string bfile_path;
    std::string offset_align = "index1";
    std::size_t horizon = 0;

    void attach(CLI::App* cmd, bool with_horizon = true) {
        auto* t = cmd->add_option("--terms", terms, "comma-separated integer sequence ('-' reads stdin)");
        auto* b = cmd->add_option("--bfile", bfile_path, "path to an OEIS b-file");
        t->excludes(b);
        b->excludes(t);
        cmd->add_option("--offset-align", offset_align,
                        "b-file index alignment: 'first' or 'index1'")
            ->check(CLI::IsMember({"first", "index1"}));
        if (with_horizon) {
            cmd->add_option("--horizon", horizon, "truncate input to N terms");
        }
    }

    erl::Sequence load() const {
        erl::Sequence seq;
        if (!bfile_path.empty()) {
            erl::BFile file = erl::parse_bfile(read_file(bfile_path));
            auto align = offset_align == "first" ? erl::OffsetAlign::first
                                                 : erl::OffsetAlign::index1;
            seq = erl::normalize(file, align);
        } else if (!terms.empty()) {
            std::string text = terms == "-" ? read_stdin() : terms;
            seq = erl::Sequence::from_csv(text);
        } else {
            throw InputError("one of --terms or --bfile is required");
        }
        if (horizon > 0) {
            if (horizon > seq.length()) {
                throw InputError("horizon " + std::to_string(horizon) + " exceeds the " +
                                 std::to_string(seq.length()) + " available terms");
            }
            std::vector<erl::ExactInt> cut(seq.entries().begin(),
                                           seq.entries().begin() + horizon);
            seq = erl::Sequence(std::move(cut));
        }
        return seq;
    }
};

std::string reason_name(erl::ViolationReason r) {
    return r == erl::ViolationReason::non_integer ? "non-integer" : "negative";
}

void print_report(const erl::RealizabilityReport& report) {
    std::cout << "mode: "
              << (report.mode == erl::RealizabilityMode::exact ? "exact" : "relative") << "\n";
    std::cout << "horizon: " << report.horizon << "\n";
    std::cout << "orbit_counts: " << report.orbit_counts.to_csv() << "\n";
    if (report.realizable()) {
        std::cout << "verdict: realizable-up-to-" << report.horizon << "\n";
    } else {
        const auto& v = *report.first_violation;
        std::cout << "verdict: rejected\n";
        std::cout << "first_violation: index " << v.index << ", value "
                  << erl::to_string(v.value) << ", reason " << reason_name(v.reason) << "\n";
    }
}

int run_transform(const std::string& dir, const SequenceInput& input,
                  const std::string& rational_terms) {
    erl::OrbSequence in_seq;
    if (!rational_terms.empty()) {
        std::string text = rational_terms == "-" ? read_stdin() : rational_terms;
        in_seq = parse_rational_csv(text);
    } else {
        in_seq = erl::OrbSequence::from_integers(input.load());
    }
    erl::OrbSequence out = dir == "fix" ? erl::fix(in_seq) : erl::orb(in_seq);
    std::cout << out.to_csv() << "\n";
    return kExitOk;
}

int run_check(const std::string& mode, const SequenceInput& input) {
    erl::Sequence seq = input.load();
    erl::RealizabilityReport report =
        mode == "exact" ? erl::check_exact(seq) : erl::check_relative(seq);
    print_report(report);
    return report.realizable() ? kExitOk : kExitRejected;
}

void print_decomposition(const erl::OrbitDecomposition& dec) {
    std::cout << "horizon: " << dec.horizon << "\n";
    for (const auto& [n, v] : dec.b) {
        std::cout << "b[" << n << "] = " << v.get_str() << "\n";
    }
    for (const auto& [key, v] : dec.a) {
        std::cout << "a[" << key.first << "," << key.second << "] = " << v.get_str() << "\n";
    }
    std::cout << "coefficients:";
    for (std::size_t n = 1; n <= dec.horizon; ++n) {
        std::cout << (n == 1 ? " " : ",") << dec.coefficient_at(n).get_str();
    }
    std::cout << "\n";
}

// Shared by decompose and realize: h-sequence input goes through
// check_relative; eta input is used as orbit counts directly.
erl::OrbitDecomposition decomposition_from_input(const SequenceInput& input,
                                                 const std::string& orb_terms,
                                                 bool* rejected) {
    *rejected = false;
    if (!orb_terms.empty()) {
        std::string text = orb_terms == "-" ? read_stdin() : orb_terms;
        return erl::decompose(erl::Sequence::from_csv(text));
    }
    erl::Sequence h = input.load();
    erl::RealizabilityReport report = erl::check_relative(h);
    if (!report.realizable()) {
        print_report(report);
        *rejected = true;
        return {};
    }
    return erl::decompose(report.orbit_counts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Realizability of integer sequences as fixed point count differences"};
    app.require_subcommand(1);

    // transform
    auto* transform = app.add_subcommand("transform", "apply the fix or orb transform");
    std::string direction;
    transform->add_option("--dir", direction, "fix or orb")
        ->required()
        ->check(CLI::IsMember({"fix", "orb"}));
    SequenceInput transform_input;
    transform_input.attach(transform);
    std::string rational_terms;
    transform->add_option("--rational-terms", rational_terms,
                          "comma-separated rationals p/q ('-' reads stdin)");

    // check
    auto* check = app.add_subcommand("check", "test exact or relative realizability");
    std::string mode;
    check->add_option("--mode", mode, "exact or relative")
        ->required()
        ->check(CLI::IsMember({"exact", "relative"}));
    SequenceInput check_input;
    check_input.attach(check);

    // decompose
    auto* decompose_cmd = app.add_subcommand("decompose", "power-series decomposition of orb(h)");
    SequenceInput decompose_input;
    decompose_input.attach(decompose_cmd);
    std::string decompose_orb_terms;
    decompose_cmd->add_option("--orb", decompose_orb_terms,
                              "orbit-count sequence eta to decompose directly");

    // realize
    auto* realize_cmd = app.add_subcommand("realize", "build a realizing triple of permutation systems");
    SequenceInput realize_input;
    realize_input.attach(realize_cmd);
    std::string realize_orb_terms;
    realize_cmd->add_option("--orb", realize_orb_terms, "orbit-count sequence eta");
    std::string emit_path;
    realize_cmd->add_option("--emit", emit_path, "write the serialized triple to this path");
    bool verify = false;
    realize_cmd->add_flag("--verify", verify, "run the brute-force verification");

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate a named sequence");
    std::string gen_name;
    gen_cmd->add_option("--name", gen_name, "sequence name");
    std::size_t gen_terms = 0;
    gen_cmd->add_option("--terms", gen_terms, "number of terms");
    bool list_names = false;
    gen_cmd->add_flag("--list", list_names, "list the available names");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "classify a sequence's realizability");
    SequenceInput classify_input;
    classify_input.attach(classify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (transform->parsed()) {
            return run_transform(direction, transform_input, rational_terms);
        }
        if (check->parsed()) {
            return run_check(mode, check_input);
        }
        if (decompose_cmd->parsed()) {
            bool rejected = false;
            erl::OrbitDecomposition dec =
                decomposition_from_input(decompose_input, decompose_orb_terms, &rejected);
            if (rejected) {
                return kExitRejected;
            }
            print_decomposition(dec);
            return kExitOk;
        }
        if (realize_cmd->parsed()) {
            bool rejected = false;
            erl::OrbitDecomposition dec =
                decomposition_from_input(realize_input, realize_orb_terms, &rejected);
            if (rejected) {
                return kExitRejected;
            }
            std::size_t horizon = realize_input.horizon > 0 ? realize_input.horizon : dec.horizon;
            erl::RealizationTriple triple = erl::build_realization(dec, horizon);
            if (!emit_path.empty()) {
                std::ofstream out(emit_path, std::ios::binary);
                if (!out) {
                    throw InputError("cannot write file: " + emit_path);
                }
                out << erl::serialize_triple(triple);
            }
            std::cout << "target: " << triple.target.to_csv() << "\n";
            std::cout << "X cycles: " << triple.X.cycles.size()
                      << ", Y cycles: " << triple.Y.cycles.size() << "\n";
            if (verify) {
                erl::VerificationReport report = erl::verify_factor(triple);
                std::cout << "equivariant: " << (report.equivariant ? "pass" : "fail") << "\n";
                std::cout << "surjective: " << (report.surjective ? "pass" : "fail") << "\n";
                std::cout << "difference: " << (report.difference_ok ? "pass" : "fail") << "\n";
                if (report.equivariance_witness) {
                    std::cerr << "equivariance fails at point " << *report.equivariance_witness
                              << "\n";
                }
                if (report.surjectivity_witness) {
                    std::cerr << "no preimage for point " << *report.surjectivity_witness << "\n";
                }
                if (report.difference_witness) {
                    std::cerr << "count difference wrong at n = " << *report.difference_witness
                              << "\n";
                }
                if (!report.all_pass()) {
                    return kExitRejected;
                }
            }
            return kExitOk;
        }
        if (gen_cmd->parsed()) {
            if (list_names) {
                for (const auto& spec : erl::sequence_catalog()) {
                    std::cout << spec.name << ": " << spec.description << "\n";
                }
                return kExitOk;
            }
            if (gen_name.empty() || gen_terms == 0) {
                throw InputError("gen requires --name and --terms (or --list)");
            }
            std::cout << erl::gen(gen_name, gen_terms).to_csv() << "\n";
            return kExitOk;
        }
        if (classify_cmd->parsed()) {
            erl::Classification result = erl::classify(classify_input.load());
            std::cout << "horizon: " << result.horizon << "\n";
            std::cout << "class: " << erl::to_string(result.verdict) << "\n";
            if (result.exact_report.first_violation) {
                const auto& v = *result.exact_report.first_violation;
                std::cout << "exact_violation: index " << v.index << ", value "
                          << erl::to_string(v.value) << ", reason " << reason_name(v.reason)
                          << "\n";
            }
            if (result.relative_report.first_violation) {
                const auto& v = *result.relative_report.first_violation;
                std::cout << "relative_violation: index " << v.index << ", value "
                          << erl::to_string(v.value) << ", reason " << reason_name(v.reason)
                          << "\n";
            }
            return result.verdict == erl::SequenceClass::not_relatively_realizable
                       ? kExitRejected
                       : kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
