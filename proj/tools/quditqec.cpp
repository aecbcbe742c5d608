// Command-line front end: encode / corrupt / recover / verify-kl / group /
// bound / roundtrip over nine-register qudit codes, with JSON artifacts.

#include "qec/codes.hpp"
#include "qec/decoder.hpp"
#include "qec/error_model.hpp"
#include "qec/io.hpp"
#include "qec/kl.hpp"
#include "qec/random.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace qec;

struct GlobalOpts {
    int N = 2;
    std::uint64_t seed = 0;
    double tol = kKlTol;
    std::size_t cap = kDefaultAmpCap;
    std::string out;
    bool quiet = false;
};

void emit(const GlobalOpts& g, const ojson& j) {
    const std::string text = dump_json(j);
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw std::runtime_error("cannot open '" + g.out + "' for writing");
    f << text;
}

void warn(const GlobalOpts& g, const std::string& msg) {
    if (!g.quiet) std::cerr << "warning: " << msg << "\n";
}

std::vector<cplx> parse_amps(const std::string& text) {
    std::vector<cplx> amps;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string tok =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const auto colon = tok.find(':');
        try {
            if (colon == std::string::npos) {
                amps.emplace_back(std::stod(tok), 0.0);
            } else {
                amps.emplace_back(std::stod(tok.substr(0, colon)),
                                  std::stod(tok.substr(colon + 1)));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad amplitude '" + tok + "' (expected re or re:im)");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return amps;
}

int cmd_encode(const GlobalOpts& g, int basis, const std::string& amps_text,
               const std::string& via) {
    StateVec logical(g.N, 1);
    if (!amps_text.empty()) {
        const auto amps = parse_amps(amps_text);
        if (static_cast<int>(amps.size()) != g.N) {
            throw std::invalid_argument("expected " + std::to_string(g.N) + " amplitudes, got " +
                                        std::to_string(amps.size()));
        }
        for (std::size_t i = 0; i < amps.size(); ++i) logical[i] = amps[i];
        const double nsq = logical.norm_sq();
        if (nsq < 1e-24) throw std::invalid_argument("logical amplitudes are all zero");
        if (std::abs(nsq - 1.0) > kCheckTol) {
            warn(g, "logical state auto-normalized (norm was " + fmt17(std::sqrt(nsq)) + ")");
            logical.normalize();
        }
    } else {
        if (basis < 0 || basis >= g.N) {
            throw std::invalid_argument("--basis must be in 0.." + std::to_string(g.N - 1));
        }
        logical[static_cast<std::size_t>(basis)] = 1.0;
    }

    state_dim(g.N, 9, g.cap);
    const StateVec encoded =
        via == "circuit" ? encode_nine_by_circuit(logical) : encode_nine(logical);
    if (g.out.empty()) {
        std::cout << dump_json(state_to_json(encoded));
    } else {
        write_state_file(encoded, g.out);
    }
    return 0;
}

int cmd_corrupt(const GlobalOpts& g, const std::string& in, const std::string& error_spec,
                int reg) {
    const StateVec state = read_state_file(in, g.cap);
    const ErrorLabel label = ErrorLabel::parse(error_spec);
    StateVec out = apply_local(state, label.to_operator(state.levels()), reg);

    std::optional<ojson> meta;
    const double nsq = out.norm_sq();
    if (nsq < 1e-24) {
        throw std::invalid_argument("error '" + error_spec + "' annihilates the state");
    }
    if (std::abs(nsq - 1.0) > kCheckTol) {
        const double pre_norm = std::sqrt(nsq);
        out.normalize();
        meta = ojson{{"applied", label.str() + "@" + std::to_string(reg)},
                     {"pre_norm", pre_norm},
                     {"renormalized", true}};
        warn(g, "non-unitary error renormalized (pre-norm " + fmt17(pre_norm) + ")");
    }

    if (g.out.empty()) {
        ojson j = state_to_json(out);
        if (meta) j["meta"] = *meta;
        std::cout << dump_json(j);
    } else {
        write_state_file(out, g.out, meta);
    }
    return 0;
}

int cmd_recover(const GlobalOpts& g, const std::string& in, const std::string& mode,
                const std::string& reference_path, bool with_states, bool reencode) {
    const StateVec state = read_state_file(in, g.cap);
    std::optional<StateVec> reference;
    if (!reference_path.empty()) {
        reference = read_state_file(reference_path, g.cap);
        if (reference->registers() != 1 || reference->levels() != state.levels()) {
            throw std::invalid_argument("--reference must hold a single-register state with the "
                                        "same N as the input");
        }
    }
    RecoverOptions opts;
    opts.reencode = reencode;
    if (reference) opts.reference = &*reference;

    ojson j;
    j["command"] = "recover";
    j["mode"] = mode;
    bool any_uncorrectable = false;
    if (mode == "sample") {
        j["seed"] = g.seed;
        const RecoveryOutcome outcome = recover_sample(state, g.seed, opts);
        any_uncorrectable = outcome.syndrome.uncorrectable;
        j["outcome"] = outcome_to_json(outcome, with_states);
    } else {
        const auto outcomes = recover_enumerate(state, opts);
        double total = 0.0;
        ojson arr = ojson::array();
        for (const auto& o : outcomes) {
            total += o.syndrome.branch_probability;
            any_uncorrectable = any_uncorrectable || o.syndrome.uncorrectable;
            arr.push_back(outcome_to_json(o, with_states));
        }
        j["branches"] = std::move(arr);
        j["total_probability"] = total;
    }
    j["uncorrectable"] = any_uncorrectable;
    emit(g, j);
    return any_uncorrectable ? 1 : 0;
}

int cmd_verify_kl(const GlobalOpts& g, const std::string& errors_path) {
    state_dim(g.N, 9, g.cap);
    const CodeSpec code = build_nine_code(g.N, g.cap);
    std::vector<ErrorChain> errors;
    if (errors_path.empty()) {
        errors = single_register_error_set(g.N, 9);
    } else {
        std::ifstream f(errors_path);
        if (!f) throw std::runtime_error("cannot open error list '" + errors_path + "'");
        nlohmann::json list;
        f >> list;
        if (list.is_object() && list.contains("errors")) list = list.at("errors");
        if (!list.is_array()) {
            throw std::invalid_argument("error list must be a JSON array of chain strings");
        }
        for (const auto& item : list) {
            errors.push_back(ErrorChain::parse(item.get<std::string>()));
        }
    }
    const KLReport report = kl_check(code, errors, g.tol);
    emit(g, kl_report_to_json(report));
    return report.passed ? 0 : 1;
}

int cmd_group(const GlobalOpts& g) {
    if (g.N > 4) {
        throw std::invalid_argument("group enumeration is capped at N <= 4 (got N = " +
                                    std::to_string(g.N) + ")");
    }
    const GroupClosure closure = generate_group(g.N);
    bool all_signed = true;
    for (const auto& e : closure.elements) {
        all_signed = all_signed && is_signed_permutation(e);
    }
    ojson j;
    j["command"] = "group";
    j["N"] = g.N;
    j["order"] = closure.order;
    j["quotient_order"] = closure.order / 2; // modulo {+-I}
    j["is_signed_permutation_group"] = all_signed;
    emit(g, j);
    return all_signed ? 0 : 1;
}

int cmd_bound(const GlobalOpts& g, int max_n) {
    ojson rows = ojson::array();
    std::optional<int> minimal;
    for (int n = 1; n <= max_n; ++n) {
        const DimensionBound b = dimension_bound(g.N, n);
        ojson row;
        row["n"] = n;
        row["lhs"] = b.lhs;
        if (b.rhs_overflow) {
            row["rhs"] = nullptr;
        } else {
            row["rhs"] = b.rhs;
        }
        row["satisfied"] = b.satisfied;
        row["perfect"] = b.perfect;
        rows.push_back(std::move(row));
        if (b.satisfied && !minimal) minimal = n;
    }
    ojson j;
    j["command"] = "bound";
    j["N"] = g.N;
    j["rows"] = std::move(rows);
    if (minimal) {
        j["minimal_satisfying_n"] = *minimal;
    } else {
        j["minimal_satisfying_n"] = nullptr;
    }
    emit(g, j);
    return 0;
}

int cmd_roundtrip(const GlobalOpts& g, int trials, const std::string& error_source) {
    state_dim(g.N, 9, g.cap);
    const int n_pairs = g.N * (g.N - 1) / 2;
    const int basis_kinds = (g.N - 1) + 2 * n_pairs;

    int failures = 0;
    double min_fidelity = 1.0;
    double fidelity_sum = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(mix_seed(g.seed, static_cast<std::uint64_t>(trial)));
        const StateVec logical = random_state(g.N, 1, rng);
        const StateVec encoded = encode_nine(logical);
        const int reg = std::uniform_int_distribution<int>(0, 8)(rng);

        ErrorLabel label;
        if (error_source == "basis") {
            const int pick = std::uniform_int_distribution<int>(0, basis_kinds - 1)(rng);
            if (pick < g.N - 1) {
                label = ErrorLabel::r(pick + 1);
            } else {
                const auto pairs = index_pairs(g.N);
                const int k = pick - (g.N - 1);
                const auto& [m, n] = pairs[static_cast<std::size_t>(k % n_pairs)];
                label = k < n_pairs ? ErrorLabel::p(m, n) : ErrorLabel::q(m, n);
            }
        } else if (error_source == "random-unitary") {
            label = ErrorLabel::custom_matrix(random_unitary(g.N, rng), "custom:unitary");
        } else {
            label = ErrorLabel::custom_matrix(random_matrix(g.N, rng), "custom:matrix");
        }

        StateVec corrupted = apply_local(encoded, label.to_operator(g.N), reg);
        const double nsq = corrupted.norm_sq();
        if (nsq < 1e-24) { // measure-zero Gaussian corner: count as failure
            ++failures;
            min_fidelity = 0.0;
            continue;
        }
        if (std::abs(nsq - 1.0) > kCheckTol) corrupted.normalize();

        RecoverOptions opts;
        opts.reference = &logical;
        const RecoveryOutcome outcome =
            recover_sample(corrupted, mix_seed(g.seed, 0x5eedULL + static_cast<std::uint64_t>(trial)), opts);
        double fid = 0.0;
        if (!outcome.syndrome.uncorrectable) fid = *outcome.fidelity_vs_reference;
        min_fidelity = std::min(min_fidelity, fid);
        fidelity_sum += fid;
        if (outcome.syndrome.uncorrectable || fid < 1.0 - g.tol) ++failures;
    }

    ojson j;
    j["command"] = "roundtrip";
    j["N"] = g.N;
    j["trials"] = trials;
    j["seed"] = g.seed;
    j["error_source"] = error_source;
    j["min_fidelity"] = min_fidelity;
    j["mean_fidelity"] = trials ? fidelity_sum / trials : 0.0;
    j["failures"] = failures;
    emit(g, j);
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nine-register qudit error-correction toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env_cap = std::getenv("QECC_CAP")) {
        try {
            g.cap = static_cast<std::size_t>(std::stoull(env_cap));
        } catch (const std::exception&) {
            std::cerr << R"({"error": "QECC_CAP must be an integer"})" << "\n";
            return 2;
        }
    }
    app.add_option("--N", g.N, "Levels per register (N >= 2)");
    app.add_option("--seed", g.seed, "Seed for sampling and random draws");
    app.add_option("--tol", g.tol, "Verdict tolerance");
    app.add_option("--cap", g.cap, "Amplitude-count cap (also env QECC_CAP)");
    app.add_option("--out", g.out, "Output file (default: stdout)");
    app.add_flag("--quiet", g.quiet, "Suppress warnings");

    // encode
    auto* enc = app.add_subcommand("encode", "Encode a logical state into nine registers");
    enc->fallthrough();
    int basis = 0;
    std::string amps_text, via = "formula";
    auto* basis_opt = enc->add_option("--basis", basis, "Logical basis index m");
    auto* amps_opt = enc->add_option("--amps", amps_text, "Logical amplitudes c0,c1,... (re or re:im)");
    basis_opt->excludes(amps_opt);
    enc->add_option("--via", via, "Encoder route")->check(CLI::IsMember({"formula", "circuit"}));

    // corrupt
    auto* cor = app.add_subcommand("corrupt", "Apply a single-register error to a state file");
    cor->fallthrough();
    std::string cor_in, cor_error;
    int cor_reg = 0;
    cor->add_option("--in", cor_in, "Input state file")->required();
    cor->add_option("--error", cor_error, "Error label: I, R:i, P:m,n, Q:m,n, custom:@file.json")
        ->required();
    cor->add_option("--reg", cor_reg, "Target register")->required();

    // recover
    auto* rec = app.add_subcommand("recover", "Run syndrome measurement and correction");
    rec->fallthrough();
    std::string rec_in, rec_mode = "enumerate", rec_reference;
    bool rec_states = false, rec_reencode = false;
    rec->add_option("--in", rec_in, "Input state file")->required();
    rec->add_option("--mode", rec_mode, "Measurement mode")
        ->check(CLI::IsMember({"enumerate", "sample"}));
    rec->add_option("--reference", rec_reference, "Single-register reference state file");
    rec->add_flag("--with-states", rec_states, "Include state amplitudes in the output");
    rec->add_flag("--reencode", rec_reencode, "Also emit the re-encoded nine-register state");

    // verify-kl
    auto* vkl = app.add_subcommand("verify-kl", "Check the correctability condition");
    vkl->fallthrough();
    std::string vkl_errors;
    vkl->add_option("--errors", vkl_errors,
                    "JSON file with error chain strings (default: single-register spanning set)");

    // group
    auto* grp = app.add_subcommand("group", "Enumerate the generated error group");
    grp->fallthrough();

    // bound
    auto* bnd = app.add_subcommand("bound", "Tabulate the dimension bound over n");
    bnd->fallthrough();
    int max_n = 12;
    bnd->add_option("--max-n", max_n, "Largest register count to tabulate");

    // roundtrip
    auto* rtp = app.add_subcommand("roundtrip", "Monte-Carlo encode/corrupt/recover benchmark");
    rtp->fallthrough();
    int trials = 100;
    std::string error_source = "basis";
    rtp->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);
    rtp->add_option("--error-source", error_source, "Error distribution")
        ->check(CLI::IsMember({"basis", "random-matrix", "random-unitary"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (g.N < 2) throw std::invalid_argument("--N must be >= 2");
        if (enc->parsed()) {
            return cmd_encode(g, basis, amps_text, via);
        }
        if (cor->parsed()) {
            return cmd_corrupt(g, cor_in, cor_error, cor_reg);
        }
        if (rec->parsed()) {
            return cmd_recover(g, rec_in, rec_mode, rec_reference, rec_states, rec_reencode);
        }
        if (vkl->parsed()) {
            return cmd_verify_kl(g, vkl_errors);
        }
        if (grp->parsed()) {
            return cmd_group(g);
        }
        if (bnd->parsed()) {
            return cmd_bound(g, max_n);
        }
        if (rtp->parsed()) {
            return cmd_roundtrip(g, trials, error_source);
        }
    } catch (const std::exception& e) {
        ojson err;
        err["error"] = e.what();
        std::cerr << dump_json(err);
        return 2;
    }
    return 2;
}
