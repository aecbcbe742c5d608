#include "qec/decoder.hpp"

#include "qec/codes.hpp"
#include "qec/kernels.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace qec {

namespace {

// |v> -> |(v + delta) mod N>
Operator shift_gate(int N, int delta) {
    Operator op(N);
    const int d = ((delta % N) + N) % N;
    for (int v = 0; v < N; ++v) {
        op.at((v + d) % N, v) = 1.0;
    }
    return op;
}

void require_nine(const StateVec& state, const char* who) {
    if (state.registers() != 9) {
        throw std::invalid_argument(std::string(who) + ": expected a 9-register state, got " +
                                    std::to_string(state.registers()));
    }
}

void require_normalized(const StateVec& state, const char* who) {
    if (!state.is_normalized(1e-9)) {
        throw std::invalid_argument(std::string(who) + ": state is not normalized");
    }
}

struct Triple {
    std::size_t lead, f1, f2; // strides
};

Triple triple_strides(const StateVec& state, int r_lead, int r_f1, int r_f2) {
    return {state.stride(r_lead), state.stride(r_f1), state.stride(r_f2)};
}

int sector_of(std::size_t x, const Triple& t, int N) {
    const std::size_t un = static_cast<std::size_t>(N);
    const int v0 = static_cast<int>((x / t.lead) % un);
    const int v1 = static_cast<int>((x / t.f1) % un);
    const int v2 = static_cast<int>((x / t.f2) % un);
    const int d1 = (v1 - v0 + N) % N;
    const int d2 = (v2 - v0 + N) % N;
    return d1 * N + d2;
}

// Sector probabilities of the difference observables over a register triple,
// indexed by d1*N + d2.
std::vector<double> sector_probabilities(const StateVec& state, const Triple& t) {
    const int N = state.levels();
    std::vector<double> probs(static_cast<std::size_t>(N) * N, 0.0);
    for (std::size_t x = 0; x < state.dim(); ++x) {
        const cplx a = state[x];
        if (a == cplx{}) continue;
        probs[static_cast<std::size_t>(sector_of(x, t, N))] += std::norm(a);
    }
    return probs;
}

StateVec project_sector(const StateVec& state, const Triple& t, int sector, double prob) {
    const int N = state.levels();
    StateVec post(state.levels(), state.registers(), state.dim());
    for (std::size_t x = 0; x < state.dim(); ++x) {
        if (sector_of(x, t, N) == sector) post[x] = state[x];
    }
    kernels::active().cscale(1.0 / std::sqrt(prob), post.amps().data(), post.dim());
    return post;
}

std::vector<MeasureBranch> enumerate_sectors(const StateVec& state, const Triple& t) {
    const int N = state.levels();
    const auto probs = sector_probabilities(state, t);
    std::vector<MeasureBranch> branches;
    for (int s = 0; s < N * N; ++s) {
        const double p = probs[static_cast<std::size_t>(s)];
        if (p <= kBranchEps) continue;
        branches.push_back({s / N, s % N, p, project_sector(state, t, s, p)});
    }
    return branches;
}

MeasureBranch sample_sector(const StateVec& state, const Triple& t, std::mt19937_64& rng) {
    const int N = state.levels();
    const auto probs = sector_probabilities(state, t);
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    double acc = 0.0;
    int chosen = -1;
    for (int s = 0; s < N * N; ++s) {
        const double p = probs[static_cast<std::size_t>(s)];
        if (p <= kBranchEps) continue;
        acc += p;
        chosen = s;
        if (u < acc) break;
    }
    if (chosen < 0) {
        throw std::runtime_error("measurement: no sector has nonnegligible probability");
    }
    const double p = probs[static_cast<std::size_t>(chosen)];
    return {chosen / N, chosen % N, p, project_sector(state, t, chosen, p)};
}

void check_block_range(int block) {
    if (block < 0 || block > 2) {
        throw std::invalid_argument("block must be 0, 1 or 2, got " + std::to_string(block));
    }
}

} // namespace

bool syndrome_correctable(int d1, int d2) {
    return d1 == 0 || d2 == 0 || d1 == d2;
}

std::optional<std::pair<int, int>> syndrome_correction(int N, int d1, int d2) {
    if (d1 == 0 && d2 == 0) return std::nullopt;
    if (d1 == d2) return std::make_pair(0, d1);          // lead off by -d: shift +d
    if (d2 == 0) return std::make_pair(1, (N - d1) % N); // follower 1 off by +d
    if (d1 == 0) return std::make_pair(2, (N - d2) % N); // follower 2 off by +d
    throw std::invalid_argument("syndrome (" + std::to_string(d1) + "," + std::to_string(d2) +
                                ") has two distinct nonzero components: uncorrectable");
}

std::vector<MeasureBranch> measure_flip_syndrome(const StateVec& state, int block) {
    require_nine(state, "measure_flip_syndrome");
    require_normalized(state, "measure_flip_syndrome");
    check_block_range(block);
    return enumerate_sectors(state,
                             triple_strides(state, 3 * block, 3 * block + 1, 3 * block + 2));
}

MeasureBranch measure_flip_syndrome_sample(const StateVec& state, int block,
                                           std::mt19937_64& rng) {
    require_nine(state, "measure_flip_syndrome");
    require_normalized(state, "measure_flip_syndrome");
    check_block_range(block);
    return sample_sector(state, triple_strides(state, 3 * block, 3 * block + 1, 3 * block + 2),
                         rng);
}

StateVec correct_flip(const StateVec& state, int block, std::pair<int, int> outcome) {
    require_nine(state, "correct_flip");
    check_block_range(block);
    const auto corr = syndrome_correction(state.levels(), outcome.first, outcome.second);
    if (!corr) return state;
    return apply_local(state, shift_gate(state.levels(), corr->second), 3 * block + corr->first);
}

namespace {

void require_blocks_aligned(const StateVec& state, const char* who) {
    const int N = state.levels();
    std::array<std::size_t, 9> s{};
    for (int r = 0; r < 9; ++r) s[static_cast<std::size_t>(r)] = state.stride(r);
    const std::size_t un = static_cast<std::size_t>(N);
    for (std::size_t x = 0; x < state.dim(); ++x) {
        if (std::norm(state[x]) <= kBranchEps * kBranchEps) continue;
        for (int b = 0; b < 3; ++b) {
            const int v0 = static_cast<int>((x / s[static_cast<std::size_t>(3 * b)]) % un);
            const int v1 = static_cast<int>((x / s[static_cast<std::size_t>(3 * b + 1)]) % un);
            const int v2 = static_cast<int>((x / s[static_cast<std::size_t>(3 * b + 2)]) % un);
            if (v0 != v1 || v0 != v2) {
                throw std::invalid_argument(
                    std::string(who) +
                    ": block " + std::to_string(b) +
                    " has unequal digits; run flip correction first");
            }
        }
    }
}

// Uncopy each block onto its lead and inverse-DFT the leads: the frame in
// which an intact state reads sum_m c_m |m00m00m00>.
StateVec to_decoded_frame(const StateVec& state) {
    const int N = state.levels();
    const Operator uncopy = copy_gate(N).dagger();
    const Operator idft = dft_gate(N).dagger();
    StateVec out = state;
    for (int lead : {0, 3, 6}) {
        out = apply_local_pair(out, uncopy, lead, lead + 1);
        out = apply_local_pair(out, uncopy, lead, lead + 2);
    }
    for (int lead : {0, 3, 6}) {
        out = apply_local(out, idft, lead);
    }
    return out;
}

PhaseBranch phase_branch_from(const MeasureBranch& mb, int N) {
    PhaseBranch pb{mb.d1, mb.d2, mb.probability, false, std::nullopt, mb.post};
    if (!syndrome_correctable(mb.d1, mb.d2)) {
        pb.uncorrectable = true;
        return pb;
    }
    if (const auto corr = syndrome_correction(N, mb.d1, mb.d2)) {
        const int reg = corr->first * 3; // slots 0,1,2 -> leads 0,3,6
        pb.correction = SyndromeRecord::Correction{reg, corr->second};
        pb.post = apply_local(pb.post, shift_gate(N, corr->second), reg);
    }
    return pb;
}

} // namespace

std::vector<PhaseBranch> measure_and_correct_phase(const StateVec& state) {
    require_nine(state, "measure_and_correct_phase");
    require_normalized(state, "measure_and_correct_phase");
    require_blocks_aligned(state, "measure_and_correct_phase");
    const StateVec decoded = to_decoded_frame(state);
    std::vector<PhaseBranch> out;
    for (const auto& mb : enumerate_sectors(decoded, triple_strides(decoded, 0, 3, 6))) {
        out.push_back(phase_branch_from(mb, state.levels()));
    }
    return out;
}

PhaseBranch measure_and_correct_phase_sample(const StateVec& state, std::mt19937_64& rng) {
    require_nine(state, "measure_and_correct_phase");
    require_normalized(state, "measure_and_correct_phase");
    require_blocks_aligned(state, "measure_and_correct_phase");
    const StateVec decoded = to_decoded_frame(state);
    return phase_branch_from(sample_sector(decoded, triple_strides(decoded, 0, 3, 6), rng),
                             state.levels());
}

namespace {

// Final readout from the decoded frame: remove the lead repetition and
// extract register 0.
StateVec read_logical(const StateVec& decoded_frame) {
    const int N = decoded_frame.levels();
    const Operator uncopy = copy_gate(N).dagger();
    StateVec collapsed = apply_local_pair(decoded_frame, uncopy, 0, 3);
    collapsed = apply_local_pair(collapsed, uncopy, 0, 6);
    StateVec logical(N, 1);
    const std::size_t s0 = collapsed.stride(0);
    for (int m = 0; m < N; ++m) {
        logical[static_cast<std::size_t>(m)] = collapsed[static_cast<std::size_t>(m) * s0];
    }
    return logical;
}

RecoveryOutcome finish_branch(const PhaseBranch& pb, SyndromeRecord rec,
                              const RecoverOptions& opts) {
    rec.phase_syndrome = std::make_pair(pb.e1, pb.e2);
    rec.phase_correction = pb.correction;
    rec.branch_probability *= pb.probability;
    RecoveryOutcome out;
    if (pb.uncorrectable) {
        rec.uncorrectable = true;
        out.syndrome = rec;
        return out;
    }
    out.syndrome = rec;
    out.logical = read_logical(pb.post);
    if (opts.reencode) out.reencoded = encode_nine(*out.logical);
    if (opts.reference) {
        out.fidelity_vs_reference =
            fidelity_up_to_phase(*opts.reference, *out.logical, /*allow_unnormalized=*/true);
    }
    return out;
}

void enumerate_from_block(const StateVec& state, int block, SyndromeRecord rec,
                          const RecoverOptions& opts, std::vector<RecoveryOutcome>& out) {
    if (block == 3) {
        for (const auto& pb : measure_and_correct_phase(state)) {
            out.push_back(finish_branch(pb, rec, opts));
        }
        return;
    }
    for (const auto& mb : measure_flip_syndrome(state, block)) {
        SyndromeRecord next = rec;
        next.flip_syndromes[static_cast<std::size_t>(block)] = std::make_pair(mb.d1, mb.d2);
        next.branch_probability = rec.branch_probability * mb.probability;
        if (!syndrome_correctable(mb.d1, mb.d2)) {
            next.uncorrectable = true;
            RecoveryOutcome dead;
            dead.syndrome = next;
            out.push_back(std::move(dead));
            continue;
        }
        StateVec corrected = mb.post;
        if (const auto corr = syndrome_correction(state.levels(), mb.d1, mb.d2)) {
            const int reg = 3 * block + corr->first;
            next.flip_corrections[static_cast<std::size_t>(block)] =
                SyndromeRecord::Correction{reg, corr->second};
            corrected = apply_local(corrected, shift_gate(state.levels(), corr->second), reg);
        }
        enumerate_from_block(corrected, block + 1, next, opts, out);
    }
}

} // namespace

std::vector<RecoveryOutcome> recover_enumerate(const StateVec& state,
                                               const RecoverOptions& opts) {
    require_nine(state, "recover");
    require_normalized(state, "recover");
    std::vector<RecoveryOutcome> out;
    enumerate_from_block(state, 0, SyndromeRecord{}, opts, out);
    return out;
}

RecoveryOutcome recover_sample(const StateVec& state, std::uint64_t seed,
                               const RecoverOptions& opts) {
    require_nine(state, "recover");
    require_normalized(state, "recover");
    std::mt19937_64 rng(seed);
    SyndromeRecord rec;
    StateVec current = state;
    for (int block = 0; block < 3; ++block) {
        MeasureBranch mb = measure_flip_syndrome_sample(current, block, rng);
        rec.flip_syndromes[static_cast<std::size_t>(block)] = std::make_pair(mb.d1, mb.d2);
        rec.branch_probability *= mb.probability;
        if (!syndrome_correctable(mb.d1, mb.d2)) {
            rec.uncorrectable = true;
            RecoveryOutcome dead;
            dead.syndrome = rec;
            return dead;
        }
        current = mb.post;
        if (const auto corr = syndrome_correction(state.levels(), mb.d1, mb.d2)) {
            const int reg = 3 * block + corr->first;
            rec.flip_corrections[static_cast<std::size_t>(block)] =
                SyndromeRecord::Correction{reg, corr->second};
            current = apply_local(current, shift_gate(state.levels(), corr->second), reg);
        }
    }
    return finish_branch(measure_and_correct_phase_sample(current, rng), rec, opts);
}

} // namespace qec
