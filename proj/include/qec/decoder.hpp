#pragma once

#include "qec/config.hpp"
#include "qec/state.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace qec {

// One projective measurement branch of a difference syndrome (d1, d2) =
// (v_f1 - v_lead, v_f2 - v_lead) mod N over a register triple.
struct MeasureBranch {
    int d1 = 0;
    int d2 = 0;
    double probability = 0.0;
    StateVec post; // projected and renormalized
};

// Syndrome observables and corrections applied along one recovery branch.
struct SyndromeRecord {
    struct Correction {
        int reg = 0;   // register the modular shift was applied to
        int shift = 0; // shift amount in Z_N
    };

    std::array<std::optional<std::pair<int, int>>, 3> flip_syndromes;
    std::array<std::optional<Correction>, 3> flip_corrections;
    std::optional<std::pair<int, int>> phase_syndrome;
    std::optional<Correction> phase_correction;
    double branch_probability = 1.0;
    bool uncorrectable = false;
};

struct RecoveryOutcome {
    std::optional<StateVec> logical;   // withheld when uncorrectable
    std::optional<StateVec> reencoded; // filled on request
    SyndromeRecord syndrome;
    std::optional<double> fidelity_vs_reference;
};

// Pattern rules shared by the flip and phase stages.  A measured pair is
// correctable iff it lies in {(0,0), (d,d), (d,0), (0,d)}: (d,d) means the
// lead register is off by -d (shift it by +d), (d,0)/(0,d) mean follower
// 1/2 is off by +d (shift it by -d).  Returns (slot in {0,1,2}, shift) or
// nullopt for (0,0); throws for two distinct nonzero components.
std::optional<std::pair<int, int>> syndrome_correction(int N, int d1, int d2);
bool syndrome_correctable(int d1, int d2);

// Projective measurement of the two difference observables of one block
// (registers 3b, 3b+1, 3b+2).  Enumerates every branch with probability
// above kBranchEps, ordered by (d1, d2).
std::vector<MeasureBranch> measure_flip_syndrome(const StateVec& state, int block);
MeasureBranch measure_flip_syndrome_sample(const StateVec& state, int block,
                                           std::mt19937_64& rng);

// Applies the modular-shift correction for a measured flip outcome.  Valid
// on a (d1, d2)-sector state: every surviving component of the deviant
// register is offset by the same amount, so one shift restores equal
// digits across the block.
StateVec correct_flip(const StateVec& state, int block, std::pair<int, int> outcome);

// Phase-stage branch.  The post state is expressed in the decoded frame:
// blocks uncopied to |k00> and leads inverse-DFT'd, so an intact branch
// holds sum_m c_m |m00m00m00>.
struct PhaseBranch {
    int e1 = 0;
    int e2 = 0;
    double probability = 0.0;
    bool uncorrectable = false;
    std::optional<SyndromeRecord::Correction> correction;
    StateVec post;
};

// Requires every block flip-corrected (equal digits per block).  Uncopies
// each block onto its lead, inverse-DFTs the leads, measures the lead
// differences (e1, e2) = (v3 - v0, v6 - v0) mod N and corrects the deviant
// lead.  Any diagonal residue a flip correction left behind is removed
// here: the diagonal algebra is spanned by I and the R_i, and a diagonal
// error on a block digit becomes a constant-offset lead shift after the
// inverse DFT.
std::vector<PhaseBranch> measure_and_correct_phase(const StateVec& state);
PhaseBranch measure_and_correct_phase_sample(const StateVec& state, std::mt19937_64& rng);

struct RecoverOptions {
    bool reencode = false;
    const StateVec* reference = nullptr; // logical reference for fidelity
};

// Full pipeline: flip syndrome/correction on each block, phase stage,
// logical readout.  Enumerate mode walks every branch depth-first in
// deterministic syndrome order; branch probabilities sum to 1.
std::vector<RecoveryOutcome> recover_enumerate(const StateVec& state,
                                               const RecoverOptions& opts = {});

// Samples a single branch with the seeded generator; bit-for-bit
// reproducible for a fixed seed on one platform.
RecoveryOutcome recover_sample(const StateVec& state, std::uint64_t seed,
                               const RecoverOptions& opts = {});

} // namespace qec
