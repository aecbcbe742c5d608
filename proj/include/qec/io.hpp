#pragma once

#include "qec/codes.hpp"
#include "qec/config.hpp"
#include "qec/decoder.hpp"
#include "qec/kl.hpp"
#include "qec/state.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>

namespace qec {

using ojson = nlohmann::ordered_json;

// Doubles are emitted with 17 significant digits ("%.17g"), which pins the
// exact bit pattern and keeps rewrites byte-stable.
std::string fmt17(double value);

// Serializer for all artifacts: insertion-ordered keys, 17-digit doubles,
// arrays of scalars kept on one line.
std::string dump_json(const ojson& j);

ojson state_to_json(const StateVec& state);
StateVec state_from_json(const ojson& j, std::size_t amp_cap = kDefaultAmpCap);

// State file: {"N": int, "registers": int, "amplitudes": [[re, im], ...]}
// in basis-index order, plus an optional "meta" object that readers ignore.
void write_state_file(const StateVec& state, const std::string& path,
                      const std::optional<ojson>& meta = std::nullopt);
StateVec read_state_file(const std::string& path, std::size_t amp_cap = kDefaultAmpCap);

ojson code_to_json(const CodeSpec& code);

ojson kl_report_to_json(const KLReport& report);

ojson syndrome_to_json(const SyndromeRecord& record);
ojson outcome_to_json(const RecoveryOutcome& outcome, bool include_states = false);

} // namespace qec
