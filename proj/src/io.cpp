#include "qec/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qec {

std::string fmt17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace {

bool is_scalar(const ojson& j) { return !j.is_object() && !j.is_array(); }

void dump_scalar(const ojson& j, std::string& out) {
    if (j.is_number_float()) {
        out += fmt17(j.get<double>());
    } else {
        out += j.dump(); // integers, bools, null, escaped strings
    }
}

void dump_rec(const ojson& j, std::string& out, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    const std::string pad_in(static_cast<std::size_t>(depth + 1) * 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad_in;
            out += ojson(key).dump();
            out += ": ";
            dump_rec(value, out, depth + 1);
        }
        out += "\n" + pad + "}";
        return;
    }
    if (j.is_array()) {
        if (j.empty()) {
            out += "[]";
            return;
        }
        bool all_scalar = true;
        for (const auto& e : j) {
            if (!is_scalar(e)) {
                all_scalar = false;
                break;
            }
        }
        if (all_scalar) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ", ";
                dump_scalar(j.at(i), out);
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out += ",\n";
            out += pad_in;
            dump_rec(j.at(i), out, depth + 1);
        }
        out += "\n" + pad + "]";
        return;
    }
    dump_scalar(j, out);
}

} // namespace

std::string dump_json(const ojson& j) {
    std::string out;
    dump_rec(j, out, 0);
    out += "\n";
    return out;
}

ojson state_to_json(const StateVec& state) {
    ojson j;
    j["N"] = state.levels();
    j["registers"] = state.registers();
    ojson amps = ojson::array();
    for (const cplx& a : state.amps()) {
        amps.push_back(ojson::array({a.real(), a.imag()}));
    }
    j["amplitudes"] = std::move(amps);
    return j;
}

StateVec state_from_json(const ojson& j, std::size_t amp_cap) {
    if (!j.is_object() || !j.contains("N") || !j.contains("registers") ||
        !j.contains("amplitudes")) {
        throw std::invalid_argument("state JSON: expected keys N, registers, amplitudes");
    }
    const int levels = j.at("N").get<int>();
    const int registers = j.at("registers").get<int>();
    StateVec state(levels, registers, amp_cap);
    const auto& amps = j.at("amplitudes");
    if (!amps.is_array() || amps.size() != state.dim()) {
        throw std::invalid_argument("state JSON: amplitude count must be N^registers = " +
                                    std::to_string(state.dim()));
    }
    for (std::size_t i = 0; i < state.dim(); ++i) {
        const auto& pair = amps.at(i);
        if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument("state JSON: amplitudes must be [re, im] pairs");
        }
        state[i] = cplx(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
    return state;
}

void write_state_file(const StateVec& state, const std::string& path,
                      const std::optional<ojson>& meta) {
    ojson j = state_to_json(state);
    if (meta) j["meta"] = *meta;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << dump_json(j);
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

StateVec read_state_file(const std::string& path, std::size_t amp_cap) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open state file '" + path + "'");
    ojson j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error("state file '" + path + "': " + e.what());
    }
    return state_from_json(j, amp_cap);
}

ojson code_to_json(const CodeSpec& code) {
    ojson j;
    j["N"] = code.levels;
    j["registers"] = code.registers;
    ojson words = ojson::array();
    for (const auto& w : code.codewords) words.push_back(state_to_json(w));
    j["codewords"] = std::move(words);
    return j;
}

ojson kl_report_to_json(const KLReport& report) {
    ojson j;
    j["labels"] = report.error_labels;
    ojson lambda = ojson::array();
    for (const auto& row : report.lambda) {
        ojson jrow = ojson::array();
        for (const cplx& v : row) jrow.push_back(ojson::array({v.real(), v.imag()}));
        lambda.push_back(std::move(jrow));
    }
    j["lambda"] = std::move(lambda);
    j["max_offdiag_violation"] = report.max_offdiag_violation;
    j["max_lambda_inconsistency"] = report.max_lambda_inconsistency;
    j["tolerance"] = report.tolerance;
    j["passed"] = report.passed;
    return j;
}

namespace {

ojson correction_to_json(const std::optional<SyndromeRecord::Correction>& corr) {
    if (!corr) return nullptr;
    ojson j;
    j["register"] = corr->reg;
    j["shift"] = corr->shift;
    return j;
}

ojson pair_to_json(const std::optional<std::pair<int, int>>& p) {
    if (!p) return nullptr;
    return ojson::array({p->first, p->second});
}

} // namespace

ojson syndrome_to_json(const SyndromeRecord& record) {
    ojson j;
    ojson flips = ojson::array();
    ojson corrs = ojson::array();
    for (int b = 0; b < 3; ++b) {
        flips.push_back(pair_to_json(record.flip_syndromes[static_cast<std::size_t>(b)]));
        corrs.push_back(correction_to_json(record.flip_corrections[static_cast<std::size_t>(b)]));
    }
    j["flip_syndromes"] = std::move(flips);
    j["flip_corrections"] = std::move(corrs);
    j["phase_syndrome"] = pair_to_json(record.phase_syndrome);
    j["phase_correction"] = correction_to_json(record.phase_correction);
    j["branch_probability"] = record.branch_probability;
    j["uncorrectable"] = record.uncorrectable;
    return j;
}

ojson outcome_to_json(const RecoveryOutcome& outcome, bool include_states) {
    ojson j;
    j["syndrome"] = syndrome_to_json(outcome.syndrome);
    if (outcome.fidelity_vs_reference) {
        j["fidelity_vs_reference"] = *outcome.fidelity_vs_reference;
    }
    if (include_states && outcome.logical) {
        j["logical_state"] = state_to_json(*outcome.logical);
    }
    if (include_states && outcome.reencoded) {
        j["reencoded_state"] = state_to_json(*outcome.reencoded);
    }
    return j;
}

} // namespace qec
