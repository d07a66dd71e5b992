#pragma once

// Text and JSON renderings of parity reports. JSON is the machine contract;
// both carry the same ledger.

#include <string>

#include <json.hpp>

#include "ilink/verify.hpp"

namespace ilink {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const LedgerEntry& e, bool with_bit = true) {
    ordered_json j;
    j["gamma"] = e.gamma;
    j["gamma_prime"] = e.gamma_prime;
    if (with_bit) j["bit"] = e.bit;
    return j;
}

inline ordered_json to_json(const ParityReport& rep) {
    ordered_json j;
    j["subject"] = rep.subject;
    j["n"] = rep.n;
    j["d"] = rep.d;
    j["config_hash"] = rep.config_hash;
    j["pairs"] = ordered_json::array();
    for (const auto& e : rep.pairs) j["pairs"].push_back(to_json(e));
    j["total_mod2"] = rep.total_mod2;
    j["witnesses"] = ordered_json::array();
    for (const auto& e : rep.witnesses) j["witnesses"].push_back(to_json(e, false));
    j["status"] = to_string(rep.status);
    if (!rep.note.empty()) j["note"] = rep.note;
    if (rep.full_lambda) {
        j["full_lambda"] = {{"pairs", rep.full_lambda->pairs}, {"total_mod2", rep.full_lambda->total_mod2}};
    }
    return j;
}

inline std::string to_text(const ParityReport& rep) {
    std::string out;
    out += "subject: " + rep.subject + " n=" + std::to_string(rep.n) + " d=" + std::to_string(rep.d) + "\n";
    out += "config_hash: " + rep.config_hash + "\n";
    for (std::size_t i = 0; i < rep.pairs.size(); ++i) {
        const auto& e = rep.pairs[i];
        out += "pair " + std::to_string(i) + ": gamma=" + e.gamma + " gamma'=" + e.gamma_prime +
               " bit=" + std::to_string(e.bit) + "\n";
    }
    out += "total_mod2: " + std::to_string(rep.total_mod2) + "\n";
    out += "witnesses: " + std::to_string(rep.witnesses.size()) + "\n";
    for (const auto& e : rep.witnesses) out += "  gamma=" + e.gamma + " gamma'=" + e.gamma_prime + "\n";
    if (rep.full_lambda)
        out += "full_lambda: pairs=" + std::to_string(rep.full_lambda->pairs) +
               " total_mod2=" + std::to_string(rep.full_lambda->total_mod2) + "\n";
    if (!rep.note.empty()) out += "note: " + rep.note + "\n";
    out += std::string("status: ") + to_string(rep.status) + "\n";
    return out;
}

}  // namespace ilink
