#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "arithmo/identities.hpp"

namespace arithmo {

// JSON form: one top-level object; rationals rendered "a/b" reduced,
// integers bare. Key order is deterministic (lexicographic), so equal
// reports serialize byte-identically.
inline nlohmann::json to_json(const IdentityReport& report) {
    nlohmann::json j;
    j["identity"] = report.identity;
    j["range"] = report.range;
    j["checked"] = report.checked;
    j["status"] = std::string(to_string(report.status));
    j["mismatches"] = report.mismatches;
    j["counterexamples"] = nlohmann::json::array();
    for (const Counterexample& ce : report.counterexamples) {
        j["counterexamples"].push_back({{"input", ce.input},
                                        {"lhs", to_string(ce.lhs)},
                                        {"rhs", to_string(ce.rhs)}});
    }
    if (report.identity == "lemma2") j["zero_denominators"] = report.zero_denominators;
    if (!report.note.empty()) j["note"] = report.note;
    return j;
}

namespace detail {

inline std::string join_input(const std::vector<std::uint64_t>& input) {
    std::string out;
    for (std::size_t i = 0; i < input.size(); ++i) {
        if (i > 0) out += ';';
        out += std::to_string(input[i]);
    }
    return out;
}

}  // namespace detail

// CSV form: header row plus one row per counterexample. Multi-part inputs
// are ';'-joined so the column stays unquoted.
inline std::string to_csv(const IdentityReport& report) {
    std::string out = "input,lhs,rhs\n";
    for (const Counterexample& ce : report.counterexamples)
        out += detail::join_input(ce.input) + "," + to_string(ce.lhs) + "," + to_string(ce.rhs) +
               "\n";
    return out;
}

inline std::string to_plain(const IdentityReport& report) {
    std::ostringstream out;
    out << "identity: " << report.identity << "\n"
        << "range: " << report.range << "\n"
        << "checked: " << report.checked << "\n"
        << "status: " << to_string(report.status) << "\n"
        << "mismatches: " << report.mismatches << "\n";
    if (report.identity == "lemma2")
        out << "zero_denominators: " << report.zero_denominators << "\n";
    if (!report.note.empty()) out << "note: " << report.note << "\n";
    for (const Counterexample& ce : report.counterexamples)
        out << "  (" << detail::join_input(ce.input) << ") lhs=" << to_string(ce.lhs)
            << " rhs=" << to_string(ce.rhs) << "\n";
    return out.str();
}

}  // namespace arithmo
