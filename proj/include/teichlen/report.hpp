#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace teichlen {

/// JSON schema version stamped on every exported artifact.
inline constexpr const char* kSchemaVersion = "1";

/// One evaluated inequality: name, the numbers that went in, both sides,
/// verdict, and the source tag of the relation being checked. `note` is empty
/// unless the check is inconclusive rather than failed.
struct BoundReport {
    std::string name;
    std::vector<std::pair<std::string, double>> inputs;
    double lhs = 0;
    double rhs = 0;
    bool pass = false;
    std::string citation;
    std::string note;
};

inline nlohmann::ordered_json to_json(const BoundReport& r) {
    nlohmann::ordered_json in = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.inputs) in[k] = v;
    nlohmann::ordered_json j{
        {"name", r.name}, {"inputs", in},       {"lhs", r.lhs},
        {"rhs", r.rhs},   {"pass", r.pass},     {"citation", r.citation},
    };
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

} // namespace teichlen
