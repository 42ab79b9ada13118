#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "teichlen/number_field.hpp"
#include "teichlen/reciprocal.hpp"
#include "teichlen/report.hpp"
#include "teichlen/spectrum.hpp"
#include "teichlen/words.hpp"

namespace teichlen {

inline void spectrum_to_csv(std::ostream& os, const LengthSpectrum& spec,
                            const std::vector<std::string>& labels) {
    os << "length,trace_abs,multiplicity,representative\n";
    for (const auto& e : spec.entries)
        os << nlohmann::json(e.length).dump() << ',' << nlohmann::json(e.trace_abs).dump()
           << ',' << e.multiplicity << ',' << word_to_string(e.representative, labels) << "\n";
}

inline nlohmann::ordered_json spectrum_to_json(const LengthSpectrum& spec,
                                               const std::vector<std::string>& labels) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& e : spec.entries)
        entries.push_back({{"length", e.length},
                           {"trace_abs", e.trace_abs},
                           {"multiplicity", e.multiplicity},
                           {"representative", word_to_string(e.representative, labels)}});
    return {{"schema_version", kSchemaVersion},
            {"cutoff", spec.cutoff},
            {"max_word_length", spec.max_word_length},
            {"complete_up_to_word_length", spec.max_word_length},
            {"entries", entries}};
}

inline nlohmann::ordered_json unit_to_json(const ReciprocalUnit& u) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto c : u.min_poly.coeffs()) coeffs.push_back(c);
    return {{"degree", u.min_poly.degree()},
            {"coeffs", coeffs},
            {"real_root", u.real_root},
            {"house", u.house}};
}

inline void units_to_jsonl(std::ostream& os, const std::vector<ReciprocalUnit>& units) {
    for (const auto& u : units) os << unit_to_json(u).dump() << "\n";
}

inline nlohmann::ordered_json gap_report_to_json(const BoundReport& r) {
    // flat schema {t, t_prime, gap, bound, pass} used by the trace-gap command
    nlohmann::ordered_json j;
    for (const auto& [k, v] : r.inputs)
        if (k == "t" || k == "t_prime") j[k] = v;
    j["gap"] = r.lhs;
    j["bound"] = r.rhs;
    j["pass"] = r.pass;
    return j;
}

} // namespace teichlen
