#pragma once

// Structured verdicts for the theorem checks. A failing report always
// carries at least one witness with enough coordinates to replay the
// violation through the underlying operations.

#include "redmod/zn.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace redmod {

enum class Verdict { pass, fail, undetermined };

inline std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    default:
        return "undetermined";
    }
}

struct Witness {
    std::string kind;    // e.g. "coset", "module", "offset"
    nlohmann::json data; // coordinate rows and context needed for replay
};

struct Report {
    std::string check;    // operation name
    std::string property; // human-readable statement of what was verified
    Verdict verdict = Verdict::pass;
    std::vector<Witness> witnesses;
    nlohmann::json stats = nlohmann::json::object();

    bool passed() const { return verdict == Verdict::pass; }

    void fail_with(Witness w) {
        verdict = Verdict::fail;
        witnesses.push_back(std::move(w));
    }

    nlohmann::json to_json() const {
        nlohmann::json w = nlohmann::json::array();
        for (const auto& x : witnesses)
            w.push_back({{"kind", x.kind}, {"data", x.data}});
        return {{"check", check},
                {"property", property},
                {"verdict", to_string(verdict)},
                {"witnesses", w},
                {"stats", stats}};
    }
};

inline nlohmann::json row_to_json(const std::vector<u64>& r) {
    nlohmann::json a = nlohmann::json::array();
    for (u64 v : r)
        a.push_back(v);
    return a;
}

inline nlohmann::json rows_to_json(const std::vector<std::vector<u64>>& rs) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : rs)
        a.push_back(row_to_json(r));
    return a;
}

} // namespace redmod
