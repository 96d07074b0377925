#ifndef CYV_VERIFY_REPORT_HPP
#define CYV_VERIFY_REPORT_HPP

// Check results and the report document.
//
// A check is a list of items, each an (expected, computed) pair with a
// provenance tag. The check FAILs if any item differs, is EVIDENCE if all
// agree and at least one item is evidence-grade, and PASSes otherwise.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace cyv::verify {

enum class Provenance { Paper, Trivial, Derived };
enum class Status { Pass, Fail, Evidence };

inline std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Paper: return "PAPER";
        case Provenance::Trivial: return "TRIVIAL";
        case Provenance::Derived: return "DERIVED";
    }
    return "?";
}

inline std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Evidence: return "EVIDENCE";
    }
    return "?";
}

struct Item {
    std::string key;
    nlohmann::json expected;
    nlohmann::json computed;
    Provenance provenance = Provenance::Derived;
    bool evidence = false;  // finite-field scans and recorded constants

    bool ok() const { return expected == computed; }
};

struct CheckResult {
    std::string name;
    std::vector<Item> items;
    std::string error;  // set when the computation stopped early
    double ms = 0;

    void expect(std::string key, nlohmann::json expected, nlohmann::json computed, Provenance p, bool evidence = false) {
        items.push_back({std::move(key), std::move(expected), std::move(computed), p, evidence});
    }

    Status status() const {
        if (!error.empty()) return Status::Fail;
        bool evidence = false;
        for (const auto& i : items) {
            if (!i.ok()) return Status::Fail;
            evidence = evidence || i.evidence;
        }
        return evidence ? Status::Evidence : Status::Pass;
    }

    /// Strongest tag among the items: PAPER over DERIVED over TRIVIAL.
    Provenance provenance() const {
        Provenance best = Provenance::Trivial;
        for (const auto& i : items) {
            if (i.provenance == Provenance::Paper) return Provenance::Paper;
            if (i.provenance == Provenance::Derived) best = Provenance::Derived;
        }
        return best;
    }

    const Item* find(const std::string& key) const {
        for (const auto& i : items)
            if (i.key == key) return &i;
        return nullptr;
    }
};

struct Report {
    std::vector<CheckResult> checks;
    nlohmann::json metadata = nlohmann::json::object();

    int count(Status s) const {
        int n = 0;
        for (const auto& c : checks) n += c.status() == s ? 1 : 0;
        return n;
    }
    bool ok() const { return count(Status::Fail) == 0; }
};

inline nlohmann::json to_json(const CheckResult& c) {
    nlohmann::json expected = nlohmann::json::object(), computed = nlohmann::json::object();
    nlohmann::json items = nlohmann::json::array();
    for (const auto& i : c.items) {
        expected[i.key] = i.expected;
        computed[i.key] = i.computed;
        items.push_back({{"key", i.key},
                         {"expected", i.expected},
                         {"computed", i.computed},
                         {"provenance", to_string(i.provenance)},
                         {"evidence", i.evidence},
                         {"ok", i.ok()}});
    }
    nlohmann::json j{{"name", c.name},
                     {"expected", expected},
                     {"provenance", to_string(c.provenance())},
                     {"computed", computed},
                     {"status", to_string(c.status())},
                     {"ms", c.ms},
                     {"items", items}};
    if (!c.error.empty()) j["error"] = c.error;
    return j;
}

inline nlohmann::json to_json(const Report& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return {{"checks", checks},
            {"summary", {{"pass", r.count(Status::Pass)}, {"fail", r.count(Status::Fail)}, {"evidence", r.count(Status::Evidence)}}},
            {"metadata", r.metadata}};
}

/// Problems with a report document; empty when it is well formed.
inline std::vector<std::string> validate_report(const nlohmann::json& doc) {
    std::vector<std::string> problems;
    auto tag_ok = [](const nlohmann::json& t) {
        return t.is_string() && (t == "PAPER" || t == "TRIVIAL" || t == "DERIVED");
    };
    if (!doc.is_object() || !doc.contains("checks") || !doc["checks"].is_array()) return {"missing \"checks\" array"};
    int pass = 0, fail = 0, evidence = 0;
    for (const auto& c : doc["checks"]) {
        const std::string name = c.contains("name") && c["name"].is_string() ? c["name"].get<std::string>() : "?";
        for (const char* field : {"name", "expected", "provenance", "computed", "status", "ms"})
            if (!c.contains(field)) problems.push_back(name + ": missing \"" + field + "\"");
        if (c.contains("provenance") && !tag_ok(c["provenance"])) problems.push_back(name + ": bad provenance tag");
        if (c.contains("ms") && !c["ms"].is_number()) problems.push_back(name + ": \"ms\" is not a number");
        if (c.contains("items")) {
            for (const auto& i : c["items"])
                if (!i.contains("provenance") || !tag_ok(i["provenance"]))
                    problems.push_back(name + ": item " + (i.contains("key") ? i["key"].dump() : "?") + " has no provenance tag");
        } else {
            problems.push_back(name + ": missing \"items\"");
        }
        const auto status = c.value("status", std::string{});
        if (status == "PASS") ++pass;
        else if (status == "FAIL") ++fail;
        else if (status == "EVIDENCE") ++evidence;
        else problems.push_back(name + ": bad status \"" + status + "\"");
    }
    if (!doc.contains("summary") || !doc["summary"].is_object()) {
        problems.push_back("missing \"summary\"");
    } else {
        const auto& s = doc["summary"];
        if (s.value("pass", -1) != pass || s.value("fail", -1) != fail || s.value("evidence", -1) != evidence)
            problems.push_back("summary counts do not match the checks");
    }
    return problems;
}

}  // namespace cyv::verify

#endif  // CYV_VERIFY_REPORT_HPP
