#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "approx_series.hpp"
#include "magnus.hpp"
#include "series.hpp"

namespace malcev {

// Reports use order-preserving JSON so that emission order is exactly
// insertion order: byte-stable output for equal configs.
using Json = nlohmann::ordered_json;

inline Json series_to_json(const Series& s, unsigned degree_cap = default_degree_cap) {
    Json terms = Json::array();
    for (const auto& g : s.support_by_order(degree_cap))
        terms.push_back({{"word", g.to_string()}, {"coeff", s.coefficient(g).to_string()}});
    return terms;
}

inline Json approx_to_json(const ApproxSeries& a, unsigned degree_cap = default_degree_cap) {
    Json out;
    out["terms"] = series_to_json(a.terms(), degree_cap);
    out["guarantee"] = a.is_exact() ? Json(nullptr) : Json(a.guarantee()->to_string());
    return out;
}

inline Json witness_to_json(const CompareWitness& w) {
    Json out;
    out["relation"] = to_string(w.relation);
    if (w.relation != Ordering::equal) {
        out["monomial"] = monomial_to_string(w.monomial);
        out["lhs_coefficient"] = w.lhs_coefficient.str();
        out["rhs_coefficient"] = w.rhs_coefficient.str();
        out["degree_used"] = w.degree_used;
    }
    return out;
}

// One verified assertion: a self-contained mathematical claim, a verdict,
// and enough detail to audit the run.
struct Check {
    std::string claim;
    bool passed = false;
    Json detail;
};

inline Json check_to_json(const Check& c) {
    Json out;
    out["claim"] = c.claim;
    out["passed"] = c.passed;
    if (!c.detail.is_null()) out["detail"] = c.detail;
    return out;
}

struct SuiteReport {
    std::string suite;
    Json config;
    std::vector<Check> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    Json to_json() const {
        Json out;
        out["suite"] = suite;
        out["config"] = config;
        Json cs = Json::array();
        for (const auto& c : checks) cs.push_back(check_to_json(c));
        out["checks"] = cs;
        out["passed"] = passed();
        return out;
    }
};

// "k/n" counters for sampled properties; an empty sample never passes.
struct Tally {
    unsigned passed = 0;
    unsigned total = 0;

    void count(bool ok) {
        ++total;
        passed += ok ? 1 : 0;
    }
    bool all() const { return total > 0 && passed == total; }
    std::string ratio() const { return std::to_string(passed) + "/" + std::to_string(total); }

    Check check(std::string claim) const {
        return {std::move(claim), all(), total == 0 ? Json("empty sample") : Json(ratio())};
    }
};

}  // namespace malcev
