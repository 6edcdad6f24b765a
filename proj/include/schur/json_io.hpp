#pragma once

#include <string>

#include "json.hpp"

#include "schur/basis.hpp"
#include "schur/conjectures.hpp"
#include "schur/constants.hpp"
#include "schur/report.hpp"
#include "schur/straighten.hpp"
#include "schur/subalg.hpp"

namespace schur {

constexpr int kSchemaVersion = 1;

/// Stamps the common document header.  Every document emitted by the tool
/// carries the instance size, the coefficient ring, and a schema version.
inline nlohmann::json json_header(int n, int d, const std::string& ring) {
    nlohmann::json j;
    j["schema-version"] = kSchemaVersion;
    j["n"] = n;
    j["d"] = d;
    j["ring"] = ring;
    return j;
}

inline nlohmann::json to_json(const BasisFamily& fam, const std::string& ring) {
    nlohmann::json j = json_header(fam.n, fam.d, ring);
    j["side"] = side_name(fam.side);
    j["placement"] = placement_name(fam.placement);
    j["count"] = fam.elements.size();
    nlohmann::json elems = nlohmann::json::array();
    for (const auto& el : fam.elements) {
        nlohmann::json e;
        e["raising"] = el.A;
        e["weight"] = el.weight;
        e["lowering"] = el.C;
        e["text"] = element_to_string(fam, el);
        elems.push_back(std::move(e));
    }
    j["elements"] = std::move(elems);
    nlohmann::json pieces = nlohmann::json::array();
    for (const auto& p : fam.pieces()) {
        nlohmann::json q;
        q["weight"] = p.first;
        q["size"] = p.second.second - p.second.first;
        pieces.push_back(std::move(q));
    }
    j["pieces"] = std::move(pieces);
    return j;
}

inline nlohmann::json to_json(const VerificationReport& rep) {
    nlohmann::json j = json_header(rep.n, rep.d, rep.ring);
    j["suite"] = rep.suite;
    j["pass"] = rep.all_pass();
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks) {
        nlohmann::json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j;
}

inline nlohmann::json to_json(const ConjectureReport& rep) {
    nlohmann::json j = json_header(rep.n, rep.d, rep.ring);
    j["kind"] = rep.kind;
    j["i0"] = rep.i0;
    j["count"] = rep.count;
    j["rank"] = rep.rank;
    j["expected"] = rep.expected;
    j["pass"] = rep.pass;
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

template <class Ring>
nlohmann::json straighten_result_json(int n, int d, const StraightenResult<Ring>& res,
                                      const BasisFamily& fam) {
    nlohmann::json j = json_header(n, d, ring_name(Ring::tag));
    j["steps"] = res.steps;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, coeff] : res.coords) {
        nlohmann::json t;
        t["raising"] = key.A;
        t["weight"] = key.mu;
        t["lowering"] = key.C;
        t["coefficient"] = Ring::to_string(coeff);
        BasisElement el;
        el.A = key.A;
        el.weight = key.mu;
        el.C = key.C;
        el.side = fam.side;
        el.placement = fam.placement;
        t["text"] = element_to_string(fam, el);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

template <class Ring>
nlohmann::json constants_json(int n, int d, const StructureConstants<Ring>& sc) {
    nlohmann::json j = json_header(n, d, ring_name(Ring::tag));
    j["size"] = sc.size;
    j["all-integral"] = sc.all_integral;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, coords] : sc.table) {
        nlohmann::json e;
        e["left"] = key.first;
        e["right"] = key.second;
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& [idx, c] : coords) {
            if (c == Ring::zero()) continue;
            nlohmann::json one;
            one["index"] = idx;
            one["value"] = Ring::to_string(c);
            cs.push_back(std::move(one));
        }
        e["coords"] = std::move(cs);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

}  // namespace schur
