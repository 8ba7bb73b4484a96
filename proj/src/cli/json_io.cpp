#include "cubicnef/cli/json_io.hpp"

#include "cubicnef/errors.hpp"

namespace cubicnef::cli {

json to_json(const Rational& r) { return to_fraction_string(r); }

json to_json(const Poly& p) { return p.to_fraction_strings(); }

json to_json(const std::array<Rational, 4>& a) {
    json arr = json::array();
    for (const auto& c : a) arr.push_back(to_json(c));
    return arr;
}

namespace {

json params_json(const FamilySpec& family) {
    json params = json::object();
    for (const auto& p : family.params) params[p.name] = to_json(p.value);
    return params;
}

Provenance provenance_from(std::string_view s) {
    if (s == "recurrence") return Provenance::recurrence;
    if (s == "faadibruno") return Provenance::faadibruno;
    if (s == "external") return Provenance::external;
    throw UsageError("unknown provenance '" + std::string(s) + "'");
}

} // namespace

json family_json(const FamilySpec& family, const VarianceSpec& spec) {
    return json{{"name", family.name}, {"params", params_json(family)}, {"m0", to_json(spec.m0)}, {"a", to_json(spec.a)}};
}

json catalog_entry_json(const FamilySpec& family) {
    return json{{"name", family.name},
                {"title", family.title},
                {"class", std::string(to_string(family.family_class))},
                {"params", params_json(family)},
                {"mean_domain", family.domain.to_string()},
                {"variance", family.formula},
                {"variance_polynomial", family.variance.to_string("m")},
                {"closed_forms", family.closed_forms.has_value()}};
}

json sequence_json(const PolySequence& s) {
    json polys = json::array();
    for (const auto& p : s.polys) polys.push_back(to_json(p));
    return json{{"family", s.family},
                {"m0", to_json(s.spec.m0)},
                {"a", to_json(s.spec.a)},
                {"N", s.order()},
                {"provenance", std::string(to_string(s.provenance))},
                {"polys", std::move(polys)}};
}

PolySequence sequence_from_json(const json& j) {
    try {
        PolySequence s;
        s.family = j.at("family").get<std::string>();
        s.spec.m0 = parse_rational(j.at("m0").get<std::string>());
        const auto& a = j.at("a");
        if (a.size() != 4) throw UsageError("sequence JSON: 'a' must have four entries");
        for (std::size_t i = 0; i < 4; ++i) s.spec.a[i] = parse_rational(a.at(i).get<std::string>());
        s.provenance = provenance_from(j.at("provenance").get<std::string>());
        for (const auto& p : j.at("polys")) s.polys.push_back(Poly::from_fraction_strings(p.get<std::vector<std::string>>()));
        if (s.order() != j.at("N").get<std::size_t>()) throw UsageError("sequence JSON: N disagrees with polys");
        return s;
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed sequence JSON: ") + e.what());
    }
}

json gram_json(const GramMatrix& G, const PolySequence& s) {
    json rows = json::array();
    for (const auto& row : G.entries) {
        json r = json::array();
        for (const auto& v : row) r.push_back(to_json(v));
        rows.push_back(std::move(r));
    }
    return json{{"family", s.family}, {"m0", to_json(s.spec.m0)}, {"N", G.N}, {"entries", std::move(rows)}};
}

json recovered_json(const RecoveredVariance& r) {
    return json{{"a0", to_json(r.a0)}, {"a2", to_json(r.a2)}, {"a3", to_json(r.a3)}};
}

json ortho_json(const OrthoReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) violations.push_back(json{{"n", v.n}, {"q", v.q}, {"value", to_json(v.value)}});
    json out{{"verdict", std::string(to_string(r.verdict))},
             {"checked_order", r.checked_order},
             {"violations", std::move(violations)}};
    if (r.recovered) out["recovered"] = recovered_json(*r.recovered);
    return out;
}

json discrepancy_json(const TableDiscrepancy& d) {
    json out{{"family", d.family}, {"item", d.item}, {"printed", d.printed}, {"computed", d.computed}};
    if (d.integral_p1_p2) out["integral_p1_p2"] = to_json(*d.integral_p1_p2);
    return out;
}

} // namespace cubicnef::cli
