#pragma once

#include "cubicnef/catalog.hpp"
#include "cubicnef/genfun.hpp"
#include "cubicnef/ortho.hpp"
#include "cubicnef/polyseq.hpp"
#include "cubicnef/table1.hpp"

#include <json.hpp>

namespace cubicnef::cli {

using nlohmann::json;

json to_json(const Rational& r);
json to_json(const Poly& p);
json to_json(const std::array<Rational, 4>& a);

/// {name, params, m0, a}
json family_json(const FamilySpec& family, const VarianceSpec& spec);
/// {name, title, class, params, mean_domain, variance}
json catalog_entry_json(const FamilySpec& family);
/// {family, m0, a, N, provenance, polys}
json sequence_json(const PolySequence& s);
PolySequence sequence_from_json(const json& j);
/// {family, m0, N, entries}
json gram_json(const GramMatrix& G, const PolySequence& s);
/// {verdict, checked_order, violations, recovered?}
json ortho_json(const OrthoReport& r);
json recovered_json(const RecoveredVariance& r);
json discrepancy_json(const TableDiscrepancy& d);

} // namespace cubicnef::cli
