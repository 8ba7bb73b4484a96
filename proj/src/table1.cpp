#include "cubicnef/table1.hpp"

#include "cubicnef/errors.hpp"
#include "cubicnef/ortho.hpp"

namespace cubicnef {

namespace {

Rational q(long num, long den = 1) { return Rational(num, den); }

ReferenceRow row(std::string family, std::array<Rational, 4> text, long den, std::array<long, 3> p2,
                 PrintedRecurrence rec) {
    const Rational inv = q(1, den);
    Poly p1 = inv * Poly({-1, 1});
    Poly printed_p2 = inv * inv * Poly({p2[0], p2[1], p2[2]});
    return ReferenceRow{std::move(family), text, std::move(p1), std::move(printed_p2), rec};
}

std::string spec_string(const std::array<Rational, 4>& a) {
    return "(" + to_display_string(a[0]) + ", " + to_display_string(a[1]) + ", " + to_display_string(a[2]) + ", " +
           to_display_string(a[3]) + ")";
}

std::string recurrence_string(const PrintedRecurrence& r) {
    return "1/" + to_display_string(r.scale) + " [(x - " + to_display_string(r.alpha) + "n - 1)P_n - n(" +
           to_display_string(r.beta) + "n - " + to_display_string(r.gamma) + ")P_{n-1} - " +
           to_display_string(r.cubic) + " A_n P_{n-2}]";
}

PrintedRecurrence implied_recurrence(const VarianceSpec& v) {
    return {v.a[0], v.a[1], v.a[2], v.a[2] - 1, v.a[3]};
}

bool same(const PrintedRecurrence& a, const PrintedRecurrence& b) {
    return a.scale == b.scale && a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma && a.cubic == b.cubic;
}

} // namespace

const std::vector<ReferenceRow>& reference_table() {
    static const std::vector<ReferenceRow> rows = {
        row("inverse-gaussian", {q(1), q(3), q(3), q(1)}, 1, {3, -6, 1}, {q(1), q(3), q(3), q(2), q(1)}),
        row("strict-arcsine", {q(2), q(4), q(3), q(1)}, 2, {3, -5, 1}, {q(2), q(4), q(3), q(2), q(1)}),
        row("takacs", {q(6), q(13), q(9), q(2)}, 6, {8, -15, 1}, {q(6), q(13), q(9), q(8), q(2)}),
        row("large-arcsine", {q(9), q(11), q(8), q(2)}, 9, {3, -13, 1}, {q(9), q(11), q(8), q(7), q(2)}),
        // Same variance text as the Takacs row.
        row("ressel", {q(6), q(13), q(9), q(2)}, 2, {4, -7, 1}, {q(2), q(5), q(4), q(3), q(1)}),
        row("abel", {q(4), q(8), q(5), q(1)}, 4, {8, -15, 1}, {q(4), q(8), q(5), q(4), q(1)}),
    };
    return rows;
}

const ReferenceRow* reference_row(std::string_view family) {
    for (const auto& r : reference_table())
        if (r.family == family) return &r;
    return nullptr;
}

TableComparison compare_with_reference(const ReferenceRow& row, const PolySequence& s, const MomentTable& mom) {
    if (s.spec.m0 != 1) throw UsageError("reference rows are anchored at m0 = 1");
    if (s.polys.size() < 3) throw UsageError("reference comparison needs P_0..P_2");
    TableComparison out;

    out.p1_match = s.polys[1] == row.p1;
    if (!out.p1_match)
        out.discrepancies.push_back({row.family, "P1", row.p1.to_string(), s.polys[1].to_string(), std::nullopt});

    out.p2_match = s.polys[2] == row.p2;
    if (!out.p2_match)
        out.discrepancies.push_back({row.family, "P2", row.p2.to_string(), s.polys[2].to_string(),
                                     inner_product(s.polys[1], row.p2, mom)});

    const auto implied = implied_recurrence(s.spec);
    out.recurrence_match = same(implied, row.recurrence);
    if (!out.recurrence_match)
        out.discrepancies.push_back(
            {row.family, "recurrence", recurrence_string(row.recurrence), recurrence_string(implied), std::nullopt});

    out.variance_text_match = row.variance_text == s.spec.a;
    if (!out.variance_text_match)
        out.discrepancies.push_back(
            {row.family, "variance_text", spec_string(row.variance_text), spec_string(s.spec.a), std::nullopt});
    return out;
}

PolySequence with_printed_p2(const PolySequence& s, const ReferenceRow& row) {
    PolySequence out = s;
    out.provenance = Provenance::external;
    if (out.polys.size() > 2) out.polys[2] = row.p2;
    return out;
}

} // namespace cubicnef
