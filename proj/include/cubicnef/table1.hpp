#pragma once

#include "cubicnef/cumulants.hpp"
#include "cubicnef/poly.hpp"
#include "cubicnef/polyseq.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cubicnef {

/// A recurrence row as printed in the reference table of the six cubic
/// families at m0 = 1:
///   P_{n+1} = (1/scale) [(x - alpha n - 1) P_n - n(beta n - gamma) P_{n-1} - cubic A_n P_{n-2}]
struct PrintedRecurrence {
    Rational scale;
    Rational alpha;
    Rational beta;
    Rational gamma;
    Rational cubic;
};

/// Printed reference content for one cubic family, anchored at m0 = 1.
struct ReferenceRow {
    std::string family;
    /// Variance text evaluated at m0 = 1, as (a0, a1, a2, a3). A stray
    /// multiplication sign before the constant term is read as a plus.
    std::array<Rational, 4> variance_text;
    Poly p1;
    Poly p2;
    PrintedRecurrence recurrence;
};

const std::vector<ReferenceRow>& reference_table();
const ReferenceRow* reference_row(std::string_view family);

struct TableDiscrepancy {
    std::string family;
    std::string item; // "P1", "P2", "recurrence", "variance_text"
    std::string printed;
    std::string computed;
    /// For P2 entries: integral of P1 times the printed P2 against mu; it
    /// must vanish for a genuine 2-orthogonal sequence.
    std::optional<Rational> integral_p1_p2;
};

struct TableComparison {
    bool p1_match = false;
    bool p2_match = false;
    bool recurrence_match = false;
    bool variance_text_match = false;
    std::vector<TableDiscrepancy> discrepancies;
};

/// Compares a computed sequence (m0 = 1, N >= 2) with the printed row.
TableComparison compare_with_reference(const ReferenceRow& row, const PolySequence& s, const MomentTable& mom);

/// Copy of s with P_2 replaced by the printed entry.
PolySequence with_printed_p2(const PolySequence& s, const ReferenceRow& row);

} // namespace cubicnef
