#pragma once

#include "cubicnef/cumulants.hpp"
#include "cubicnef/poly.hpp"
#include "cubicnef/polyseq.hpp"
#include "cubicnef/variance.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace cubicnef {

/// Moment functional applied to p q: sum_{i,j} p_i q_j mom[i + j].
/// Throws MomentOrderError when the table is too short.
Rational inner_product(const Poly& p, const Poly& q, const MomentTable& mom);

/// G[n][q] = integral of P_n P_q against mu, 0 <= n, q <= N.
struct GramMatrix {
    std::size_t N = 0;
    std::vector<std::vector<Rational>> entries;

    const Rational& at(std::size_t n, std::size_t q) const { return entries.at(n).at(q); }
    /// a_{nq} = G[n][q] / (n! q!)
    Rational normalized(std::size_t n, std::size_t q) const;
    bool is_symmetric() const;
};

GramMatrix gram(const PolySequence& s, const MomentTable& mom);
/// Uses the moments of s.spec.
GramMatrix gram(const PolySequence& s);

enum class Verdict { two_orthogonal, fully_orthogonal, neither };

std::string_view to_string(Verdict v);

struct Violation {
    std::size_t n;
    std::size_t q;
    Rational value;
};

struct RecoveredVariance {
    Rational a0;
    Rational a2;
    Rational a3;

    friend bool operator==(const RecoveredVariance&, const RecoveredVariance&) = default;
};

struct OrthoReport {
    Verdict verdict = Verdict::neither;
    std::size_t checked_order = 0;
    std::vector<Violation> violations;
    std::optional<RecoveredVariance> recovered;
};

/// Entries that must vanish for 2-orthogonality: (n, 0) for n >= 1 and
/// (n, q) with q >= 1, n >= 2q, together with their transposes.
bool in_two_orthogonal_pattern(std::size_t n, std::size_t q);

/// two_orthogonal iff every pattern entry is exactly zero.
OrthoReport check_two_orthogonality(const GramMatrix& G);

/// fully_orthogonal iff every off-diagonal entry is zero; otherwise the
/// verdict falls back to two_orthogonal or neither and the violations list
/// the nonzero off-diagonal entries.
OrthoReport check_full_orthogonality(const GramMatrix& G);

/// One coefficient of x P_n in the basis P_0..P_{n+1} that disagrees with
/// the fitted four-term recurrence.
struct RecurrenceResidual {
    std::size_t n;
    std::size_t k;
    Rational expected;
    Rational actual;
};

struct RecurrenceFit {
    VarianceSpec spec;
    std::vector<RecurrenceResidual> residuals;

    bool exact() const { return residuals.empty(); }
};

/// Coordinates of target in the triangular basis polys[0..], where
/// deg polys[k] = k. Throws NonNefSequenceError if the basis is short.
std::vector<Rational> expand_in_basis(const Poly& target, const std::vector<Poly>& polys);

/// Recovers (a0, a1, a2, a3, m0) from the expansions of x P_2 and x P_3,
/// then checks every row n = 0..N-1 against the four-term band.
/// Requires N >= 4 and deg P_n = n; otherwise NonNefSequenceError.
RecurrenceFit fit_recurrence(const PolySequence& s);

/// a0 = 1/a11, a2 = (2 a22 - a11^2)/a11^2, a3 = 2 a23/a11^2. The linear
/// coefficient a1 is not determined by these entries.
RecoveredVariance recover_variance_from_gram(const GramMatrix& G);

} // namespace cubicnef
