#include "cubicnef/ortho.hpp"

#include "cubicnef/errors.hpp"

#include <algorithm>

namespace cubicnef {

Rational inner_product(const Poly& p, const Poly& q, const MomentTable& mom) {
    if (p.is_zero() || q.is_zero()) return 0;
    const std::size_t needed = *p.degree() + *q.degree();
    if (mom.mom.empty() || needed > mom.order()) throw MomentOrderError(needed, mom.order());
    Rational acc = 0;
    const auto pc = p.coeffs();
    const auto qc = q.coeffs();
    for (std::size_t i = 0; i < pc.size(); ++i) {
        if (pc[i] == 0) continue;
        Rational row = 0;
        for (std::size_t j = 0; j < qc.size(); ++j) row += qc[j] * mom.mom[i + j];
        acc += pc[i] * row;
    }
    return acc;
}

Rational GramMatrix::normalized(std::size_t n, std::size_t q) const {
    return at(n, q) / Rational(factorial(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(q)));
}

bool GramMatrix::is_symmetric() const {
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t q = 0; q < n; ++q)
            if (entries[n][q] != entries[q][n]) return false;
    return true;
}

GramMatrix gram(const PolySequence& s, const MomentTable& mom) {
    const std::size_t N = s.order();
    if (mom.mom.empty() || mom.order() < 2 * N) throw MomentOrderError(2 * N, mom.order());
    GramMatrix G{N, std::vector<std::vector<Rational>>(N + 1, std::vector<Rational>(N + 1))};
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t q = 0; q <= n; ++q) {
            G.entries[n][q] = inner_product(s.polys[n], s.polys[q], mom);
            G.entries[q][n] = G.entries[n][q];
        }
    return G;
}

GramMatrix gram(const PolySequence& s) { return gram(s, moments(s.spec, 2 * s.order())); }

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::two_orthogonal: return "two_orthogonal";
    case Verdict::fully_orthogonal: return "fully_orthogonal";
    case Verdict::neither: return "neither";
    }
    return "neither";
}

bool in_two_orthogonal_pattern(std::size_t n, std::size_t q) {
    if (n < q) std::swap(n, q);
    if (q == 0) return n >= 1;
    return n >= 2 * q;
}

OrthoReport check_two_orthogonality(const GramMatrix& G) {
    OrthoReport report;
    report.checked_order = G.N;
    for (std::size_t n = 0; n <= G.N; ++n)
        for (std::size_t q = 0; q <= G.N; ++q) {
            if (!in_two_orthogonal_pattern(n, q) || G.at(n, q) == 0) continue;
            // One report per unordered pair unless the matrix is asymmetric.
            if (n < q && G.at(q, n) == G.at(n, q)) continue;
            report.violations.push_back({n, q, G.at(n, q)});
        }
    report.verdict = report.violations.empty() ? Verdict::two_orthogonal : Verdict::neither;
    return report;
}

OrthoReport check_full_orthogonality(const GramMatrix& G) {
    OrthoReport report;
    report.checked_order = G.N;
    for (std::size_t n = 0; n <= G.N; ++n)
        for (std::size_t q = 0; q <= G.N; ++q) {
            if (n == q || G.at(n, q) == 0) continue;
            if (n < q && G.at(q, n) == G.at(n, q)) continue;
            report.violations.push_back({n, q, G.at(n, q)});
        }
    if (report.violations.empty())
        report.verdict = Verdict::fully_orthogonal;
    else
        report.verdict = check_two_orthogonality(G).verdict;
    return report;
}

std::vector<Rational> expand_in_basis(const Poly& target, const std::vector<Poly>& polys) {
    if (target.is_zero()) return {};
    const std::size_t top = *target.degree();
    if (top >= polys.size()) throw NonNefSequenceError("basis too short to expand a degree-" + std::to_string(top) + " polynomial");
    std::vector<Rational> coords(top + 1);
    Poly rest = target;
    for (std::size_t k = top + 1; k-- > 0;) {
        const Rational c = rest.coeff(k);
        if (c == 0) continue;
        coords[k] = c / polys[k].leading();
        rest -= coords[k] * polys[k];
    }
    return coords;
}

namespace {

Rational at_or_zero(const std::vector<Rational>& v, std::size_t k) { return k < v.size() ? v[k] : Rational(0); }

// Coefficients the four-term recurrence predicts for x P_n over P_0..P_{n+1}.
std::vector<Rational> predicted_row(const VarianceSpec& v, std::size_t n) {
    std::vector<Rational> row(n + 2);
    const Rational nn(static_cast<unsigned long>(n));
    row[n + 1] = v.a[0];
    row[n] = nn * v.a[1] + v.m0;
    if (n >= 1) row[n - 1] = nn * (v.a[2] * (nn - 1) + 1);
    if (n >= 2) row[n - 2] = v.a[3] * nn * (nn - 1) * (nn - 2);
    return row;
}

} // namespace

RecurrenceFit fit_recurrence(const PolySequence& s) {
    const auto& P = s.polys;
    if (P.size() < 5) throw NonNefSequenceError("fit_recurrence needs P_0..P_4 at least");
    for (std::size_t n = 0; n < P.size(); ++n)
        if (P[n].degree() != n)
            throw NonNefSequenceError("P_" + std::to_string(n) + " does not have degree " + std::to_string(n));

    const auto row2 = expand_in_basis(P[2].shift_up(), P);
    const auto row3 = expand_in_basis(P[3].shift_up(), P);

    VarianceSpec fitted;
    fitted.a[0] = row2[3];
    fitted.a[1] = row3[3] - row2[2];
    fitted.m0 = row2[2] - 2 * fitted.a[1];
    fitted.a[2] = row2[1] / 2 - 1;
    fitted.a[3] = row3[1] / 6;
    if (fitted.a[0] == 0) throw NonNefSequenceError("fitted a0 vanishes");

    RecurrenceFit fit{fitted, {}};
    for (std::size_t n = 0; n + 1 < P.size(); ++n) {
        const auto actual = expand_in_basis(P[n].shift_up(), P);
        const auto expected = predicted_row(fitted, n);
        for (std::size_t k = 0; k <= n + 1; ++k) {
            const Rational a = at_or_zero(actual, k);
            const Rational e = at_or_zero(expected, k);
            if (a != e) fit.residuals.push_back({n, k, e, a});
        }
    }
    return fit;
}

RecoveredVariance recover_variance_from_gram(const GramMatrix& G) {
    if (G.N < 3) throw std::invalid_argument("recover_variance_from_gram needs a Gram matrix of order >= 3");
    const Rational a11 = G.normalized(1, 1);
    if (a11 == 0) throw DomainError("degenerate family: a11 = 0");
    const Rational a22 = G.normalized(2, 2);
    const Rational a23 = G.normalized(2, 3);
    const Rational a11_sq = a11 * a11;
    return RecoveredVariance{1 / a11, (2 * a22 - a11_sq) / a11_sq, 2 * a23 / a11_sq};
}

} // namespace cubicnef
