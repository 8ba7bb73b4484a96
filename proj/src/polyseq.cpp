#include "cubicnef/polyseq.hpp"

#include "cubicnef/cumulants.hpp"
#include "cubicnef/errors.hpp"

#include <functional>

namespace cubicnef {

std::string_view to_string(Provenance p) {
    switch (p) {
    case Provenance::recurrence: return "recurrence";
    case Provenance::faadibruno: return "faadibruno";
    case Provenance::external: return "external";
    }
    return "external";
}

PolySequence gen_recurrence(const VarianceSpec& v, std::size_t N, std::string family) {
    if (v.a[0] == 0) throw SingularVarianceError("recurrence has no leading step: a0 = 0");
    PolySequence s{std::move(family), v, Provenance::recurrence, {}};
    s.polys.reserve(N + 1);
    s.polys.push_back(Poly::constant(1));
    const Rational inv_a0 = 1 / v.a[0];
    for (std::size_t n = 0; n < N; ++n) {
        const Rational nn(static_cast<unsigned long>(n));
        Poly next = s.polys[n] * Poly::linear_root(nn * v.a[1] + v.m0);
        if (n >= 1) next -= (nn * (v.a[2] * (nn - 1) + 1)) * s.polys[n - 1];
        if (n >= 3 && v.a[3] != 0) next -= (v.a[3] * nn * (nn - 1) * (nn - 2)) * s.polys[n - 2];
        next *= inv_a0;
        s.polys.push_back(std::move(next));
    }
    return s;
}

std::vector<std::vector<unsigned>> partitions_by_multiplicity(unsigned n) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> k(n, 0);
    // Assign multiplicities to parts n, n-1, ..., 1.
    std::function<void(unsigned, unsigned)> walk = [&](unsigned part, unsigned remaining) {
        if (part == 0) {
            if (remaining == 0) out.push_back(k);
            return;
        }
        for (unsigned count = 0; count * part <= remaining; ++count) {
            k[part - 1] = count;
            walk(part - 1, remaining - count * part);
        }
        k[part - 1] = 0;
    };
    walk(n, n);
    return out;
}

PolySequence gen_faadibruno(const VarianceSpec& v, std::size_t N, std::string family) {
    PolySequence s{std::move(family), v, Provenance::faadibruno, {}};
    s.polys.reserve(N + 1);
    s.polys.push_back(Poly::constant(1));
    if (N == 0) return s;

    const auto psi = psi_series(v, N);
    const auto kpsi = kpsi_series(v, N);
    // g^(j)(x) / j! = psi_j x - kpsi_j
    std::vector<Poly> inner(N + 1);
    for (std::size_t j = 1; j <= N; ++j) inner[j] = Poly({Rational(-kpsi[j]), psi[j]});

    // powers[j][e] = inner[j]^e, grown on demand
    std::vector<std::vector<Poly>> powers(N + 1);
    auto power = [&](std::size_t j, unsigned e) -> const Poly& {
        auto& row = powers[j];
        if (row.empty()) row.push_back(Poly::constant(1));
        while (row.size() <= e) row.push_back(row.back() * inner[j]);
        return row[e];
    };

    for (unsigned n = 1; n <= N; ++n) {
        const Integer n_fact = factorial(n);
        Poly pn;
        for (const auto& k : partitions_by_multiplicity(n)) {
            Integer denom = 1;
            Poly term = Poly::constant(1);
            for (unsigned j = 1; j <= n; ++j) {
                if (k[j - 1] == 0) continue;
                denom *= factorial(k[j - 1]);
                term *= power(j, k[j - 1]);
            }
            Rational weight(n_fact, denom);
            weight.canonicalize();
            pn += weight * term;
        }
        s.polys.push_back(std::move(pn));
    }
    return s;
}

SequenceDiff compare(const PolySequence& a, const PolySequence& b) {
    if (a.spec.m0 != b.spec.m0)
        throw UsageError("cannot compare sequences anchored at different means (" + to_display_string(a.spec.m0) +
                         " vs " + to_display_string(b.spec.m0) + ")");
    if (a.polys.size() != b.polys.size())
        throw UsageError("cannot compare sequences of different lengths");
    SequenceDiff diff;
    for (std::size_t n = 0; n < a.polys.size(); ++n)
        if (!(a.polys[n] == b.polys[n])) diff.entries.push_back({n, a.polys[n], b.polys[n]});
    return diff;
}

PolySequence scale_sequence(const PolySequence& s, const Rational& t) {
    if (t == 0) throw DomainError("degenerate scaling: t = 0");
    PolySequence out{s.family, s.spec, s.provenance, {}};
    out.polys.reserve(s.polys.size());
    Rational tn = 1;
    for (const auto& p : s.polys) {
        out.polys.push_back(tn * p);
        tn *= t;
    }
    return out;
}

} // namespace cubicnef
