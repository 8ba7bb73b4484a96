#pragma once

#include "cubicnef/poly.hpp"
#include "cubicnef/variance.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cubicnef {

enum class Provenance { recurrence, faadibruno, external };

std::string_view to_string(Provenance p);

/// P_0..P_N for the base law mu = P(m0, F), where
/// P_n(x) = d^n/dm^n f_mu(x, m) at m = m0.
struct PolySequence {
    std::string family;
    VarianceSpec spec;
    Provenance provenance = Provenance::external;
    std::vector<Poly> polys;

    std::size_t order() const { return polys.empty() ? 0 : polys.size() - 1; }
    const Poly& operator[](std::size_t n) const { return polys.at(n); }
};

/// Solves the four-term recurrence
///   x P_n = a3 n(n-1)(n-2) P_{n-2} + n(a2(n-1) + 1) P_{n-1} + (n a1 + m0) P_n + a0 P_{n+1}
/// for P_{n+1}, starting from P_0 = 1 with P_{-1} = P_{-2} = 0.
/// Throws SingularVarianceError when a0 == 0.
PolySequence gen_recurrence(const VarianceSpec& v, std::size_t N, std::string family = {});

/// Builds each P_n independently as a sum over the integer partitions of n
/// (Faa di Bruno), from the exact Taylor series of psi_mu and k_mu o psi_mu.
PolySequence gen_faadibruno(const VarianceSpec& v, std::size_t N, std::string family = {});

struct SequenceDiff {
    struct Entry {
        std::size_t n;
        Poly lhs;
        Poly rhs;
    };
    std::vector<Entry> entries;

    bool identical() const { return entries.empty(); }
};

/// Indices where the two sequences differ. The sequences must share m0 and
/// length; otherwise UsageError.
SequenceDiff compare(const PolySequence& a, const PolySequence& b);

/// Q_n = t^n P_n. Throws DomainError for t == 0.
PolySequence scale_sequence(const PolySequence& s, const Rational& t);

/// Multiplicity vectors k[1..n] (stored at k[j-1]) with sum j k_j = n.
std::vector<std::vector<unsigned>> partitions_by_multiplicity(unsigned n);

} // namespace cubicnef
