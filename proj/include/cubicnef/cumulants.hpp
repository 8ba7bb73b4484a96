#pragma once

#include "cubicnef/poly.hpp"
#include "cubicnef/rational.hpp"
#include "cubicnef/series.hpp"
#include "cubicnef/variance.hpp"

#include <cstddef>
#include <vector>

namespace cubicnef {

/// Exact cumulants kappa_1..kappa_N of the base law mu = P(m0, F).
struct CumulantTable {
    Rational m0;
    std::vector<Rational> values; // values[n - 1] = kappa_n

    std::size_t order() const { return values.size(); }
    const Rational& kappa(std::size_t n) const { return values.at(n - 1); }
};

/// Exact raw moments mom[0..N] of mu.
struct MomentTable {
    Rational m0;
    std::vector<Rational> mom;

    std::size_t order() const { return mom.empty() ? 0 : mom.size() - 1; }
    const Rational& operator[](std::size_t n) const { return mom.at(n); }
};

/// kappa_n(u) as polynomials in u = m - m0, n = 1..N: kappa_1 = m0 + u and
/// kappa_{n+1} = V(u) kappa_n'(u). Entry n - 1 holds kappa_n(u).
std::vector<Poly> cumulant_polynomials(const VarianceSpec& v, std::size_t N);

/// kappa_n = kappa_n(0). Requires N >= 1.
CumulantTable cumulants(const VarianceSpec& v, std::size_t N);

/// Second route to the same numbers: revert the psi series to get
/// m(theta) = k'(theta) and read kappa_{n+1} = n! [theta^n] m(theta).
CumulantTable cumulants_by_inversion(const VarianceSpec& v, std::size_t N);

/// mom_{n+1} = sum_k C(n,k) kappa_{k+1} mom_{n-k}.
MomentTable raw_moments(const CumulantTable& c, std::size_t N);

/// Convenience: raw_moments(cumulants(v, max(N,1)), N).
MomentTable moments(const VarianceSpec& v, std::size_t N);

/// Taylor coefficients (orders 0..N) of psi_mu(m0 + u). Throws
/// SingularVarianceError when a0 == 0.
series::Series psi_series(const VarianceSpec& v, std::size_t N);

/// Taylor coefficients (orders 0..N) of k_mu(psi_mu(m0 + u)).
series::Series kpsi_series(const VarianceSpec& v, std::size_t N);

} // namespace cubicnef
