#include "cubicnef/cumulants.hpp"

#include "cubicnef/errors.hpp"

#include <stdexcept>

namespace cubicnef {

std::vector<Poly> cumulant_polynomials(const VarianceSpec& v, std::size_t N) {
    std::vector<Poly> out;
    if (N == 0) return out;
    out.reserve(N);
    const Poly V = v.in_u();
    out.push_back(Poly({v.m0, Rational(1)}));
    for (std::size_t n = 1; n < N; ++n) out.push_back(V * out.back().derivative());
    return out;
}

CumulantTable cumulants(const VarianceSpec& v, std::size_t N) {
    if (N < 1) throw std::invalid_argument("cumulants: order must be at least 1");
    CumulantTable table{v.m0, {}};
    table.values.reserve(N);
    for (const auto& k : cumulant_polynomials(v, N)) table.values.push_back(k.coeff(0));
    return table;
}

CumulantTable cumulants_by_inversion(const VarianceSpec& v, std::size_t N) {
    if (N < 1) throw std::invalid_argument("cumulants: order must be at least 1");
    CumulantTable table{v.m0, {}};
    table.values.reserve(N);
    table.values.push_back(v.m0);
    if (N == 1) return table;
    // u(theta) with psi_mu(m0 + u(theta)) = theta.
    const auto u = series::revert(psi_series(v, N - 1), N - 1);
    Integer fact = 1;
    for (std::size_t n = 1; n < N; ++n) {
        fact *= static_cast<unsigned long>(n);
        table.values.push_back(u[n] * fact);
    }
    return table;
}

MomentTable raw_moments(const CumulantTable& c, std::size_t N) {
    if (N > c.order()) throw std::invalid_argument("raw_moments: cumulant table too short");
    MomentTable table{c.m0, {}};
    table.mom.reserve(N + 1);
    table.mom.emplace_back(1);
    for (std::size_t n = 0; n < N; ++n) {
        Rational next = 0;
        for (std::size_t k = 0; k <= n; ++k)
            next += Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))) * c.kappa(k + 1) *
                    table.mom[n - k];
        table.mom.push_back(next);
    }
    return table;
}

MomentTable moments(const VarianceSpec& v, std::size_t N) {
    return raw_moments(cumulants(v, std::max<std::size_t>(N, 1)), N);
}

namespace {

series::Series reciprocal_variance(const VarianceSpec& v, std::size_t order) {
    if (v.a[0] == 0) throw SingularVarianceError("variance vanishes at m0: a0 = 0");
    return series::reciprocal({v.a[0], v.a[1], v.a[2], v.a[3]}, order);
}

} // namespace

series::Series psi_series(const VarianceSpec& v, std::size_t N) {
    // d psi_mu / dm = 1 / V
    return series::integrate(reciprocal_variance(v, N), N);
}

series::Series kpsi_series(const VarianceSpec& v, std::size_t N) {
    // d k_mu(psi_mu(m)) / dm = m / V
    const auto inv = reciprocal_variance(v, N);
    return series::integrate(series::multiply({v.m0, Rational(1)}, inv, N), N);
}

} // namespace cubicnef
