#pragma once

#include "cubicnef/ortho.hpp"
#include "cubicnef/polyseq.hpp"
#include "cubicnef/rebase.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace cubicnef {

/// Partial sums S_0..S_N of sum_n (m - m0)^n / n! P_n(x) against the
/// closed-form density ratio f_mu(x, m).
struct ConvergenceProbe {
    std::string family;
    double m0 = 0.0;
    double x = 0.0;
    double m = 0.0;
    std::size_t N = 0;
    std::vector<double> partial_sums;
    double target = 0.0;
    std::vector<double> residuals; // residuals[n] = |partial_sums[n] - target|

    double residual() const { return residuals.back(); }
    bool converged(double abs_tol) const { return std::isfinite(residual()) && residual() <= abs_tol; }
};

/// Partial sums of sum_n z^n / n! Q_n(x), n = 0..N. Requires Q to have at
/// least N + 1 terms.
std::vector<double> egf_partial_sums(const PolySequence& q, double z, double x, std::size_t N);

/// Throws DomainError when m is outside the mean domain.
ConvergenceProbe partial_sum_density(const PolySequence& s, const RebasedFamily& family, double m, double x,
                                     std::size_t N);

struct IdentityResidual {
    double series = 0.0;
    double closed_form = 0.0;
    double residual = 0.0;
};

/// exp{k_mu(psi_mu(m) + psi_mu(m')) - k_mu(psi_mu(m)) - k_mu(psi_mu(m'))}
/// against sum_{n,q <= N} a_{nq} (m - m0)^n (m' - m0)^q.
IdentityResidual bilinear_identity(const GramMatrix& G, const RebasedFamily& family, double m, double m_prime,
                                   std::size_t N);

/// sum_n t^n P_n(x) z^n / n! against exp{a(z) x + b(z)} with
/// a(z) = psi_mu(t z + m0) and b(z) = -k_mu(a(z)).
IdentityResidual sheffer_check(const PolySequence& s, const RebasedFamily& family, const Rational& t, double z,
                               double x, std::size_t N);

struct QuadratureEstimate {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
};

struct QuadratureOptions {
    double relative_tolerance = 1e-8;
    /// Tails are cut where the integrand envelope drops below this fraction
    /// of its peak.
    double truncation_ratio = 1e-16;
    unsigned max_depth = 20;
};

/// Numerical integral of P_n P_q against mu from its closed-form density
/// (a plain sum for lattice laws).
QuadratureEstimate quadrature_crosscheck(const RebasedFamily& family, const PolySequence& s, std::size_t n,
                                         std::size_t q, const QuadratureOptions& options = {});

} // namespace cubicnef
