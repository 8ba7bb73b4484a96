#include "cubicnef/genfun.hpp"

#include "cubicnef/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace cubicnef {

namespace {

double horner(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

} // namespace

std::vector<double> egf_partial_sums(const PolySequence& q, double z, double x, std::size_t N) {
    if (q.polys.size() < N + 1) throw std::invalid_argument("egf_partial_sums: sequence shorter than requested order");
    std::vector<double> sums;
    sums.reserve(N + 1);
    double weight = 1.0; // z^n / n!
    double acc = 0.0;
    for (std::size_t n = 0; n <= N; ++n) {
        if (n > 0) weight *= z / static_cast<double>(n);
        acc += weight * q.polys[n].eval(x);
        sums.push_back(acc);
    }
    return sums;
}

ConvergenceProbe partial_sum_density(const PolySequence& s, const RebasedFamily& family, double m, double x,
                                     std::size_t N) {
    ConvergenceProbe probe;
    probe.family = family.name();
    probe.m0 = family.m0();
    probe.x = x;
    probe.m = m;
    probe.N = N;
    probe.target = density_eval(family, x, m);
    probe.partial_sums = egf_partial_sums(s, m - family.m0(), x, N);
    probe.residuals.reserve(probe.partial_sums.size());
    for (double v : probe.partial_sums) probe.residuals.push_back(std::abs(v - probe.target));
    return probe;
}

IdentityResidual bilinear_identity(const GramMatrix& G, const RebasedFamily& family, double m, double m_prime,
                                   std::size_t N) {
    if (G.N < N) throw std::invalid_argument("bilinear_identity: Gram matrix order below N");
    const double th = family.psi(m);
    const double th_prime = family.psi(m_prime);
    IdentityResidual r;
    r.closed_form = std::exp(family.k(th + th_prime) - family.k(th) - family.k(th_prime));

    const double u = m - family.m0();
    const double v = m_prime - family.m0();
    double total = 0.0;
    double un = 1.0;
    for (std::size_t n = 0; n <= N; ++n) {
        double row = 0.0;
        double vq = 1.0;
        for (std::size_t q = 0; q <= N; ++q) {
            const Rational& g = G.at(n, q);
            if (g != 0) row += to_double(G.normalized(n, q)) * vq;
            vq *= v;
        }
        total += row * un;
        un *= u;
    }
    r.series = total;
    r.residual = std::abs(r.series - r.closed_form);
    return r;
}

IdentityResidual sheffer_check(const PolySequence& s, const RebasedFamily& family, const Rational& t, double z,
                               double x, std::size_t N) {
    const PolySequence q = scale_sequence(s, t);
    const double m = to_double(t) * z + family.m0();
    const double a = family.psi(m);
    const double b = -family.k(a);
    IdentityResidual r;
    r.closed_form = std::exp(a * x + b);
    r.series = egf_partial_sums(q, z, x, N).back();
    r.residual = std::abs(r.series - r.closed_form);
    return r;
}

namespace {

struct Integrand {
    std::vector<double> p, q;
    std::vector<double> envelope; // |P_n| |P_q| coefficient-wise majorant
    const RebasedFamily* family;

    double operator()(double x) const { return horner(p, x) * horner(q, x) * family->base_density(x); }
    // Monotone in |x|, so it bounds |P_n P_q| on [-r, r] and never vanishes.
    double bound(double x) const { return horner(envelope, std::max(1.0, std::abs(x))) * family->base_density(x); }
};

// Walks outward from `start` by factor steps until the envelope has fallen
// below ratio * peak and is still decreasing.
double find_cutoff(const std::function<double(double)>& envelope, double start, double step, bool multiplicative,
                   double ratio) {
    double peak = 0.0;
    double x = start;
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4000; ++i) {
        const double e = envelope(x);
        peak = std::max(peak, e);
        if (peak > 0.0 && e < ratio * peak && e <= prev) return x;
        prev = e;
        x = multiplicative ? x * step : x + step;
    }
    return x;
}

QuadratureEstimate integrate_segment(const std::function<double(double)>& f, double a, double b,
                                     const QuadratureOptions& opt) {
    QuadratureEstimate est;
    double error = 0.0;
    double l1 = 0.0;
    est.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, opt.max_depth,
                                                                              opt.relative_tolerance, &error, &l1);
    est.error_estimate = error;
    est.converged = std::isfinite(est.value) && error <= std::max(opt.relative_tolerance * l1, 1e-14);
    return est;
}

} // namespace

QuadratureEstimate quadrature_crosscheck(const RebasedFamily& family, const PolySequence& s, std::size_t n,
                                         std::size_t q, const QuadratureOptions& options) {
    if (n >= s.polys.size() || q >= s.polys.size())
        throw std::invalid_argument("quadrature_crosscheck: index beyond sequence");
    Integrand h{s.polys[n].to_doubles(), s.polys[q].to_doubles(), (s.polys[n].majorant() * s.polys[q].majorant()).to_doubles(),
                &family};
    const double m0 = family.m0();

    if (family.support() == SupportKind::nonnegative_integers) {
        QuadratureEstimate est;
        double sum = 0.0, comp = 0.0, peak = 0.0;
        for (int k = 0; k < 100000; ++k) {
            const double x = k;
            const double term = h(x);
            // Kahan summation
            const double y = term - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
            const double env = h.bound(x);
            peak = std::max(peak, env);
            if (x > m0 && env < options.truncation_ratio * peak) {
                est.converged = true;
                est.error_estimate = env;
                break;
            }
        }
        est.value = sum;
        return est;
    }

    auto env = [&](double x) { return h.bound(x); };
    QuadratureEstimate total;
    total.converged = true;
    auto accumulate = [&](const QuadratureEstimate& part) {
        total.value += part.value;
        total.error_estimate += part.error_estimate;
        total.converged = total.converged && part.converged;
    };

    const double scale = std::max(1.0, std::abs(m0));
    auto right_cutoff = [&] {
        return family.support_upper() ? *family.support_upper()
                                      : find_cutoff(env, std::max(m0, scale), 1.25, true, options.truncation_ratio);
    };

    if (family.support_lower()) {
        const double lower = *family.support_lower();
        const double split = std::max(m0, lower + scale * 1e-3);
        if (family.reciprocal_lower_tail()) {
            // y = 1/x on (lower, split]; the x^(-3/2) exp(-c/x) end becomes a
            // decaying tail in y.
            auto g = [&](double y) { return h(1.0 / y) / (y * y); };
            auto genv = [&](double y) { return env(1.0 / y) / (y * y); };
            const double y_max = find_cutoff(genv, 1.0 / split, 1.25, true, options.truncation_ratio);
            accumulate(integrate_segment(g, 1.0 / split, y_max, options));
        } else {
            accumulate(integrate_segment(h, lower, split, options));
        }
        accumulate(integrate_segment(h, split, right_cutoff(), options));
    } else {
        // Two-sided support: walk out from m0 in both directions.
        auto mirrored = [&](double x) { return env(2.0 * m0 - x); };
        const double left = 2.0 * m0 - find_cutoff(mirrored, m0, scale, false, options.truncation_ratio);
        const double right = find_cutoff(env, m0, scale, false, options.truncation_ratio);
        accumulate(integrate_segment(h, left, m0, options));
        accumulate(integrate_segment(h, m0, right, options));
    }
    return total;
}

} // namespace cubicnef
