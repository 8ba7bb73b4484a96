#include "doctest.h"

#include "cubicnef/catalog.hpp"
#include "cubicnef/cumulants.hpp"
#include "cubicnef/errors.hpp"
#include "cubicnef/rebase.hpp"

#include <cmath>
#include <string>

using namespace cubicnef;

namespace {

Rational q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

using Coeffs = std::array<Rational, 4>;

VarianceSpec at(std::string_view family, const Rational& m0) {
    return catalog_variance(make_family(family), m0);
}

// E[X^n] for the inverse Gaussian with mean 1 and shape 1.
Rational ig_moment(unsigned n) {
    if (n == 0) return 1;
    Rational sum = 0;
    for (unsigned k = 0; k < n; ++k) {
        Rational term(factorial(n - 1 + k), factorial(k) * factorial(n - 1 - k));
        term.canonicalize();
        Rational half_k(1, Integer(1) << k);
        sum += term * half_k;
    }
    return sum;
}

// Bell numbers via the Bell triangle: moments of Poisson(1).
std::vector<Integer> bell(unsigned n) {
    std::vector<Integer> out{1};
    std::vector<Integer> row{1};
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<Integer> next{row.back()};
        for (const auto& v : row) next.push_back(next.back() + v);
        out.push_back(next.front());
        row = next;
    }
    return out;
}

std::vector<Rational> grid_for(const FamilySpec& f, double m0) {
    std::vector<Rational> out;
    for (double s : {-0.6, -0.3, -0.1, 0.1, 0.4, 1.0, 2.5}) {
        Rational m = from_double(m0 + s * (f.domain.lower ? m0 : 2.0));
        if (f.domain.contains(m)) out.push_back(m);
    }
    return out;
}

} // namespace

TEST_CASE("catalog_variance examples") {
    CHECK(at("inverse-gaussian", 1).a == Coeffs{1, 3, 3, 1});
    CHECK(at("poisson", 1).a == Coeffs{1, 1, 0, 0});
    CHECK(at("takacs", 1).a == Coeffs{6, 13, 9, 2});
    CHECK(at("ressel", 1).a == Coeffs{2, 5, 4, 1});
    CHECK(at("abel", 1).a == Coeffs{4, 8, 5, 1});
    CHECK(at("large-arcsine", 1).a == Coeffs{9, 11, 8, 2});
    CHECK(at("strict-arcsine", 1).a == Coeffs{2, 4, 3, 1});
}

TEST_CASE("catalog_variance expands about m0 exactly") {
    for (const auto& f : catalog()) {
        for (Rational m0 : {q(1), q(3, 2), q(2, 7)}) {
            if (!f.domain.contains(m0)) continue;
            VarianceSpec v = catalog_variance(f, m0);
            for (Rational u : {q(0), q(1, 3), q(-1, 5), q(2)})
                CHECK(v.in_u().eval(u) == f.variance.eval(m0 + u));
        }
    }
}

TEST_CASE("catalog errors") {
    try {
        catalog_variance(make_family("ig"), -1);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        std::string what = e.what();
        CHECK(what.find("inverse-gaussian") != std::string::npos);
        CHECK(what.find("(0, +inf)") != std::string::npos);
    }
    CHECK_THROWS_AS(make_family("no-such-family"), UsageError);
    CHECK_THROWS_AS(make_family("ig", {{"bogus", 1}}), UsageError);
    CHECK_THROWS_AS(make_family("ig", {{"p", -1}}), DomainError);
    CHECK(family_names().size() == 12);
    CHECK(make_family("ig", {{"p", 2}}).variance == Poly::monomial(q(1, 4), 3));
}

TEST_CASE("cumulant examples") {
    CHECK(cumulants(at("ig", 1), 4).values == std::vector<Rational>{1, 1, 3, 15});
    VarianceSpec normal{0, {1, 0, 0, 0}};
    CHECK(cumulants(normal, 5).values == std::vector<Rational>{0, 1, 0, 0, 0});
    CHECK(cumulants(at("abel", 1), 3).values == std::vector<Rational>{1, 4, 32});
}

TEST_CASE("IG cumulants are (2n-3)!!") {
    CumulantTable c = cumulants(at("ig", 1), 10);
    Integer df = 1;
    for (unsigned n = 2; n <= 10; ++n) {
        CHECK(c.kappa(n) == df);
        df *= 2 * n - 1;
    }
}

TEST_CASE("raw moment examples") {
    MomentTable ig = moments(at("ig", 1), 6);
    CHECK(ig.mom == std::vector<Rational>{1, 1, 2, 7, 37, 266, 2431});
    CHECK(moments(at("takacs", 1), 0).mom == std::vector<Rational>{1});
    CHECK(moments(at("poisson", 1), 3).mom == std::vector<Rational>{1, 1, 2, 5});
}

TEST_CASE("moments match closed-form formulas to order 8") {
    MomentTable ig = moments(at("ig", 1), 8);
    for (unsigned n = 0; n <= 8; ++n) CHECK(ig[n] == ig_moment(n));

    auto b = bell(8);
    MomentTable poisson = moments(at("poisson", 1), 8);
    for (unsigned n = 0; n <= 8; ++n) CHECK(poisson[n] == b[n]);

    // Gamma with shape s and mean m0: m0^n s(s+1)...(s+n-1) / s^n.
    FamilySpec gamma = make_family("gamma", {{"shape", 2}});
    Rational m0 = q(3, 2);
    MomentTable g = moments(catalog_variance(gamma, m0), 8);
    Rational expect = 1;
    for (unsigned n = 1; n <= 8; ++n) {
        expect *= m0 * Rational(1 + n) / 2;
        CHECK(g[n] == expect);
    }

    // Standard normal: (n-1)!! for even n, 0 for odd.
    MomentTable normal = moments(at("normal", 0), 8);
    CHECK(normal.mom == std::vector<Rational>{1, 0, 1, 0, 3, 0, 15, 0, 105});
}

TEST_CASE("moment and cumulant invariants") {
    for (const auto& f : catalog()) {
        VarianceSpec v = catalog_variance(f, 1);
        MomentTable mom = moments(v, 4);
        CHECK(mom[0] == 1);
        CHECK(mom[1] == 1);
        CHECK(mom[2] - mom[1] * mom[1] == v.a[0]);
        CumulantTable c = cumulants(v, 2);
        CHECK(c.kappa(1) == v.m0);
        CHECK(c.kappa(2) == v.a[0]);
    }
}

TEST_CASE("two cumulant routes agree") {
    for (const auto& f : catalog()) {
        for (Rational m0 : {q(1), q(3, 2)}) {
            VarianceSpec v = catalog_variance(f, m0);
            CAPTURE(f.name);
            CHECK(cumulants(v, 12).values == cumulants_by_inversion(v, 12).values);
        }
    }
}

TEST_CASE("cumulant polynomial degree bound") {
    for (const auto& f : catalog()) {
        VarianceSpec v = catalog_variance(f, 1);
        std::size_t d = v.in_u().degree().value_or(0);
        std::size_t grow = d > 0 ? d - 1 : 0;
        auto polys = cumulant_polynomials(v, 10);
        for (std::size_t n = 1; n <= 10; ++n) {
            const Poly& k = polys[n - 1];
            if (k.is_zero()) continue;
            CHECK(*k.degree() <= n * grow + 1);
        }
    }
}

TEST_CASE("psi and kpsi series") {
    // -1/(2(1+u)^2) + 1/2 has u^k coefficient (-1)^(k+1) (k+1)/2.
    auto psi = psi_series(at("ig", 1), 8);
    CHECK(psi[0] == 0);
    for (unsigned k = 1; k <= 8; ++k) {
        Rational expect((k % 2 ? 1 : -1) * long(k + 1), 2);
        expect.canonicalize();
        CHECK(psi[k] == expect);
    }
    VarianceSpec normal{0, {1, 0, 0, 0}};
    CHECK(psi_series(normal, 5) == series::Series{0, 1, 0, 0, 0, 0});
    for (const auto& f : catalog()) {
        VarianceSpec v = catalog_variance(f, 1);
        auto kpsi = kpsi_series(v, 4);
        CHECK(kpsi[0] == 0);
        CHECK(kpsi[1] == v.m0 / v.a[0]);
        CHECK(psi_series(v, 4)[1] == 1 / v.a[0]);
    }
    VarianceSpec singular{1, {0, 1, 0, 0}};
    CHECK_THROWS_AS(psi_series(singular, 3), SingularVarianceError);
    CHECK_THROWS_AS(kpsi_series(singular, 3), SingularVarianceError);
}

TEST_CASE("rebased IG closed forms") {
    RebasedFamily ig = rebase(make_family("ig"), 1);
    CHECK(ig.psi(2.0) == doctest::Approx(0.375).epsilon(1e-15));
    CHECK(ig.k(0.375) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(density_eval(ig, 1.0, 2.0) == doctest::Approx(std::exp(-0.125)).epsilon(1e-14));
    CHECK(density_eval(ig, 0.7, 1.0) == 1.0);
    CHECK_THROWS_AS(density_eval(ig, 1.0, -0.5), DomainError);
    CHECK_THROWS_AS(rebase(make_family("takacs"), 1), UnsupportedFamilyError);
}

TEST_CASE("rebasing contract and k'(psi(m)) = m") {
    for (const auto& f : catalog()) {
        if (!f.closed_forms) continue;
        for (Rational m0r : {q(1), q(3, 2)}) {
            if (!f.domain.contains(m0r)) continue;
            CAPTURE(f.name);
            RebasedFamily r = rebase(f, m0r);
            double m0 = to_double(m0r);
            CHECK(std::abs(r.psi(m0)) <= 1e-10);
            CHECK(std::abs(r.k(0.0)) <= 1e-10);
            CHECK(std::abs(r.dk(0.0) - m0) <= 1e-10);
            // k''(0) = V(m0) by central differences
            double h = 1e-4;
            double k2 = (r.k(h) - 2 * r.k(0.0) + r.k(-h)) / (h * h);
            CHECK(k2 == doctest::Approx(to_double(f.variance.eval(m0r))).epsilon(1e-5));
            for (const Rational& m : grid_for(f, m0)) {
                double md = to_double(m);
                CHECK(std::abs(r.dk(r.psi(md)) - md) <= 1e-9 * std::max(1.0, std::abs(md)));
            }
        }
    }
}

TEST_CASE("density is increasing in m for x above m0") {
    RebasedFamily ig = rebase(make_family("ig"), 1);
    double prev = density_eval(ig, 1.5, 0.95);
    for (double m = 0.96; m <= 1.05; m += 0.01) {
        double cur = density_eval(ig, 1.5, m);
        CHECK(cur > prev);
        prev = cur;
    }
}
