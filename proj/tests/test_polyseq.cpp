#include "doctest.h"

#include "cubicnef/catalog.hpp"
#include "cubicnef/errors.hpp"
#include "cubicnef/polyseq.hpp"

using namespace cubicnef;

namespace {

Rational q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

VarianceSpec at(std::string_view family, const Rational& m0) {
    return catalog_variance(make_family(family), m0);
}

} // namespace

TEST_CASE("recurrence examples") {
    PolySequence ig = gen_recurrence(at("ig", 1), 3, "inverse-gaussian");
    CHECK(ig[0] == Poly{1});
    CHECK(ig[1] == Poly{-1, 1});
    CHECK(ig[2] == Poly{3, -5, 1});
    CHECK(ig[3] == Poly{-13, 30, -12, 1});

    PolySequence takacs = gen_recurrence(at("takacs", 1), 2);
    CHECK(takacs[1] == q(1, 6) * Poly{-1, 1});
    CHECK(takacs[2] == q(1, 36) * Poly{8, -15, 1});

    PolySequence abel = gen_recurrence(at("abel", 1), 2);
    CHECK(abel[2] == q(1, 16) * Poly{5, -10, 1});

    CHECK(gen_recurrence(at("ig", 1), 0).polys.size() == 1);
    CHECK_THROWS_AS(gen_recurrence(VarianceSpec{1, {0, 1, 0, 0}}, 3), SingularVarianceError);
}

TEST_CASE("Faa di Bruno examples") {
    PolySequence ig = gen_faadibruno(at("ig", 1), 2);
    CHECK(ig.provenance == Provenance::faadibruno);
    CHECK(ig[0] == Poly{1});
    CHECK(ig[1] == Poly{-1, 1});
    CHECK(ig[2] == Poly{3, -5, 1});
}

TEST_CASE("both constructions agree for every catalog family") {
    for (const auto& f : catalog()) {
        for (Rational m0 : {q(1), q(3, 2), q(2, 5)}) {
            if (!f.domain.contains(m0)) continue;
            VarianceSpec v = catalog_variance(f, m0);
            CAPTURE(f.name);
            CAPTURE(to_display_string(m0));
            SequenceDiff d = compare(gen_recurrence(v, 10, f.name), gen_faadibruno(v, 10, f.name));
            CHECK(d.identical());
        }
    }
}

TEST_CASE("degree and leading coefficient") {
    for (const auto& f : catalog()) {
        VarianceSpec v = catalog_variance(f, 1);
        PolySequence s = gen_recurrence(v, 12);
        Rational lead = 1;
        for (std::size_t n = 0; n <= 12; ++n) {
            CHECK(s[n].degree() == n);
            CHECK(s[n].leading() == lead);
            lead /= v.a[0];
        }
    }
}

TEST_CASE("quadratic families satisfy a three-term recurrence") {
    // With a3 = 0 the expansion of x P_n has no P_{n-2} component, so
    // x P_n - (n a1 + m0) P_n - n(a2(n-1)+1) P_{n-1} = a0 P_{n+1}.
    for (const auto& f : catalog()) {
        if (f.family_class != FamilyClass::quadratic) continue;
        VarianceSpec v = catalog_variance(f, 1);
        PolySequence s = gen_recurrence(v, 10);
        for (std::size_t n = 1; n < 10; ++n) {
            Rational nn(static_cast<long>(n));
            Poly lhs = s[n].shift_up() - (nn * v.a[1] + v.m0) * s[n] -
                       nn * (v.a[2] * (nn - 1) + 1) * s[n - 1];
            CHECK(lhs == v.a[0] * s[n + 1]);
        }
    }
}

TEST_CASE("compare") {
    PolySequence ig = gen_recurrence(at("ig", 1), 5);
    CHECK(compare(ig, ig).identical());
    SequenceDiff d = compare(ig, gen_recurrence(at("abel", 1), 5));
    REQUIRE(d.entries.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(d.entries[i].n == i + 1);
    CHECK_THROWS_AS(compare(ig, gen_recurrence(at("ig", 2), 5)), UsageError);
    CHECK_THROWS_AS(compare(ig, gen_recurrence(at("ig", 1), 4)), UsageError);
}

TEST_CASE("scale_sequence") {
    PolySequence ig = gen_recurrence(at("ig", 1), 6);
    CHECK(compare(scale_sequence(ig, 1), ig).identical());
    PolySequence qs = scale_sequence(ig, 2);
    CHECK(qs[2] == Poly{12, -20, 4});
    for (std::size_t n = 0; n <= 6; ++n) CHECK(qs[n].degree() == n);
    CHECK_THROWS_AS(scale_sequence(ig, 0), DomainError);
}

TEST_CASE("partition counts") {
    const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (unsigned n = 1; n <= 10; ++n) CHECK(partitions_by_multiplicity(n).size() == p[n]);
    CHECK(partitions_by_multiplicity(20).size() == 627);
    for (const auto& k : partitions_by_multiplicity(9)) {
        unsigned total = 0;
        for (unsigned j = 0; j < k.size(); ++j) total += (j + 1) * k[j];
        CHECK(total == 9);
    }
}
