#include "cubicnef/cli/verify.hpp"

#include "cubicnef/cumulants.hpp"
#include "cubicnef/errors.hpp"
#include "cubicnef/genfun.hpp"
#include "cubicnef/rebase.hpp"
#include "cubicnef/table1.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <future>
#include <iomanip>
#include <sstream>

namespace cubicnef::cli {

std::string_view to_string(Check c) {
    switch (c) {
    case Check::two_ortho: return "two-ortho";
    case Check::full_ortho: return "full-ortho";
    case Check::bruno: return "bruno";
    case Check::recover: return "recover";
    case Check::genfun: return "genfun";
    case Check::table1: return "table1";
    }
    return "";
}

std::set<Check> all_checks() {
    return {Check::two_ortho, Check::full_ortho, Check::bruno, Check::recover, Check::genfun, Check::table1};
}

std::set<Check> parse_checks(std::string_view list) {
    std::set<Check> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const auto comma = list.find(',', start);
        const auto item = list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (!item.empty()) {
            bool found = false;
            for (Check c : all_checks())
                if (to_string(c) == item) {
                    out.insert(c);
                    found = true;
                }
            if (item == "all") {
                out = all_checks();
                found = true;
            }
            if (!found) throw UsageError("unknown check '" + std::string(item) + "'");
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw UsageError("empty check list");
    return out;
}

namespace {

bool within(double residual, double abs_tol, double rel_tol, double target) {
    return std::isfinite(residual) && residual <= std::max(abs_tol, rel_tol * std::abs(target));
}

bool wants(const VerifyOptions& o, Check c) { return o.checks.contains(c); }

json genfun_block(const FamilySpec& family, const VarianceSpec& spec, const PolySequence& base,
                  const VerifyOptions& options) {
    if (!family.closed_forms) return json{{"skipped", "no closed-form cumulant function"}, {"pass", true}};

    const RebasedFamily rebased = rebase(family, spec.m0);
    const double m0 = rebased.m0();
    const double radius = rebased.singularity_distance().value_or(1.0);
    const auto xs = rebased.probe_points();
    const Tolerances& tol = options.tol;
    bool pass = true;

    const std::size_t long_order = std::max(options.series_order, options.bilinear_order);
    PolySequence seq = base;
    if (seq.order() < long_order) {
        // Extend, keeping whatever leading terms the caller supplied.
        seq = gen_recurrence(spec, long_order, family.name);
        std::copy(base.polys.begin(), base.polys.end(), seq.polys.begin());
        seq.provenance = base.provenance;
    }

    json partial = json::array();
    for (double offset : {0.05, 0.1})
        for (double x : xs) {
            const double m = m0 + offset * radius;
            const auto probe = partial_sum_density(seq, rebased, m, x, options.series_order);
            const bool ok = within(probe.residual(), tol.series_abs, tol.rel, probe.target);
            pass = pass && ok;
            partial.push_back(json{{"family", family.name},
                                   {"m0", m0},
                                   {"m", m},
                                   {"x", x},
                                   {"N", options.series_order},
                                   {"residual", probe.residual()},
                                   {"converged", ok}});
        }

    const GramMatrix G = gram(PolySequence{seq.family, spec, seq.provenance,
                                           {seq.polys.begin(), seq.polys.begin() + options.bilinear_order + 1}});
    json bilinear = json::array();
    for (double du : {-0.05, 0.0, 0.05})
        for (double dv : {-0.05, 0.0, 0.05}) {
            const double m = m0 + du * radius;
            const double mp = m0 + dv * radius;
            const auto r = bilinear_identity(G, rebased, m, mp, options.bilinear_order);
            const bool ok = within(r.residual, tol.bilinear_abs, tol.rel, r.closed_form);
            pass = pass && ok;
            bilinear.push_back(json{{"family", family.name},
                                    {"m0", m0},
                                    {"m", m},
                                    {"m_prime", mp},
                                    {"N", options.bilinear_order},
                                    {"residual", r.residual},
                                    {"converged", ok}});
        }

    const Rational t(1, 2);
    json sheffer = json::array();
    for (double zscale : {0.05, 0.1})
        for (double x : xs) {
            const double z = zscale * radius;
            const auto r = sheffer_check(seq, rebased, t, z, x, options.series_order);
            const bool ok = within(r.residual, tol.series_abs, tol.rel, r.closed_form);
            pass = pass && ok;
            sheffer.push_back(json{{"family", family.name},
                                   {"m0", m0},
                                   {"t", to_json(t)},
                                   {"z", z},
                                   {"x", x},
                                   {"N", options.series_order},
                                   {"residual", r.residual},
                                   {"converged", ok}});
        }

    const PolySequence scaled = scale_sequence(
        PolySequence{seq.family, spec, seq.provenance, {seq.polys.begin(), seq.polys.begin() + options.order + 1}}, t);
    const auto scaled_report = check_two_orthogonality(gram(scaled));
    pass = pass && scaled_report.verdict == Verdict::two_orthogonal;

    json quadrature = json::array();
    for (std::size_t n = 0; n <= options.quadrature_max_degree; ++n)
        for (std::size_t q = n; n + q <= options.quadrature_max_degree; ++q) {
            const auto est = quadrature_crosscheck(rebased, seq, n, q);
            const double exact = to_double(G.at(n, q));
            const double err = std::abs(est.value - exact);
            const bool ok = within(err, tol.quadrature_abs, tol.rel, exact);
            pass = pass && ok;
            quadrature.push_back(json{{"n", n},
                                      {"q", q},
                                      {"exact", to_json(G.at(n, q))},
                                      {"numeric", est.value},
                                      {"residual", err},
                                      {"error_estimate", est.error_estimate},
                                      {"converged", ok}});
        }

    return json{{"partial_sums", std::move(partial)},
                {"bilinear", std::move(bilinear)},
                {"sheffer", std::move(sheffer)},
                {"sheffer_scaled_two_ortho", ortho_json(scaled_report)},
                {"quadrature", std::move(quadrature)},
                {"pass", pass}};
}

std::optional<RecoveredVariance> try_recover(const GramMatrix& G) {
    if (G.N < 3 || G.at(1, 1) == 0) return std::nullopt;
    return recover_variance_from_gram(G);
}

} // namespace

json verify_family(const VerifyTarget& target, const VerifyOptions& options) {
    const FamilySpec& family = target.family;
    const VarianceSpec spec = family.variance_at(target.m0);
    const std::size_t N = options.order;

    json block = family_json(family, spec);
    block["checked_order"] = N;
    bool pass = true;

    PolySequence seq = gen_recurrence(spec, std::max<std::size_t>(N, 4), family.name);
    const ReferenceRow* ref = spec.m0 == 1 && family.family_class == FamilyClass::cubic &&
                                      family.param("p") == 1
                                  ? reference_row(family.name)
                                  : nullptr;

    if (options.inject_typo) {
        if (*options.inject_typo != "table1-p2") throw UsageError("unknown typo injection '" + *options.inject_typo + "'");
        if (ref) seq = with_printed_p2(seq, *ref);
        block["injected"] = *options.inject_typo;
    }

    const PolySequence head{seq.family, spec, seq.provenance, {seq.polys.begin(), seq.polys.begin() + N + 1}};
    const MomentTable mom = moments(spec, 2 * seq.order());

    if (wants(options, Check::two_ortho) || wants(options, Check::full_ortho) || wants(options, Check::recover)) {
        const GramMatrix G = gram(head, mom);
        if (wants(options, Check::two_ortho)) {
            auto report = check_two_orthogonality(G);
            report.recovered = try_recover(G);
            const bool ok = report.verdict == Verdict::two_orthogonal;
            pass = pass && ok;
            block["two_ortho"] = ortho_json(report);
            block["two_ortho"]["pass"] = ok;
        }
        if (wants(options, Check::full_ortho)) {
            const auto report = check_full_orthogonality(G);
            const bool expect_full = spec.is_quadratic();
            const bool ok = (report.verdict == Verdict::fully_orthogonal) == expect_full;
            pass = pass && ok;
            block["full_ortho"] = ortho_json(report);
            block["full_ortho"]["expected"] = expect_full ? "fully_orthogonal" : "not_fully_orthogonal";
            block["full_ortho"]["pass"] = ok;
        }
        if (wants(options, Check::recover)) {
            const auto fit = fit_recurrence(seq);
            const auto from_gram = try_recover(G);
            const bool fit_ok = fit.exact() && fit.spec == spec;
            const bool gram_ok = from_gram && *from_gram == RecoveredVariance{spec.a[0], spec.a[2], spec.a[3]};
            const bool ok = fit_ok && gram_ok;
            pass = pass && ok;
            json r{{"fit",
                    {{"a0", to_json(fit.spec.a[0])},
                     {"a1", to_json(fit.spec.a[1])},
                     {"a2", to_json(fit.spec.a[2])},
                     {"a3", to_json(fit.spec.a[3])},
                     {"m0", to_json(fit.spec.m0)}}},
                   {"fit_residuals", fit.residuals.size()},
                   {"pass", ok}};
            if (from_gram) r["gram"] = recovered_json(*from_gram);
            block["recovered"] = std::move(r);
        }
    }

    if (wants(options, Check::bruno)) {
        const auto bruno = gen_faadibruno(spec, N, family.name);
        const auto diff = compare(head, bruno);
        json diffs = json::array();
        for (const auto& e : diff.entries)
            diffs.push_back(json{{"n", e.n}, {"recurrence", e.lhs.to_string()}, {"faadibruno", e.rhs.to_string()}});
        pass = pass && diff.identical();
        block["recurrence_vs_bruno"] = json{{"diff_count", diff.entries.size()}, {"diffs", std::move(diffs)}, {"pass", diff.identical()}};
    }

    if (wants(options, Check::table1)) {
        json discrepancies = json::array();
        if (ref) {
            const auto clean = gen_recurrence(spec, 2, family.name);
            const auto cmp = compare_with_reference(*ref, clean, mom);
            for (const auto& d : cmp.discrepancies) discrepancies.push_back(discrepancy_json(d));
            const bool ok = cmp.p1_match && cmp.recurrence_match;
            pass = pass && ok;
            block["table1"] = json{{"p1_match", cmp.p1_match},
                                   {"p2_match", cmp.p2_match},
                                   {"recurrence_match", cmp.recurrence_match},
                                   {"variance_text_match", cmp.variance_text_match},
                                   {"pass", ok}};
        }
        block["table1_discrepancies"] = std::move(discrepancies);
    }

    if (wants(options, Check::genfun)) {
        json g = genfun_block(family, spec, seq, options);
        pass = pass && g["pass"].get<bool>();
        block["genfun"] = std::move(g);
    }

    block["pass"] = pass;
    return block;
}

namespace {

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

} // namespace

json build_report(const std::vector<VerifyTarget>& targets, const VerifyOptions& options) {
    std::vector<std::future<json>> jobs;
    jobs.reserve(targets.size());
    for (const auto& t : targets)
        jobs.push_back(std::async(std::launch::async, [&t, &options] { return verify_family(t, options); }));

    json families = json::array();
    bool overall = true;
    for (auto& job : jobs) {
        json block = job.get();
        overall = overall && block["pass"].get<bool>();
        families.push_back(std::move(block));
    }

    json checks = json::array();
    for (Check c : options.checks) checks.push_back(std::string(to_string(c)));

    return json{{"header", {{"generated_at", utc_timestamp()}}},
                {"tool", {{"name", std::string(kToolName)}, {"version", std::string(kToolVersion)}}},
                {"checked_order", options.order},
                {"checks", std::move(checks)},
                {"tolerances",
                 {{"series_abs", options.tol.series_abs},
                  {"bilinear_abs", options.tol.bilinear_abs},
                  {"quadrature_abs", options.tol.quadrature_abs},
                  {"rel", options.tol.rel}}},
                {"families", std::move(families)},
                {"overall_pass", overall}};
}

json comparable_body(const json& report) {
    json body = report;
    body.erase("header");
    return body;
}

} // namespace cubicnef::cli
