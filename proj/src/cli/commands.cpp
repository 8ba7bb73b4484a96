#include "cubicnef/cli/commands.hpp"

#include "cubicnef/cli/json_io.hpp"
#include "cubicnef/cli/verify.hpp"
#include "cubicnef/errors.hpp"
#include "cubicnef/ortho.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace cubicnef::cli {

namespace {

struct FamilyArgs {
    std::string family;
    std::string m0 = "1";
    std::vector<std::string> params;
};

void add_family_options(CLI::App& cmd, FamilyArgs& args, bool required) {
    cmd.add_option("family,--family", args.family, "Family name (see `families`)")->required(required);
    cmd.add_option("--m0", args.m0, "Anchor mean as a rational, e.g. 3/2")->capture_default_str();
    cmd.add_option("--param", args.params, "Family parameter NAME=VALUE (repeatable)");
}

FamilySpec resolve_family(const std::string& name, const std::vector<std::string>& params) {
    ParamOverrides overrides;
    for (const auto& kv : params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--param expects NAME=VALUE, got '" + kv + "'");
        overrides[kv.substr(0, eq)] = parse_rational(kv.substr(eq + 1));
    }
    return make_family(name, overrides);
}

void write_families(std::ostream& out, const std::string& cls, const std::string& format) {
    std::vector<FamilySpec> entries;
    for (auto& f : catalog())
        if (cls == "all" || to_string(f.family_class) == cls) entries.push_back(std::move(f));

    if (format == "json") {
        json arr = json::array();
        for (const auto& f : entries) arr.push_back(catalog_entry_json(f));
        out << arr.dump(2) << '\n';
        return;
    }
    out << std::left << std::setw(20) << "family" << std::setw(11) << "class" << std::setw(18) << "parameters"
        << std::setw(14) << "mean domain"
        << "V(m)\n";
    for (const auto& f : entries) {
        std::string params;
        for (const auto& p : f.params) params += (params.empty() ? "" : ",") + p.name + "=" + to_display_string(p.value);
        out << std::left << std::setw(20) << f.name << std::setw(11) << to_string(f.family_class) << std::setw(18)
            << (params.empty() ? "-" : params) << std::setw(14) << f.domain.to_string() << f.formula << '\n';
    }
}

void write_table(std::ostream& out, const PolySequence& s, const std::string& format) {
    if (format == "json") {
        out << sequence_json(s).dump(2) << '\n';
    } else if (format == "csv") {
        out << "n,polynomial,coefficients\n";
        for (std::size_t n = 0; n < s.polys.size(); ++n) {
            std::string coeffs;
            for (const auto& c : s.polys[n].to_fraction_strings()) coeffs += (coeffs.empty() ? "" : ";") + c;
            out << n << ",\"" << s.polys[n].to_string() << "\"," << coeffs << '\n';
        }
    } else if (format == "latex") {
        out << "\\begin{tabular}{ll}\n$n$ & $P_n(x)$ \\\\\n\\hline\n";
        for (std::size_t n = 0; n < s.polys.size(); ++n)
            out << n << " & $" << s.polys[n].to_latex() << "$ \\\\\n";
        out << "\\end{tabular}\n";
    } else {
        out << "# " << s.family << ", m0 = " << to_display_string(s.spec.m0) << ", V(m0 + u) = "
            << s.spec.in_u().to_string("u") << " (" << to_string(s.provenance) << ")\n";
        for (std::size_t n = 0; n < s.polys.size(); ++n) out << "P_" << n << " = " << s.polys[n].to_string() << '\n';
    }
}

void write_gram(std::ostream& out, const GramMatrix& G, const PolySequence& s, const std::string& format) {
    if (format == "json") {
        out << gram_json(G, s).dump(2) << '\n';
        return;
    }
    if (format == "csv") {
        for (const auto& row : G.entries) {
            for (std::size_t q = 0; q < row.size(); ++q) out << (q ? "," : "") << to_display_string(row[q]);
            out << '\n';
        }
        return;
    }
    std::vector<std::vector<std::string>> cells(G.N + 1, std::vector<std::string>(G.N + 1));
    std::size_t width = 1;
    for (std::size_t n = 0; n <= G.N; ++n)
        for (std::size_t q = 0; q <= G.N; ++q) {
            std::string v = to_display_string(G.at(n, q));
            if (in_two_orthogonal_pattern(n, q)) v = G.at(n, q) == 0 ? "." : "!" + v;
            width = std::max(width, v.size());
            cells[n][q] = std::move(v);
        }
    out << "# Gram matrix of " << s.family << " at m0 = " << to_display_string(s.spec.m0)
        << "; '.' marks a zero required by 2-orthogonality, '!' a violation\n";
    for (const auto& row : cells) {
        for (std::size_t q = 0; q < row.size(); ++q) out << (q ? " " : "") << std::setw(static_cast<int>(width)) << row[q];
        out << '\n';
    }
}

void write_verify_text(std::ostream& out, const json& report) {
    for (const auto& f : report["families"]) {
        out << (f["pass"].get<bool>() ? "PASS " : "FAIL ") << f["name"].get<std::string>()
            << " m0=" << to_display_string(parse_rational(f["m0"].get<std::string>()));
        for (const char* key : {"two_ortho", "full_ortho", "recurrence_vs_bruno", "recovered", "table1", "genfun"})
            if (f.contains(key)) out << ' ' << key << '=' << (f[key]["pass"].get<bool>() ? "ok" : "FAIL");
        if (f.contains("table1_discrepancies") && !f["table1_discrepancies"].empty())
            out << " table1_discrepancies=" << f["table1_discrepancies"].size();
        out << '\n';
    }
    out << (report["overall_pass"].get<bool>() ? "overall: PASS" : "overall: FAIL") << '\n';
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Feinsilver polynomial sequences of cubic natural exponential families", std::string(kToolName)};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string families_class = "all";
    std::string families_format = "text";
    auto* families = app.add_subcommand("families", "List the family catalog");
    families->add_option("--class", families_class, "Filter: cubic, quadratic, or all")
        ->check(CLI::IsMember({"cubic", "quadratic", "all"}));
    families->add_option("--format", families_format)->check(CLI::IsMember({"text", "json"}));

    FamilyArgs table_args;
    std::size_t table_n = 5;
    std::string table_format = "text";
    std::string table_provenance = "recurrence";
    auto* table = app.add_subcommand("table", "Print P_0..P_N");
    add_family_options(*table, table_args, true);
    table->add_option("--n", table_n, "Highest index N")->capture_default_str();
    table->add_option("--format", table_format)->check(CLI::IsMember({"text", "csv", "json", "latex"}));
    table->add_option("--provenance", table_provenance)->check(CLI::IsMember({"recurrence", "faadibruno"}));

    FamilyArgs gram_args;
    std::size_t gram_n = 4;
    std::string gram_format = "text";
    auto* gram_cmd = app.add_subcommand("gram", "Print the exact Gram matrix of P_0..P_N");
    add_family_options(*gram_cmd, gram_args, true);
    gram_cmd->add_option("--n", gram_n, "Highest index N")->capture_default_str();
    gram_cmd->add_option("--format", gram_format)->check(CLI::IsMember({"text", "csv", "json"}));

    FamilyArgs verify_args;
    bool verify_all = false;
    VerifyOptions options;
    std::string checks_list;
    std::string out_path;
    std::string verify_format = "json";
    std::string inject;
    auto* verify = app.add_subcommand("verify", "Run the verification suites; exit 1 on any failure");
    add_family_options(*verify, verify_args, false);
    verify->add_flag("--all", verify_all, "Verify every catalog family");
    verify->add_option("--n", options.order, "Exact checks to order N")->capture_default_str();
    verify->add_option("--checks", checks_list, "Comma list: two-ortho,full-ortho,bruno,recover,genfun,table1");
    verify->add_option("--out", out_path, "Write the JSON report to PATH");
    verify->add_option("--format", verify_format)->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--abs-tol", "Override every absolute tolerance")
        ->check(CLI::NonNegativeNumber)
        ->each([&options](const std::string& v) {
            const double tol = std::stod(v);
            options.tol.series_abs = options.tol.bilinear_abs = options.tol.quadrature_abs = tol;
        });
    verify->add_option("--rel-tol", options.tol.rel, "Relative tolerance (0 disables)")->check(CLI::NonNegativeNumber);
    verify->add_option("--inject-typo", inject, "Corrupt the sequence on purpose: table1-p2");

    std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(argv_tail.begin(), argv_tail.end());

    try {
        app.parse(argv_tail);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            app.exit(e, out, err);
            return kSuccess;
        }
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        if (families->parsed()) {
            write_families(out, families_class, families_format);
            return kSuccess;
        }
        if (table->parsed()) {
            const auto family = resolve_family(table_args.family, table_args.params);
            const auto spec = catalog_variance(family, parse_rational(table_args.m0));
            const auto seq = table_provenance == "faadibruno" ? gen_faadibruno(spec, table_n, family.name)
                                                              : gen_recurrence(spec, table_n, family.name);
            write_table(out, seq, table_format);
            return kSuccess;
        }
        if (gram_cmd->parsed()) {
            const auto family = resolve_family(gram_args.family, gram_args.params);
            const auto spec = catalog_variance(family, parse_rational(gram_args.m0));
            const auto seq = gen_recurrence(spec, gram_n, family.name);
            write_gram(out, gram(seq), seq, gram_format);
            return kSuccess;
        }
        if (verify->parsed()) {
            if (!checks_list.empty()) options.checks = parse_checks(checks_list);
            if (!inject.empty()) options.inject_typo = inject;
            if (options.order < 4) throw UsageError("--n must be at least 4 for verify");
            const Rational m0 = parse_rational(verify_args.m0);
            std::vector<VerifyTarget> targets;
            if (verify_all) {
                if (!verify_args.family.empty()) throw UsageError("--all cannot be combined with a family name");
                for (auto& f : catalog()) targets.push_back({std::move(f), m0});
            } else {
                if (verify_args.family.empty()) throw UsageError("verify needs a family name or --all");
                targets.push_back({resolve_family(verify_args.family, verify_args.params), m0});
            }
            const json report = build_report(targets, options);
            if (!out_path.empty()) {
                std::ofstream file(out_path);
                if (!file) throw UsageError("cannot write '" + out_path + "'");
                file << report.dump(2) << '\n';
            }
            if (verify_format == "text" || !out_path.empty())
                write_verify_text(out, report);
            else
                out << report.dump(2) << '\n';
            return report["overall_pass"].get<bool>() ? kSuccess : kVerificationFailure;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

} // namespace cubicnef::cli
