#pragma once

#include "cubicnef/catalog.hpp"
#include "cubicnef/cli/json_io.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cubicnef::cli {

inline constexpr std::string_view kToolName = "nefpoly";
inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Check { two_ortho, full_ortho, bruno, recover, genfun, table1 };

std::string_view to_string(Check c);
/// Parses a comma-separated list such as "two-ortho,genfun". Throws UsageError.
std::set<Check> parse_checks(std::string_view list);
std::set<Check> all_checks();

struct Tolerances {
    double series_abs = 1e-8;
    double bilinear_abs = 1e-6;
    double quadrature_abs = 1e-6;
    /// Disabled by default: every acceptance threshold is absolute.
    double rel = 0.0;
};

struct VerifyOptions {
    std::size_t order = 12;
    std::size_t series_order = 30;
    std::size_t bilinear_order = 20;
    std::size_t quadrature_max_degree = 8;
    std::set<Check> checks = all_checks();
    Tolerances tol;
    std::optional<std::string> inject_typo;
};

struct VerifyTarget {
    FamilySpec family;
    Rational m0;
};

/// One per-family block; "pass" is true iff every applicable selected
/// check passed.
json verify_family(const VerifyTarget& target, const VerifyOptions& options);

/// Families are verified concurrently and assembled in input order. The
/// timestamp lives in "header" so the rest of the document is
/// byte-for-byte reproducible.
json build_report(const std::vector<VerifyTarget>& targets, const VerifyOptions& options);

/// Report with "header" removed, for golden comparisons.
json comparable_body(const json& report);

} // namespace cubicnef::cli
