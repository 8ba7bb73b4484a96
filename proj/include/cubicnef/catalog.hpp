#pragma once

#include "cubicnef/poly.hpp"
#include "cubicnef/rational.hpp"
#include "cubicnef/variance.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cubicnef {

enum class FamilyClass { quadratic, cubic };

std::string_view to_string(FamilyClass c);

struct Parameter {
    std::string name;
    Rational value;
    std::string meaning;
};

/// Open interval (lower, upper); a missing bound is infinite.
struct MeanDomain {
    std::optional<Rational> lower;
    std::optional<Rational> upper;

    bool contains(const Rational& m) const;
    bool contains(double m) const;
    std::string to_string() const;
};

enum class SupportKind { continuous, nonnegative_integers };

/// Floating-point closed forms of the generating measure of the family
/// (not yet rebased): cumulant function, its derivative, the inverse of the
/// derivative, and the density of P(theta, base) against the reference
/// measure (Lebesgue or counting).
struct ClosedForms {
    std::function<double(double)> k;
    std::function<double(double)> dk;
    std::function<double(double)> psi;
    std::function<double(double x, double theta)> density;
    SupportKind support = SupportKind::continuous;
    std::optional<double> support_lower;
    std::optional<double> support_upper;
    /// Integrand behaves like x^(-3/2) exp(-c/x) at the lower end; the
    /// quadrature maps (lower, split] through y = 1/x.
    bool reciprocal_lower_tail = false;
    /// Distance from m0 to the nearest singularity of psi, or nullopt if
    /// psi is entire.
    std::function<std::optional<double>(double m0)> singularity_distance;
    /// x points where the float-layer probes are evaluated.
    std::function<std::vector<double>(double m0)> probe_points;
};

/// A catalog entry: a named family with its parameters, mean domain, and
/// variance function V(m) as an exact polynomial in m.
struct FamilySpec {
    std::string name;
    std::string title;
    FamilyClass family_class = FamilyClass::quadratic;
    std::vector<Parameter> params;
    MeanDomain domain;
    Poly variance;
    std::string formula;
    std::optional<ClosedForms> closed_forms;

    /// Taylor coefficients of V about m0. Throws DomainError if m0 is not
    /// in the mean domain.
    VarianceSpec variance_at(const Rational& m0) const;
    const Rational& param(std::string_view name) const;
};

using ParamOverrides = std::map<std::string, Rational, std::less<>>;

/// Catalog names in catalog order: the six cubic families, then the six
/// quadratic ones.
const std::vector<std::string>& family_names();

/// Builds a family by name (aliases such as "ig" accepted) with optional
/// parameter overrides. Throws UsageError for unknown names or parameters
/// and DomainError for out-of-range parameter values.
FamilySpec make_family(std::string_view name, const ParamOverrides& overrides = {});

/// Every catalog family with default parameters.
std::vector<FamilySpec> catalog();

VarianceSpec catalog_variance(const FamilySpec& family, const Rational& m0);

} // namespace cubicnef
