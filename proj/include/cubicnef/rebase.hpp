#pragma once

#include "cubicnef/catalog.hpp"

#include <optional>
#include <vector>

namespace cubicnef {

/// Closed forms shifted so the member with mean m0 is the base measure:
/// psi_mu(m0) = 0, k_mu(0) = 0, k_mu'(0) = m0.
class RebasedFamily {
public:
    RebasedFamily(const FamilySpec& family, const Rational& m0);

    const std::string& name() const { return name_; }
    double m0() const { return m0_; }
    const MeanDomain& domain() const { return domain_; }
    SupportKind support() const { return forms_.support; }
    std::optional<double> support_lower() const { return forms_.support_lower; }
    std::optional<double> support_upper() const { return forms_.support_upper; }
    bool reciprocal_lower_tail() const { return forms_.reciprocal_lower_tail; }

    double psi(double m) const;
    double k(double theta) const;
    double dk(double theta) const;

    /// Density of mu itself against Lebesgue or counting measure.
    double base_density(double x) const;

    /// f_mu(x, m) = exp(psi_mu(m) x - k_mu(psi_mu(m))). Throws DomainError
    /// when m is outside the mean domain.
    double density_ratio(double x, double m) const;

    std::optional<double> singularity_distance() const { return forms_.singularity_distance(m0_); }
    std::vector<double> probe_points() const { return forms_.probe_points(m0_); }

private:
    std::string name_;
    double m0_;
    MeanDomain domain_;
    ClosedForms forms_;
    double theta0_;
    double k0_;
};

/// Throws UnsupportedFamilyError if the family has no closed forms.
RebasedFamily rebase(const FamilySpec& family, const Rational& m0);

/// Same as family.density_ratio(x, m).
double density_eval(const RebasedFamily& family, double x, double m);

} // namespace cubicnef
