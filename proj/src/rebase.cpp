#include "cubicnef/rebase.hpp"

#include "cubicnef/errors.hpp"

#include <cmath>

namespace cubicnef {

namespace {

const ClosedForms& require_forms(const FamilySpec& family) {
    if (!family.closed_forms)
        throw UnsupportedFamilyError("family '" + family.name + "' has no closed-form cumulant function");
    return *family.closed_forms;
}

} // namespace

RebasedFamily::RebasedFamily(const FamilySpec& family, const Rational& m0)
    : name_(family.name), m0_(to_double(m0)), domain_(family.domain), forms_(require_forms(family)) {
    if (!domain_.contains(m0))
        throw DomainError("m0 = " + to_display_string(m0) + " is outside the mean domain " + domain_.to_string() +
                          " of family '" + name_ + "'");
    theta0_ = forms_.psi(m0_);
    k0_ = forms_.k(theta0_);
}

double RebasedFamily::psi(double m) const {
    if (!domain_.contains(m))
        throw DomainError("mean " + std::to_string(m) + " is outside the mean domain " + domain_.to_string() +
                          " of family '" + name_ + "'");
    return forms_.psi(m) - theta0_;
}

double RebasedFamily::k(double theta) const { return forms_.k(theta + theta0_) - k0_; }

double RebasedFamily::dk(double theta) const { return forms_.dk(theta + theta0_); }

double RebasedFamily::base_density(double x) const { return forms_.density(x, theta0_); }

double RebasedFamily::density_ratio(double x, double m) const {
    const double theta = psi(m);
    return std::exp(theta * x - k(theta));
}

RebasedFamily rebase(const FamilySpec& family, const Rational& m0) { return RebasedFamily(family, m0); }

double density_eval(const RebasedFamily& family, double x, double m) { return family.density_ratio(x, m); }

} // namespace cubicnef
