#include "cubicnef/catalog.hpp"

#include "cubicnef/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cubicnef {

std::string_view to_string(FamilyClass c) { return c == FamilyClass::cubic ? "cubic" : "quadratic"; }

bool MeanDomain::contains(const Rational& m) const {
    if (lower && !(m > *lower)) return false;
    if (upper && !(m < *upper)) return false;
    return true;
}

bool MeanDomain::contains(double m) const {
    if (!std::isfinite(m)) return false;
    return contains(from_double(m));
}

std::string MeanDomain::to_string() const {
    return "(" + (lower ? to_display_string(*lower) : std::string("-inf")) + ", " +
           (upper ? to_display_string(*upper) : std::string("+inf")) + ")";
}

VarianceSpec FamilySpec::variance_at(const Rational& m0) const {
    if (!domain.contains(m0))
        throw DomainError("m0 = " + to_display_string(m0) + " is outside the mean domain " +
                          domain.to_string() + " of family '" + name + "'");
    const Poly shifted = taylor_shift(variance, m0);
    return VarianceSpec{m0, {shifted.coeff(0), shifted.coeff(1), shifted.coeff(2), shifted.coeff(3)}};
}

const Rational& FamilySpec::param(std::string_view key) const {
    for (const auto& p : params)
        if (p.name == key) return p.value;
    throw UsageError("family '" + name + "' has no parameter '" + std::string(key) + "'");
}

VarianceSpec catalog_variance(const FamilySpec& family, const Rational& m0) { return family.variance_at(m0); }

namespace {

const Rational kZero(0);

MeanDomain positive_half_line() { return MeanDomain{kZero, std::nullopt}; }

std::vector<double> scaled_probes(double m0) { return {0.5 * m0, m0, 2.0 * m0}; }

std::optional<double> distance_to_origin(double m0) { return std::abs(m0); }

// V_p(m) = p V_1(m / p): the convolution-power action on a unit-parameter
// variance function given by its coefficients in m.
Poly convolution_power(const std::vector<Rational>& unit, const Rational& p) {
    std::vector<Rational> out(unit.size());
    Rational pk = p; // p^(1 - k) for k = 0
    for (std::size_t k = 0; k < unit.size(); ++k) {
        out[k] = unit[k] * pk;
        pk /= p;
    }
    return Poly(std::move(out));
}

ClosedForms inverse_gaussian_forms(double p) {
    ClosedForms f;
    f.k = [p](double theta) { return -p * std::sqrt(-2.0 * theta); };
    f.dk = [p](double theta) { return p / std::sqrt(-2.0 * theta); };
    f.psi = [p](double m) { return -p * p / (2.0 * m * m); };
    f.density = [p](double x, double theta) {
        if (x <= 0.0) return 0.0;
        const double base_log = std::log(p) - 0.5 * std::log(2.0 * std::numbers::pi) - 1.5 * std::log(x) -
                                p * p / (2.0 * x);
        return std::exp(base_log + theta * x + p * std::sqrt(-2.0 * theta));
    };
    f.support_lower = 0.0;
    f.reciprocal_lower_tail = true;
    f.singularity_distance = distance_to_origin;
    f.probe_points = scaled_probes;
    return f;
}

ClosedForms normal_forms(double sigma2) {
    ClosedForms f;
    f.k = [sigma2](double theta) { return 0.5 * sigma2 * theta * theta; };
    f.dk = [sigma2](double theta) { return sigma2 * theta; };
    f.psi = [sigma2](double m) { return m / sigma2; };
    f.density = [sigma2](double x, double theta) {
        const double centered = x - sigma2 * theta;
        return std::exp(-0.5 * centered * centered / sigma2) / std::sqrt(2.0 * std::numbers::pi * sigma2);
    };
    f.singularity_distance = [](double) { return std::optional<double>{}; };
    const double sd = std::sqrt(sigma2);
    f.probe_points = [sd](double m0) { return std::vector<double>{m0 - sd, m0, m0 + sd}; };
    return f;
}

ClosedForms poisson_forms() {
    ClosedForms f;
    f.k = [](double theta) { return std::expm1(theta); };
    f.dk = [](double theta) { return std::exp(theta); };
    f.psi = [](double m) { return std::log(m); };
    f.density = [](double x, double theta) {
        if (x < 0.0 || x != std::floor(x)) return 0.0;
        return std::exp(theta * x - std::expm1(theta) - 1.0 - std::lgamma(x + 1.0));
    };
    f.support = SupportKind::nonnegative_integers;
    f.support_lower = 0.0;
    f.singularity_distance = distance_to_origin;
    f.probe_points = [](double) { return std::vector<double>{0.0, 1.0, 2.0, 3.0}; };
    return f;
}

ClosedForms gamma_forms(double shape) {
    ClosedForms f;
    f.k = [shape](double theta) { return -shape * std::log1p(-theta); };
    f.dk = [shape](double theta) { return shape / (1.0 - theta); };
    f.psi = [shape](double m) { return 1.0 - shape / m; };
    f.density = [shape](double x, double theta) {
        if (x <= 0.0) return 0.0;
        const double rate = 1.0 - theta;
        return std::exp(shape * std::log(rate) + (shape - 1.0) * std::log(x) - rate * x - std::lgamma(shape));
    };
    f.support_lower = 0.0;
    f.singularity_distance = distance_to_origin;
    f.probe_points = scaled_probes;
    return f;
}

struct Builder {
    std::string name;
    std::vector<std::string> aliases;
    std::vector<Parameter> defaults;
    FamilySpec (*build)(std::vector<Parameter> params);
};

const Rational& get(const std::vector<Parameter>& ps, std::string_view key) {
    for (const auto& p : ps)
        if (p.name == key) return p.value;
    throw UsageError("missing parameter '" + std::string(key) + "'");
}

FamilySpec cubic_entry(std::string name, std::string title, std::vector<Parameter> params,
                       const std::vector<Rational>& unit, std::string formula) {
    FamilySpec f;
    f.name = std::move(name);
    f.title = std::move(title);
    f.family_class = FamilyClass::cubic;
    f.domain = positive_half_line();
    f.variance = convolution_power(unit, get(params, "p"));
    f.params = std::move(params);
    f.formula = std::move(formula);
    return f;
}

const std::vector<Builder>& builders() {
    static const std::vector<Builder> table = {
        {"inverse-gaussian",
         {"ig", "inverse_gaussian"},
         {{"p", 1, "shape; V(m) = m^3/p^2"}},
         [](std::vector<Parameter> ps) {
             const double p = to_double(get(ps, "p"));
             auto f = cubic_entry("inverse-gaussian", "Inverse Gaussian", std::move(ps), {0, 0, 0, 1},
                                  "m^3/p^2");
             f.closed_forms = inverse_gaussian_forms(p);
             return f;
         }},
        {"strict-arcsine",
         {"arcsine", "strict_arcsine"},
         {{"p", 1, "convolution power"}},
         [](std::vector<Parameter> ps) {
             return cubic_entry("strict-arcsine", "Strict arcsine", std::move(ps), {0, 1, 0, 1},
                                "m + m^3/p^2");
         }},
        {"takacs",
         {},
         {{"p", 1, "convolution power (shape a = 1)"}},
         [](std::vector<Parameter> ps) {
             return cubic_entry("takacs", "Takacs (a = 1)", std::move(ps), {0, 1, 3, 2},
                                "m + 3m^2/p + 2m^3/p^2");
         }},
        {"large-arcsine",
         {"large_arcsine"},
         {{"p", 1, "convolution power (shape a = 1)"}},
         [](std::vector<Parameter> ps) {
             return cubic_entry("large-arcsine", "Large arcsine (a = 1)", std::move(ps), {4, 1, 2, 2},
                                "4p + m + 2m^2/p + 2m^3/p^2");
         }},
        {"ressel",
         {},
         {{"p", 1, "convolution power"}},
         [](std::vector<Parameter> ps) {
             return cubic_entry("ressel", "Ressel", std::move(ps), {0, 0, 1, 1}, "m^2/p + m^3/p^2");
         }},
        {"abel",
         {},
         {{"p", 1, "convolution power"}},
         [](std::vector<Parameter> ps) {
             return cubic_entry("abel", "Abel", std::move(ps), {0, 1, 2, 1}, "m(1 + m/p)^2");
         }},
        {"normal",
         {"gaussian"},
         {{"sigma2", 1, "variance"}},
         [](std::vector<Parameter> ps) {
             FamilySpec f;
             f.name = "normal";
             f.title = "Normal";
             const Rational s2 = get(ps, "sigma2");
             f.variance = Poly::constant(s2);
             f.formula = "sigma2";
             f.closed_forms = normal_forms(to_double(s2));
             f.params = std::move(ps);
             return f;
         }},
        {"poisson",
         {},
         {},
         [](std::vector<Parameter> ps) {
             FamilySpec f;
             f.name = "poisson";
             f.title = "Poisson";
             f.domain = positive_half_line();
             f.variance = Poly({0, 1});
             f.formula = "m";
             f.closed_forms = poisson_forms();
             f.params = std::move(ps);
             return f;
         }},
        {"binomial",
         {},
         {{"trials", 4, "number of trials"}},
         [](std::vector<Parameter> ps) {
             FamilySpec f;
             f.name = "binomial";
             f.title = "Binomial";
             const Rational n = get(ps, "trials");
             if (n.get_den() != 1) throw DomainError("binomial: trials must be a positive integer");
             f.domain = MeanDomain{kZero, n};
             f.variance = Poly({0, 1, Rational(-1 / n)});
             f.formula = "m - m^2/trials";
             f.params = std::move(ps);
             return f;
         }},
        {"negative-binomial",
         {"negbin", "negative_binomial"},
         {{"r", 2, "size"}},
         [](std::vector<Parameter> ps) {
             FamilySpec f;
             f.name = "negative-binomial";
             f.title = "Negative binomial";
             f.domain = positive_half_line();
             f.variance = Poly({0, 1, Rational(1 / get(ps, "r"))});
             f.formula = "m + m^2/r";
             f.params = std::move(ps);
             return f;
         }},
        {"gamma",
         {},
         {{"shape", 1, "shape"}},
         [](std::vector<Parameter> ps) {
             FamilySpec f;
             f.name = "gamma";
             f.title = "Gamma";
             f.domain = positive_half_line();
             const Rational shape = get(ps, "shape");
             f.variance = Poly({0, 0, Rational(1 / shape)});
             f.formula = "m^2/shape";
             f.closed_forms = gamma_forms(to_double(shape));
             f.params = std::move(ps);
             return f;
         }},
        {"hyperbolic-cosine",
         {"hcosh", "hyperbolic_cosine"},
         {{"p", 1, "convolution power"}},
         [](std::vector<Parameter> ps) {
             FamilySpec f;
             f.name = "hyperbolic-cosine";
             f.title = "Hyperbolic cosine";
             const Rational p = get(ps, "p");
             f.variance = Poly({p, 0, Rational(1 / p)});
             f.formula = "p + m^2/p";
             f.params = std::move(ps);
             return f;
         }},
    };
    return table;
}

const Builder& find_builder(std::string_view name) {
    for (const auto& b : builders()) {
        if (b.name == name) return b;
        if (std::find(b.aliases.begin(), b.aliases.end(), name) != b.aliases.end()) return b;
    }
    throw UsageError("unknown family '" + std::string(name) + "'");
}

} // namespace

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& b : builders()) out.push_back(b.name);
        return out;
    }();
    return names;
}

FamilySpec make_family(std::string_view name, const ParamOverrides& overrides) {
    const Builder& b = find_builder(name);
    std::vector<Parameter> params = b.defaults;
    for (const auto& [key, value] : overrides) {
        auto it = std::find_if(params.begin(), params.end(), [&](const Parameter& p) { return p.name == key; });
        if (it == params.end()) throw UsageError("family '" + b.name + "' has no parameter '" + key + "'");
        if (value <= 0) throw DomainError("family '" + b.name + "': parameter '" + key + "' must be positive");
        it->value = value;
    }
    return b.build(std::move(params));
}

std::vector<FamilySpec> catalog() {
    std::vector<FamilySpec> out;
    for (const auto& b : builders()) out.push_back(b.build(b.defaults));
    return out;
}

} // namespace cubicnef
