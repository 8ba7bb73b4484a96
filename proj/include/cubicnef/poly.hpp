#pragma once

#include "cubicnef/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cubicnef {

/// Dense univariate polynomial with exact rational coefficients.
///
/// coeffs()[k] is the coefficient of x^k. The representation is always
/// normalized: no trailing zeros, so the zero polynomial has no
/// coefficients and degree() == std::nullopt (the "minus infinity" degree).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, std::size_t k);
    /// x - root
    static Poly linear_root(const Rational& root);

    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^k; zero past the degree.
    Rational coeff(std::size_t k) const;
    const Rational& leading() const;
    std::span<const Rational> coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const;
    double eval(double x) const;

    Poly derivative() const;
    /// Multiply by x.
    Poly shift_up() const;
    /// Polynomial with every coefficient replaced by its absolute value.
    Poly majorant() const;
    std::vector<double> to_doubles() const;

    /// Re-trims trailing zeros. Idempotent; operators already leave
    /// results normalized.
    void normalize();

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, Poly p) { return p *= c; }
    friend Poly operator*(Poly p, const Rational& c) { return p *= c; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Human-readable form, highest degree first: "x^2 - 5x + 3",
    /// "1/36x^2 - 5/12x + 2/9".
    std::string to_string(std::string_view var = "x") const;
    /// LaTeX form with \frac for non-integer coefficients.
    std::string to_latex(std::string_view var = "x") const;
    /// Coefficient strings "num/den", lowest degree first.
    std::vector<std::string> to_fraction_strings() const;
    static Poly from_fraction_strings(const std::vector<std::string>& coeffs);

private:
    std::vector<Rational> coeffs_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
Poly scale(const Rational& c, const Poly& p);
Rational eval_rational(const Poly& p, const Rational& x);
double eval_float(const Poly& p, double x);

} // namespace cubicnef

namespace cubicnef {

/// Coefficients of p(c + u) as a polynomial in u.
Poly taylor_shift(const Poly& p, const Rational& c);

} // namespace cubicnef
