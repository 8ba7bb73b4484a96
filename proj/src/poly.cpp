#include "cubicnef/poly.hpp"

#include "cubicnef/errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace cubicnef {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
    if (c == 0) return {};
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

Poly Poly::linear_root(const Rational& root) { return Poly({Rational(-root), Rational(1)}); }

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

const Rational& Poly::leading() const {
    assert(!coeffs_.empty());
    return coeffs_.back();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    return Poly(std::move(d));
}

Poly Poly::shift_up() const {
    if (is_zero()) return {};
    Poly out;
    out.coeffs_.reserve(coeffs_.size() + 1);
    out.coeffs_.emplace_back(0);
    out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return out;
}

Poly Poly::majorant() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = abs(c);
    return out;
}

std::vector<double> Poly::to_doubles() const {
    std::vector<double> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(to_double(c));
    return out;
}

Poly& Poly::operator+=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& v : coeffs_) v *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

namespace {

// Writes sum of terms highest degree first, with the given coefficient
// formatter for |c| != 1 or degree 0.
template <class Fmt>
std::string render(const std::vector<Rational>& coeffs, std::string_view var, Fmt&& fmt_coeff,
                   bool latex) {
    if (coeffs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const Rational& c = coeffs[i];
        if (c == 0) continue;
        const bool neg = sgn(c) < 0;
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        first = false;
        const Rational mag = abs(c);
        if (i == 0 || mag != 1) out << fmt_coeff(mag);
        if (i >= 1) out << var;
        if (i >= 2) {
            if (latex)
                out << "^{" << i << "}";
            else
                out << "^" << i;
        }
    }
    return out.str();
}

} // namespace

namespace {

// Common denominator of all coefficients.
Integer denominator_lcm(const std::vector<Rational>& coeffs) {
    Integer d = 1;
    for (const auto& c : coeffs) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
    return d;
}

std::vector<Rational> scaled(const std::vector<Rational>& coeffs, const Integer& d) {
    std::vector<Rational> out = coeffs;
    for (auto& c : out) c *= d;
    return out;
}

} // namespace

std::string Poly::to_string(std::string_view var) const {
    auto fmt = [](const Rational& c) { return to_display_string(c); };
    const Integer d = denominator_lcm(coeffs_);
    if (d == 1) return render(coeffs_, var, fmt, false);
    const std::string body = render(scaled(coeffs_, d), var, fmt, false);
    if (coeffs_.size() == 1) return to_display_string(coeffs_[0]);
    return "(" + body + ")/" + d.get_str();
}

std::string Poly::to_latex(std::string_view var) const {
    auto fmt = [](const Rational& c) { return to_display_string(c); };
    const Integer d = denominator_lcm(coeffs_);
    if (d == 1) return render(coeffs_, var, fmt, true);
    if (coeffs_.size() == 1)
        return (sgn(coeffs_[0]) < 0 ? "-" : "") + std::string("\\frac{") + Integer(abs(coeffs_[0].get_num())).get_str() +
               "}{" + d.get_str() + "}";
    return "\\frac{1}{" + d.get_str() + "}\\left(" + render(scaled(coeffs_, d), var, fmt, true) + "\\right)";
}

std::vector<std::string> Poly::to_fraction_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(to_fraction_string(c));
    return out;
}

Poly Poly::from_fraction_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const auto& s : coeffs) v.push_back(parse_rational(s));
    return Poly(std::move(v));
}

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }
Poly scale(const Rational& c, const Poly& p) { return c * p; }
Rational eval_rational(const Poly& p, const Rational& x) { return p.eval(x); }
double eval_float(const Poly& p, double x) { return p.eval(x); }

} // namespace cubicnef

namespace cubicnef {

Poly taylor_shift(const Poly& p, const Rational& c) {
    const Poly step({c, Rational(1)});
    Poly acc;
    auto cs = p.coeffs();
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc * step + Poly::constant(cs[i]);
    return acc;
}

} // namespace cubicnef
