#include "cubicnef/rational.hpp"

#include "cubicnef/errors.hpp"

#include <cctype>
#include <cmath>
#include <string>

namespace cubicnef {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw UsageError("malformed rational '" + std::string(text) + "'");
        Integer d(std::string(den), 10);
        if (d == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
        result = Rational(Integer(std::string(num), 10), d);
        result.canonicalize();
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            throw UsageError("malformed rational '" + std::string(text) + "'");
        Integer scale = 1;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        std::string digits = std::string(whole) + std::string(frac);
        result = Rational(Integer(digits, 10), scale);
        result.canonicalize();
    } else {
        if (!all_digits(body)) throw UsageError("malformed rational '" + std::string(text) + "'");
        result = Rational(Integer(std::string(body), 10));
    }
    return negative ? Rational(-result) : result;
}

std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_display_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_str();
}

double to_double(const Rational& r) {
    // mpq_get_d truncates toward zero; step to the neighbour if it is closer.
    const double truncated = r.get_d();
    if (!std::isfinite(truncated)) return truncated;
    const double away = std::nextafter(truncated, sgn(r) >= 0 ? HUGE_VAL : -HUGE_VAL);
    if (!std::isfinite(away)) return truncated;
    const Rational err_trunc = abs(r - from_double(truncated));
    const Rational err_away = abs(from_double(away) - r);
    return err_away < err_trunc ? away : truncated;
}

Rational from_double(double value) {
    if (!std::isfinite(value)) throw DomainError("non-finite value has no rational form");
    Rational r;
    mpq_set_d(r.get_mpq_t(), value);
    return r;
}

Integer factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Integer binomial(unsigned n, unsigned k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

} // namespace cubicnef
