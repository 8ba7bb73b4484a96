#include "cubicnef/series.hpp"

#include <cassert>
#include <stdexcept>

namespace cubicnef::series {

Series truncate(Series s, std::size_t order) {
    s.resize(order + 1);
    return s;
}

Series multiply(const Series& a, const Series& b, std::size_t order) {
    Series out(order + 1);
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

Series reciprocal(const Series& a, std::size_t order) {
    if (a.empty() || a[0] == 0) throw std::domain_error("series reciprocal needs a nonzero constant term");
    Series out(order + 1);
    out[0] = 1 / a[0];
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n && k < a.size(); ++k) acc += a[k] * out[n - k];
        out[n] = -acc / a[0];
    }
    return out;
}

Series integrate(const Series& a, std::size_t order) {
    Series out(order + 1);
    for (std::size_t n = 1; n <= order && n - 1 < a.size(); ++n) out[n] = a[n - 1] / static_cast<unsigned long>(n);
    return out;
}

Series compose(const Series& outer, const Series& inner, std::size_t order) {
    if (!inner.empty() && inner[0] != 0) throw std::domain_error("series composition needs inner[0] == 0");
    // Horner in the outer variable.
    Series acc(order + 1);
    for (std::size_t k = std::min(outer.size(), order + 1); k-- > 0;) {
        acc = multiply(acc, inner, order);
        acc[0] += outer[k];
    }
    return acc;
}

Series revert(const Series& f, std::size_t order) {
    if (f.size() < 2 || f[0] != 0 || f[1] == 0)
        throw std::domain_error("series reversion needs f[0] == 0 and f[1] != 0");
    // Fixed point g = (t - (f(g) - f1 g)) / f1, one new exact order per pass.
    Series g(order + 1);
    if (order >= 1) g[1] = 1 / f[1];
    for (std::size_t n = 2; n <= order; ++n) {
        Series fg = compose(f, g, n);
        g[n] = -fg[n] / f[1];
    }
    return g;
}

} // namespace cubicnef::series
