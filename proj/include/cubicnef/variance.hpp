#pragma once

#include "cubicnef/poly.hpp"
#include "cubicnef/rational.hpp"

#include <array>

namespace cubicnef {

/// A cubic variance function written about its anchor mean:
///   V(m) = a[3] u^3 + a[2] u^2 + a[1] u + a[0],  u = m - m0.
/// a[0] = V(m0) is the variance of the base law and must be positive for
/// a genuine family; operations that divide by it throw on a[0] == 0.
struct VarianceSpec {
    Rational m0;
    std::array<Rational, 4> a;

    bool is_quadratic() const { return a[3] == 0; }
    bool is_cubic() const { return !is_quadratic(); }

    /// V as a polynomial in u = m - m0.
    Poly in_u() const { return Poly({a[0], a[1], a[2], a[3]}); }
    /// V as a polynomial in m.
    Poly in_m() const { return taylor_shift(in_u(), -m0); }

    friend bool operator==(const VarianceSpec&, const VarianceSpec&) = default;
};

} // namespace cubicnef
