#pragma once

#include "cubicnef/rational.hpp"

#include <cstddef>
#include <vector>

// Truncated power series in one variable. A series is a coefficient vector
// (index = order); every function here returns orders 0..order inclusive.
namespace cubicnef::series {

using Series = std::vector<Rational>;

Series truncate(Series s, std::size_t order);
Series multiply(const Series& a, const Series& b, std::size_t order);
/// 1/a; requires a[0] != 0.
Series reciprocal(const Series& a, std::size_t order);
/// Antiderivative with zero constant term.
Series integrate(const Series& a, std::size_t order);
/// outer(inner(t)); requires inner[0] == 0.
Series compose(const Series& outer, const Series& inner, std::size_t order);
/// Compositional inverse g with f(g(t)) = t; requires f[0] == 0, f[1] != 0.
Series revert(const Series& f, std::size_t order);

} // namespace cubicnef::series
