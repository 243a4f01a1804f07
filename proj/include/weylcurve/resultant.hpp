#pragma once

#include <cstddef>
#include <vector>

#include "weylcurve/matrix.hpp"
#include "weylcurve/poly.hpp"

namespace weylcurve {

/// Coefficients of f viewed as a polynomial in variable `var`, lowest power
/// first; each coefficient is a polynomial with zero exponent in `var`.
template <class R, std::size_t N>
std::vector<Poly<R, N>> coefficients_in(const Poly<R, N>& f, std::size_t var) {
  const int deg = std::max(f.degree_in(var), 0);
  std::vector<Poly<R, N>> out(deg + 1, Poly<R, N>(f.unit()));
  for (const auto& [e, c] : f.terms()) {
    auto rest = e;
    rest[var] = 0;
    out[e[var]].add_term(rest, c);
  }
  return out;
}

/// Determinant of the Sylvester matrix of f and g with respect to `var`.
/// Vanishes exactly when f and g share a root in `var` over the algebraic
/// closure (given nonvanishing leading coefficients).
template <class R, std::size_t N>
Poly<R, N> resultant(const Poly<R, N>& f, const Poly<R, N>& g, std::size_t var) {
  if (f.zero() || g.zero()) throw ZeroInput("resultant of a zero polynomial");
  const int m = std::max(f.degree_in(var), 0);
  const int n = std::max(g.degree_in(var), 0);
  if (m == 0 && n == 0)
    throw Error("resultant: neither polynomial involves the eliminated variable");
  const auto fc = coefficients_in(f, var);
  const auto gc = coefficients_in(g, var);
  const std::size_t size = static_cast<std::size_t>(m + n);
  auto sylvester = Matrix<Poly<R, N>>::zeros(size, size, Poly<R, N>::constant(f.unit()));
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k) sylvester(row, row + k) = fc[m - k];
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k) sylvester(n + row, row + k) = gc[n - k];
  return determinant(sylvester);
}

}  // namespace weylcurve
