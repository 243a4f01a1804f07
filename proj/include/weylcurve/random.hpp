#pragma once

// Seeded generators for random field elements, operators and families.
// All draws go through one std::mt19937_64 so a seed fixes a whole run.

#include <cstdint>
#include <random>

#include "weylcurve/ffield.hpp"
#include "weylcurve/matrix.hpp"
#include "weylcurve/weyl.hpp"

namespace weylcurve {

using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}

inline FieldElem random_elem(const GaloisField& field, Rng& rng) {
  return field.element(static_cast<std::uint32_t>(uniform_below(rng, field.order())));
}

inline FieldElem random_nonzero(const GaloisField& field, Rng& rng) {
  return field.element(static_cast<std::uint32_t>(1 + uniform_below(rng, field.order() - 1)));
}

/// a * x^i * y^j with a != 0 and i + j <= max_degree.
inline Operator random_monomial(const GaloisField& field, int max_degree, Rng& rng) {
  const int total = static_cast<int>(uniform_below(rng, max_degree + 1));
  const int i = static_cast<int>(uniform_below(rng, total + 1));
  return Operator::monomial(random_nonzero(field, rng), i, total - i);
}

/// Nonzero operator of degree <= max_degree: each monomial of the layer is
/// present with probability `density`, with a random nonzero coefficient.
inline Operator random_operator(const GaloisField& field, int max_degree, Rng& rng,
                                double density = 0.5) {
  std::bernoulli_distribution present(density);
  while (true) {
    Operator L(field.one());
    for (int total = 0; total <= max_degree; ++total)
      for (int i = 0; i <= total; ++i)
        if (present(rng)) L.add_term(i, total - i, random_nonzero(field, rng));
    if (!L.zero()) return L;
  }
}

/// Family whose coefficients are random polynomials of degree <= t_degree in t.
/// May be degenerate; callers that need a non-constant family should check.
inline OperatorFamily random_family(const GaloisField& field, int max_degree, int t_degree,
                                    Rng& rng, double density = 0.5) {
  std::bernoulli_distribution present(density);
  const auto unit = UniPoly<FieldElem>::constant(field.one());
  while (true) {
    OperatorFamily family(unit);
    for (int total = 0; total <= max_degree; ++total)
      for (int i = 0; i <= total; ++i) {
        if (!present(rng)) continue;
        std::vector<FieldElem> c;
        for (int k = 0; k <= t_degree; ++k) c.push_back(random_elem(field, rng));
        family.add_term(i, total - i, UniPoly<FieldElem>(field.one(), std::move(c)));
      }
    if (!family.zero()) return family;
  }
}

inline Matrix<FieldElem> random_matrix(const GaloisField& field, std::size_t n, Rng& rng) {
  auto a = Matrix<FieldElem>::zeros(n, n, field.one());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = random_elem(field, rng);
  return a;
}

}  // namespace weylcurve
