#pragma once

// Matrix model of the Weyl algebra after adjoining central p-th roots.
//
// On k[x]/(x^p) with basis 1, x, ..., x^{p-1}, multiplication by x and d/dx
// are the nilpotent matrices X_p and Y_p with [Y_p, X_p] = I. Sending
//   x -> X_p + xt*I,  y -> Y_p + yt*I
// gives a ring homomorphism into p x p matrices over k[xt, yt] under which
// x^p -> xt^p I and y^p -> yt^p I. Column j holds the image of x^j.

#include <vector>

#include "weylcurve/matrix.hpp"
#include "weylcurve/poly.hpp"
#include "weylcurve/weyl.hpp"

namespace weylcurve {

template <class R>
using PolyMatrix = Matrix<BiPoly<R>>;

inline void require_prime_size(unsigned p) {
  if (!is_prime(p)) throw Error("matrix model size " + std::to_string(p) + " is not prime");
}

/// Multiplication by x on k[x]/(x^p): ones on the subdiagonal.
template <class S>
Matrix<S> multiplication_matrix(unsigned p, const S& unit) {
  require_prime_size(p);
  auto m = Matrix<S>::zeros(p, p, unit);
  for (unsigned j = 0; j + 1 < p; ++j) m(j + 1, j) = one_like(unit);
  return m;
}

/// d/dx on k[x]/(x^p): entry (j-1, j) = j.
template <class S>
Matrix<S> derivative_matrix(unsigned p, const S& unit) {
  require_prime_size(p);
  auto m = Matrix<S>::zeros(p, p, unit);
  for (unsigned j = 1; j < p; ++j) m(j - 1, j) = from_int_like(unit, j);
  return m;
}

template <class R>
PolyMatrix<R> build_Xp(unsigned p, const R& unit) {
  return multiplication_matrix(p, BiPoly<R>::constant(one_like(unit)));
}

template <class R>
PolyMatrix<R> build_Yp(unsigned p, const R& unit) {
  return derivative_matrix(p, BiPoly<R>::constant(one_like(unit)));
}

/// sum a_ij (X_p + sx I)^i (Y_p + sy I)^j with entries in S; `lift` maps a
/// coefficient of L into S. Powers of both shifted generators are computed
/// once per call up to the degrees L needs.
template <class S, class R, class Lift>
Matrix<S> represent_shifted(const WeylOp<R>& L, const S& shift_x, const S& shift_y, Lift&& lift) {
  const unsigned p = L.characteristic();
  const S unit = one_like(shift_x);
  const auto id = Matrix<S>::identity(p, unit);
  auto result = Matrix<S>::zeros(p, p, unit);
  if (L.zero()) return result;

  const Matrix<S> gx = multiplication_matrix(p, unit) + id.scaled(shift_x);
  const Matrix<S> gy = derivative_matrix(p, unit) + id.scaled(shift_y);
  std::vector<Matrix<S>> px{id}, py{id};
  for (int i = 1; i <= L.degree_x(); ++i) px.push_back(px.back() * gx);
  for (int j = 1; j <= L.degree_y(); ++j) py.push_back(py.back() * gy);

  for (const auto& [e, c] : L.terms()) {
    const S coeff = lift(c);
    if (e[1] == 0) result += px[e[0]].scaled(coeff);
    else if (e[0] == 0) result += py[e[1]].scaled(coeff);
    else result += (px[e[0]] * py[e[1]]).scaled(coeff);
  }
  return result;
}

/// The p x p matrix over k[xt, yt] representing L.
template <class R>
PolyMatrix<R> represent(const WeylOp<R>& L) {
  const R& unit = L.unit();
  const auto xt = BiPoly<R>::variable(unit, 0);
  const auto yt = BiPoly<R>::variable(unit, 1);
  return represent_shifted(L, xt, yt, [](const R& c) { return BiPoly<R>::constant(c); });
}

/// Entrywise formal derivative of a polynomial matrix.
template <class R>
PolyMatrix<R> partial_derivative(const PolyMatrix<R>& a, std::size_t var) {
  return map_entries(a, a.unit(), [var](const BiPoly<R>& f) { return partial_derivative(f, var); });
}

}  // namespace weylcurve
