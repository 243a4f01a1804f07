#pragma once

// The p-determinant of an operator L: det of its matrix model, a polynomial
// in xt, yt. Every exponent of it is divisible by p, so it is a polynomial in
// the central coordinates z1 = xt^p, z2 = yt^p of degree at most deg L, whose
// top-degree part is the p-th power of the principal symbol of L.

#include <optional>
#include <string>
#include <vector>

#include "weylcurve/matrep.hpp"
#include "weylcurve/matrix.hpp"
#include "weylcurve/weyl.hpp"

namespace weylcurve {

template <class R>
struct PDetResult {
  BiPoly<R> raw;      // in xt, yt
  BiPoly<R> central;  // in z1, z2
  int source_degree;
  unsigned p;
};

/// Divides every exponent by p; throws InvariantViolation if one is not divisible.
template <class R>
BiPoly<R> to_central(const BiPoly<R>& raw, unsigned p) {
  BiPoly<R> central(raw.unit());
  for (const auto& [e, c] : raw.terms()) {
    if (e[0] % static_cast<int>(p) != 0 || e[1] % static_cast<int>(p) != 0)
      throw InvariantViolation("p-determinant term xt^" + std::to_string(e[0]) + "*yt^" +
                               std::to_string(e[1]) + " is not central");
    central.add_term({e[0] / static_cast<int>(p), e[1] / static_cast<int>(p)}, c);
  }
  return central;
}

template <class R>
BiPoly<R> from_central(const BiPoly<R>& central, unsigned p) {
  BiPoly<R> raw(central.unit());
  for (const auto& [e, c] : central.terms())
    raw.add_term({e[0] * static_cast<int>(p), e[1] * static_cast<int>(p)}, c);
  return raw;
}

/// Determinant of the p x p matrix model of L over the polynomial ring:
/// cofactor expansion for p <= 3, fraction-free Bareiss elimination above
/// that when the coefficients form a field, division-free Berkowitz otherwise.
template <class R>
PDetResult<R> pdet_direct(const WeylOp<R>& L) {
  if (L.zero()) throw ZeroInput("p-determinant of the zero operator");
  const unsigned p = L.characteristic();
  const auto a = represent(L);
  BiPoly<R> raw = [&] {
    if (p <= 3) return det_cofactor(a);
    if constexpr (ExactDivisionRing<BiPoly<R>>) return det_bareiss(a);
    else return det_berkowitz(a);
  }();
  BiPoly<R> central = to_central(raw, p);
  return {std::move(raw), std::move(central), bernstein_degree(L), p};
}

/// Smallest extension degree m' (a multiple of the field degree m) such that
/// F_{p^m'} has at least `points` elements.
unsigned interpolation_extension(unsigned p, unsigned m, std::uint64_t points);

/// Evaluation-interpolation strategy: scalar determinants of the matrix model
/// on a (pN+1) x (pN+1) grid in an extension field, interpolated with degree
/// bounds (pN, pN) and pulled back to the coefficient field.
PDetResult<FieldElem> pdet_interp(const Operator& L, std::uint64_t field_cap = kDefaultFieldOrderCap);

inline PDetResult<FieldElem> pdet(const Operator& L) { return pdet_direct(L); }

struct CheckReport {
  bool passed = true;
  std::vector<std::string> messages;
  /// First offending (e1, e2) exponent pair, if any.
  std::optional<std::pair<int, int>> offending_term;

  void fail(std::string message) {
    passed = false;
    messages.push_back(std::move(message));
  }
};

/// Both partial derivatives of raw vanish, every exponent is divisible by p,
/// and the two verdicts agree.
CheckReport check_centrality(const PDetResult<FieldElem>& r);

/// The central form is nonzero, has degree deg L, and its leading term is
/// z1^i0 z2^j0 with coefficient a_{i0 j0}^p for the leading monomial of L.
/// Also checks central against raw.
CheckReport check_leading(const Operator& L, const PDetResult<FieldElem>& r);

/// Tr(adj(A) [A, Y_p]) = 0 for A the matrix model of L, with adj(A) = f_A(A)
/// computed from the characteristic polynomial.
bool check_trace_identity(const Operator& L);

}  // namespace weylcurve
