#pragma once

// Dual numbers a + b*eps with eps^2 = 0 over a coefficient ring R.
// Evaluating a polynomial expression at (x + eps) yields f(x) + f'(x) eps exactly,
// which gives directional derivatives without any symbolic expansion.

#include <ostream>
#include <string>

#include "weylcurve/ring.hpp"

namespace weylcurve {

template <CommutativeRing R>
struct Dual {
  R value;
  R eps;

  Dual(R v, R e) : value(std::move(v)), eps(std::move(e)) {}
  explicit Dual(const R& v) : value(v), eps(zero_like(v)) {}

  friend Dual operator+(const Dual& a, const Dual& b) { return {a.value + b.value, a.eps + b.eps}; }
  friend Dual operator-(const Dual& a, const Dual& b) { return {a.value - b.value, a.eps - b.eps}; }
  friend Dual operator*(const Dual& a, const Dual& b) {
    return {a.value * b.value, a.value * b.eps + a.eps * b.value};
  }
  Dual operator-() const { return {-value, -eps}; }
  friend bool operator==(const Dual& a, const Dual& b) {
    return a.value == b.value && a.eps == b.eps;
  }
};

template <class R>
bool is_zero(const Dual<R>& a) {
  return is_zero(a.value) && is_zero(a.eps);
}
template <class R>
Dual<R> zero_like(const Dual<R>& a) {
  return Dual<R>(zero_like(a.value));
}
template <class R>
Dual<R> one_like(const Dual<R>& a) {
  return Dual<R>(one_like(a.value));
}
template <class R>
Dual<R> from_int_like(const Dual<R>& a, long long n) {
  return Dual<R>(from_int_like(a.value, n));
}
template <class R>
unsigned characteristic(const Dual<R>& a) {
  return characteristic(a.value);
}

/// Invertible exactly when the value part is; (a + b eps)^-1 = a^-1 - b a^-2 eps.
template <class R>
  requires is_field_v<R>
Dual<R> inverse(const Dual<R>& a) {
  if (is_zero(a.value)) throw DivisionByZero();
  const R inv = inverse(a.value);
  return {inv, -(a.eps * inv * inv)};
}

template <class R>
std::string to_string(const Dual<R>& a) {
  using weylcurve::to_string;
  return to_string(a.value) + " + " + to_string(a.eps) + "e";
}

template <class R>
std::ostream& operator<<(std::ostream& os, const Dual<R>& a) {
  return os << to_string(a);
}

}  // namespace weylcurve
