#pragma once

// Dense univariate polynomials over a coefficient ring, used for the parameter t
// of one-parameter operator families (coefficients in F_q[t]).

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "weylcurve/ring.hpp"

namespace weylcurve {

template <CommutativeRing R>
class UniPoly {
 public:
  /// Zero polynomial over the ring of `unit`.
  explicit UniPoly(const R& unit) : one_(one_like(unit)) {}
  UniPoly(const R& unit, std::vector<R> coeffs) : one_(one_like(unit)), c_(std::move(coeffs)) {
    normalize();
  }

  static UniPoly constant(const R& c) { return UniPoly(c, {c}); }
  static UniPoly variable(const R& unit) { return UniPoly(unit, {zero_like(unit), one_like(unit)}); }

  const R& unit() const noexcept { return one_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  const std::vector<R>& coeffs() const noexcept { return c_; }
  R coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : zero_like(one_); }
  R leading() const { return c_.empty() ? zero_like(one_) : c_.back(); }

  R evaluate(const R& t) const {
    R acc = zero_like(one_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<R> r(std::max(a.c_.size(), b.c_.size()), zero_like(a.one_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return UniPoly(a.one_, std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  UniPoly operator-() const {
    std::vector<R> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(-c);
    return UniPoly(one_, std::move(r));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.zero() || b.zero()) return UniPoly(a.one_);
    std::vector<R> r(a.c_.size() + b.c_.size() - 1, zero_like(a.one_));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return UniPoly(a.one_, std::move(r));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void normalize() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  R one_;
  std::vector<R> c_;
};

template <class R>
bool is_zero(const UniPoly<R>& a) {
  return a.zero();
}
template <class R>
UniPoly<R> zero_like(const UniPoly<R>& a) {
  return UniPoly<R>(a.unit());
}
template <class R>
UniPoly<R> one_like(const UniPoly<R>& a) {
  return UniPoly<R>::constant(a.unit());
}
template <class R>
UniPoly<R> from_int_like(const UniPoly<R>& a, long long n) {
  return UniPoly<R>::constant(from_int_like(a.unit(), n));
}
template <class R>
unsigned characteristic(const UniPoly<R>& a) {
  return characteristic(a.unit());
}

/// Quotient of a by b; throws InexactDivision when b does not divide a.
template <class R>
  requires is_field_v<R>
UniPoly<R> exact_divide(const UniPoly<R>& a, const UniPoly<R>& b) {
  if (b.zero()) throw DivisionByZero();
  std::vector<R> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) {
    if (a.zero()) return a;
    throw InexactDivision("univariate division leaves a remainder");
  }
  std::vector<R> quot(a.degree() - db + 1, zero_like(a.unit()));
  const R lead_inv = inverse(b.leading());
  for (int k = a.degree() - db; k >= 0; --k) {
    const R f = rem[k + db] * lead_inv;
    quot[k] = f;
    for (int i = 0; i <= db; ++i) rem[k + i] = rem[k + i] - f * b.coeffs()[i];
  }
  for (const auto& r : rem)
    if (!is_zero(r)) throw InexactDivision("univariate division leaves a remainder");
  return UniPoly<R>(a.unit(), std::move(quot));
}

template <class R>
std::string to_string(const UniPoly<R>& a, const std::string& var = "t") {
  if (a.zero()) return "0";
  std::string out;
  for (int k = a.degree(); k >= 0; --k) {
    const R& c = a.coeffs()[k];
    if (is_zero(c)) continue;
    append_term(out, c, k == 0 ? "" : k == 1 ? var : var + "^" + std::to_string(k));
  }
  return out;
}

template <class R>
std::ostream& operator<<(std::ostream& os, const UniPoly<R>& a) {
  return os << to_string(a);
}

}  // namespace weylcurve
