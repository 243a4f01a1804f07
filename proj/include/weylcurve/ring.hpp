#pragma once

// Coefficient-ring protocol shared by the generic containers.
//
// A ring type R supplies, besides + - * and ==, the free functions
//   is_zero(a), zero_like(a), one_like(a), from_int_like(a, n), characteristic(a)
// which take an existing element as context: elements of F_{p^m} or of a
// polynomial ring cannot be created from nothing. Rings with exact division
// also provide exact_divide(a, b), and fields set is_field_v.

#include <concepts>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "weylcurve/error.hpp"
#include "weylcurve/ffield.hpp"

namespace weylcurve {

template <class R>
concept CommutativeRing = std::copy_constructible<R> && requires(const R& a, const R& b, long long n) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { zero_like(a) } -> std::convertible_to<R>;
  { one_like(a) } -> std::convertible_to<R>;
  { from_int_like(a, n) } -> std::convertible_to<R>;
  { characteristic(a) } -> std::convertible_to<unsigned>;
};

template <class R>
concept ExactDivisionRing = CommutativeRing<R> && requires(const R& a, const R& b) {
  { exact_divide(a, b) } -> std::convertible_to<R>;
};

template <class R>
inline constexpr bool is_field_v = false;

template <>
inline constexpr bool is_field_v<FieldElem> = true;

/// characteristic() for use inside classes that shadow the name with a member.
template <class R>
unsigned ring_characteristic(const R& a) {
  return characteristic(a);
}

template <CommutativeRing R>
R ring_pow(R base, std::uint64_t e) {
  R result = one_like(base);
  for (; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Rational numbers with 64-bit parts; overflow is reported, never wrapped.
// Used where a characteristic-zero coefficient ring is wanted.

class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den) {
    if (den == 0) throw DivisionByZero();
    assign(static_cast<__int128>(num), static_cast<__int128>(den));
  }

  long long num() const noexcept { return num_; }
  long long den() const noexcept { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DivisionByZero();
    return make(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  friend bool operator==(const Rational&, const Rational&) = default;
  friend auto operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

 private:
  static Rational make(__int128 num, __int128 den) {
    Rational r;
    r.assign(num, den);
    return r;
  }

  void assign(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 a = num < 0 ? -num : num, b = den;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
    constexpr __int128 kMax = INT64_MAX;
    if (num > kMax || num < -kMax || den > kMax) throw Error("rational overflow");
    num_ = static_cast<long long>(num);
    den_ = static_cast<long long>(den);
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline bool is_zero(const Rational& a) { return a.num() == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational from_int_like(const Rational&, long long n) { return Rational(n); }
inline unsigned characteristic(const Rational&) { return 0; }
inline Rational exact_divide(const Rational& a, const Rational& b) { return a / b; }
inline Rational inverse(const Rational& a) { return Rational(1) / a; }
inline std::string to_string(const Rational& a) {
  return a.den() == 1 ? std::to_string(a.num())
                      : std::to_string(a.num()) + "/" + std::to_string(a.den());
}
inline std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << to_string(a); }

template <>
inline constexpr bool is_field_v<Rational> = true;

inline FieldElem inverse(const FieldElem& a) { return a.inverse(); }

// ---------------------------------------------------------------------------
// Shared term formatting: "3*x^2*y + [1,1]*x - 2/3" style.

/// Appends one term c*monomial to a sum being printed. An empty monomial means
/// a constant term. Residue vectors are bracketed and compound coefficients
/// parenthesized so the output parses back.
template <class R>
void append_term(std::string& out, const R& c, const std::string& monomial) {
  using weylcurve::to_string;
  std::string s = to_string(c);
  bool negative = false;
  if (s.find(' ') != std::string::npos) {
    s = "(" + s + ")";
  } else {
    negative = !s.empty() && s[0] == '-';
    if (negative) s.erase(0, 1);
    if (s.find(',') != std::string::npos) s = "[" + s + "]";
  }
  if (!out.empty()) out += negative ? " - " : " + ";
  else if (negative) out += "-";
  if (monomial.empty()) out += s;
  else if (s == "1") out += monomial;
  else out += s + "*" + monomial;
}

}  // namespace weylcurve
