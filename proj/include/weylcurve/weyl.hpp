#pragma once

// The first Weyl algebra over a coefficient ring of characteristic p > 0.
//
// An operator is stored in normal order, sum a_ij x^i y^j with every x to the
// left of every y; since the monomials x^i y^j form a basis this is a unique
// canonical form. Products are reordered with
//
//   y^a x^b = sum_{k=0}^{min(a,b)} k! C(a,k) C(b,k) x^{b-k} y^{a-k},
//
// the closed form of repeatedly rewriting yx -> xy + 1, with the integer
// weights reduced mod p.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylcurve/ffield.hpp"
#include "weylcurve/parse.hpp"
#include "weylcurve/poly.hpp"
#include "weylcurve/unipoly.hpp"

namespace weylcurve {

/// C(n, k) mod p by Lucas' theorem.
unsigned binomial_mod(std::uint64_t n, std::uint64_t k, unsigned p);
/// k! mod p (zero once k >= p).
unsigned factorial_mod(std::uint64_t k, unsigned p);

template <CommutativeRing R>
class WeylOp {
 public:
  using Terms = typename BiPoly<R>::Terms;

  /// Zero operator over the ring of `unit`.
  explicit WeylOp(const R& unit) : coeffs_(unit) {
    if (ring_characteristic(unit) == 0)
      throw Error("the Weyl algebra is only implemented in positive characteristic");
  }
  /// Operator with the given normal-ordered coefficients (exponents (i, j) of x^i y^j).
  explicit WeylOp(BiPoly<R> coeffs) : coeffs_(std::move(coeffs)) {
    if (ring_characteristic(coeffs_.unit()) == 0)
      throw Error("the Weyl algebra is only implemented in positive characteristic");
  }

  static WeylOp constant(const R& c) { return WeylOp(BiPoly<R>::constant(c)); }
  static WeylOp monomial(const R& c, int i, int j) { return WeylOp(BiPoly<R>::monomial(c, {i, j})); }
  static WeylOp x(const R& unit) { return monomial(one_like(unit), 1, 0); }
  static WeylOp y(const R& unit) { return monomial(one_like(unit), 0, 1); }

  unsigned characteristic() const { return ring_characteristic(coeffs_.unit()); }
  const R& unit() const noexcept { return coeffs_.unit(); }
  bool zero() const noexcept { return coeffs_.zero(); }
  const Terms& terms() const noexcept { return coeffs_.terms(); }
  /// Normal-ordered coefficients as a commutative polynomial in (x, y).
  const BiPoly<R>& coefficients() const noexcept { return coeffs_; }
  R coeff(int i, int j) const { return coeffs_.coeff({i, j}); }
  void add_term(int i, int j, const R& c) { coeffs_.add_term({i, j}, c); }

  int degree_x() const noexcept { return coeffs_.degree_in(0); }
  int degree_y() const noexcept { return coeffs_.degree_in(1); }

  WeylOp& operator+=(const WeylOp& o) {
    coeffs_ += o.coeffs_;
    return *this;
  }
  WeylOp& operator-=(const WeylOp& o) {
    coeffs_ -= o.coeffs_;
    return *this;
  }
  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  WeylOp operator-() const { return WeylOp(-coeffs_); }
  WeylOp scaled(const R& s) const { return WeylOp(coeffs_.scaled(s)); }

  friend WeylOp operator*(const WeylOp& a, const WeylOp& b) { return weyl_mul(a, b); }
  friend bool operator==(const WeylOp& a, const WeylOp& b) { return a.coeffs_ == b.coeffs_; }

  friend WeylOp weyl_mul(const WeylOp& a, const WeylOp& b) {
    const unsigned p = a.characteristic();
    if (b.characteristic() != p) throw FieldMismatch("operators of different characteristic");
    // Weight k! C(s,k) C(t,k) mod p; only k < p contribute.
    BiPoly<R> out(a.unit());
    for (const auto& [ea, ca] : a.terms()) {
      const int i = ea[0], s = ea[1];
      for (const auto& [eb, cb] : b.terms()) {
        const int t = eb[0], j = eb[1];
        const R c = ca * cb;
        const int kmax = std::min({s, t, static_cast<int>(p) - 1});
        for (int k = 0; k <= kmax; ++k) {
          const unsigned w = static_cast<unsigned>(
              std::uint64_t{factorial_mod(k, p)} * binomial_mod(s, k, p) % p *
              binomial_mod(t, k, p) % p);
          if (w == 0) continue;
          out.add_term({i + t - k, s - k + j}, w == 1 ? c : c * from_int_like(c, w));
        }
      }
    }
    return WeylOp(std::move(out));
  }

 private:
  BiPoly<R> coeffs_;
};

using Operator = WeylOp<FieldElem>;
/// Operator whose coefficients are polynomials in a parameter t.
using OperatorFamily = WeylOp<UniPoly<FieldElem>>;

template <class R>
WeylOp<R> weyl_pow(const WeylOp<R>& a, unsigned e) {
  WeylOp<R> r = WeylOp<R>::constant(one_like(a.unit()));
  for (unsigned k = 0; k < e; ++k) r = weyl_mul(r, a);
  return r;
}

template <class R>
WeylOp<R> weyl_commutator(const WeylOp<R>& a, const WeylOp<R>& b) {
  return weyl_mul(a, b) - weyl_mul(b, a);
}

/// Bernstein degree max(i + j); throws ZeroInput for the zero operator.
template <class R>
int bernstein_degree(const WeylOp<R>& L) {
  if (L.zero()) throw ZeroInput("Bernstein degree of the zero operator");
  return L.coefficients().degree();
}

template <class R>
struct LeadingMonomial {
  int i;
  int j;
  R coeff;
};

/// Among the terms of top total degree, the one with the largest x-degree.
template <class R>
LeadingMonomial<R> leading_monomial(const WeylOp<R>& L) {
  if (L.zero()) throw ZeroInput("leading monomial of the zero operator");
  const auto& [e, c] = L.coefficients().leading();
  return {e[0], e[1], c};
}

inline constexpr VarNames<2> kWeylVars{"x", "y"};

template <class R>
std::string to_string(const WeylOp<R>& L) {
  return to_string(L.coefficients(), kWeylVars);
}

template <class R>
std::ostream& operator<<(std::ostream& os, const WeylOp<R>& L) {
  return os << to_string(L);
}

/// Parses an operator such as "3*x^2*y + y*x - [1,1]". Products are evaluated
/// in the Weyl algebra, so the input need not be normally ordered.
Operator parse_op(std::string_view text, const GaloisField& field);
std::string format_op(const Operator& L);

/// Parses a family such as "x + t*y + t^2" with coefficients in F_q[t].
OperatorFamily parse_family(std::string_view text, const GaloisField& field);

/// Specializes every coefficient of a family at t.
Operator specialize(const OperatorFamily& family, const FieldElem& t);

}  // namespace weylcurve
