#pragma once

// Sparse commutative polynomials in N variables over a coefficient ring R.
//
// Terms are kept in a map ordered by descending graded-lexicographic order
// (total degree first, ties broken with the first variable greatest), so the
// first stored term is the leading term. No zero coefficient is ever stored.
// BiPoly<R> = Poly<R, 2> is the workhorse: it carries the shifted central
// variables (xt, yt) of the matrix model and the curve coordinates (z1, z2).

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylcurve/ring.hpp"

namespace weylcurve {

template <std::size_t N>
using Exponent = std::array<int, N>;

template <std::size_t N>
constexpr int total_degree(const Exponent<N>& e) noexcept {
  int d = 0;
  for (int k : e) d += k;
  return d;
}

/// Strict "a comes before b" in descending grlex order.
template <std::size_t N>
struct GrlexGreater {
  constexpr bool operator()(const Exponent<N>& a, const Exponent<N>& b) const noexcept {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Degree of the zero polynomial.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

template <CommutativeRing R, std::size_t N>
class Poly {
 public:
  using Exp = Exponent<N>;
  using Terms = std::map<Exp, R, GrlexGreater<N>>;
  static constexpr std::size_t kVars = N;

  /// Zero polynomial over the ring of `unit`.
  explicit Poly(const R& unit) : one_(one_like(unit)) {}

  static Poly constant(const R& c) {
    Poly f(c);
    f.add_term(Exp{}, c);
    return f;
  }
  static Poly monomial(const R& c, const Exp& e) {
    Poly f(c);
    f.add_term(e, c);
    return f;
  }
  static Poly variable(const R& unit, std::size_t k) {
    Exp e{};
    e[k] = 1;
    return monomial(one_like(unit), e);
  }

  const R& unit() const noexcept { return one_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool zero() const noexcept { return terms_.empty(); }

  int degree() const noexcept { return zero() ? kZeroDegree : total_degree(terms_.begin()->first); }
  int degree_in(std::size_t k) const noexcept {
    int d = kZeroDegree;
    for (const auto& [e, c] : terms_) d = std::max(d, e[k]);
    return d;
  }

  R coeff(const Exp& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? zero_like(one_) : it->second;
  }

  /// Leading term in grlex order; throws ZeroInput for the zero polynomial.
  const std::pair<const Exp, R>& leading() const {
    if (zero()) throw ZeroInput("leading term of the zero polynomial");
    return *terms_.begin();
  }

  void add_term(const Exp& e, const R& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly r(one_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.one_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exp e;
        for (std::size_t k = 0; k < N; ++k) e[k] = ea[k] + eb[k];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  Poly scaled(const R& s) const {
    Poly r(one_);
    if (is_zero(s)) return r;
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
  }

  /// Multiplies by the monomial c * x^shift.
  Poly shifted(const Exp& shift, const R& c) const {
    Poly r(one_);
    for (const auto& [e, v] : terms_) {
      Exp s;
      for (std::size_t k = 0; k < N; ++k) s[k] = e[k] + shift[k];
      r.add_term(s, v * c);
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Total order for use as a map key: compares term sequences in grlex order.
  friend bool operator<(const Poly& a, const Poly& b) {
    return std::lexicographical_compare(
        a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
        [](const auto& x, const auto& y) {
          if (x.first != y.first) return GrlexGreater<N>{}(x.first, y.first);
          return x.second < y.second;
        });
  }

 private:
  R one_;
  Terms terms_;
};

template <class R>
using BiPoly = Poly<R, 2>;

template <class R, std::size_t N>
bool is_zero(const Poly<R, N>& f) {
  return f.zero();
}
template <class R, std::size_t N>
Poly<R, N> zero_like(const Poly<R, N>& f) {
  return Poly<R, N>(f.unit());
}
template <class R, std::size_t N>
Poly<R, N> one_like(const Poly<R, N>& f) {
  return Poly<R, N>::constant(f.unit());
}
template <class R, std::size_t N>
Poly<R, N> from_int_like(const Poly<R, N>& f, long long n) {
  return Poly<R, N>::constant(from_int_like(f.unit(), n));
}
template <class R, std::size_t N>
unsigned characteristic(const Poly<R, N>& f) {
  return characteristic(f.unit());
}

/// Formal partial derivative with respect to variable k.
template <class R, std::size_t N>
Poly<R, N> partial_derivative(const Poly<R, N>& f, std::size_t k) {
  Poly<R, N> r(f.unit());
  for (const auto& [e, c] : f.terms()) {
    if (e[k] == 0) continue;
    auto d = e;
    --d[k];
    r.add_term(d, c * from_int_like(c, e[k]));
  }
  return r;
}

/// Evaluates f at a point; powers of each coordinate are tabulated once.
template <class R, std::size_t N>
R evaluate(const Poly<R, N>& f, const std::array<R, N>& point) {
  std::array<std::vector<R>, N> powers;
  for (std::size_t k = 0; k < N; ++k) {
    const int dk = std::max(f.degree_in(k), 0);
    powers[k].reserve(dk + 1);
    powers[k].push_back(one_like(point[k]));
    for (int i = 1; i <= dk; ++i) powers[k].push_back(powers[k].back() * point[k]);
  }
  R acc = zero_like(point[0]);
  for (const auto& [e, c] : f.terms()) {
    R t = c;
    for (std::size_t k = 0; k < N; ++k) t = t * powers[k][e[k]];
    acc = acc + t;
  }
  return acc;
}

template <class R>
R evaluate(const BiPoly<R>& f, const R& a, const R& b) {
  return evaluate(f, std::array<R, 2>{a, b});
}

/// Composition f(g_0, ..., g_{N-1}) with each g_k a polynomial in M variables.
template <class R, std::size_t N, std::size_t M>
Poly<R, M> substitute(const Poly<R, N>& f, const std::array<Poly<R, M>, N>& g) {
  std::array<std::vector<Poly<R, M>>, N> powers;
  for (std::size_t k = 0; k < N; ++k) {
    const int dk = std::max(f.degree_in(k), 0);
    powers[k].push_back(Poly<R, M>::constant(f.unit()));
    for (int i = 1; i <= dk; ++i) powers[k].push_back(powers[k].back() * g[k]);
  }
  Poly<R, M> acc(f.unit());
  for (const auto& [e, c] : f.terms()) {
    Poly<R, M> t = Poly<R, M>::constant(c);
    for (std::size_t k = 0; k < N; ++k)
      if (e[k] > 0) t = t * powers[k][e[k]];
    acc += t;
  }
  return acc;
}

/// Applies fn to every coefficient; fn must map into a ring S given by `unit`.
template <class S, class R, std::size_t N, class Fn>
Poly<S, N> map_coefficients(const Poly<R, N>& f, const S& unit, Fn&& fn) {
  Poly<S, N> r(unit);
  for (const auto& [e, c] : f.terms()) r.add_term(e, fn(c));
  return r;
}

/// Quotient f / g when g divides f exactly; throws InexactDivision otherwise.
/// Grlex leading terms: if g | f, the leading term of every remainder is
/// divisible by the leading term of g.
template <class R, std::size_t N>
  requires is_field_v<R>
Poly<R, N> exact_divide(const Poly<R, N>& f, const Poly<R, N>& g) {
  if (g.zero()) throw DivisionByZero();
  const auto& [lg_exp, lg_coeff] = g.leading();
  const R lead_inv = inverse(lg_coeff);
  Poly<R, N> quotient(f.unit());
  Poly<R, N> rest = f;
  while (!rest.zero()) {
    const auto& [le, lc] = rest.leading();
    Exponent<N> shift;
    for (std::size_t k = 0; k < N; ++k) {
      shift[k] = le[k] - lg_exp[k];
      if (shift[k] < 0) throw InexactDivision("polynomial division leaves a remainder");
    }
    const R factor = lc * lead_inv;
    quotient.add_term(shift, factor);
    rest -= g.shifted(shift, factor);
  }
  return quotient;
}

/// Names used when printing or parsing a polynomial.
template <std::size_t N>
using VarNames = std::array<std::string_view, N>;

inline constexpr VarNames<2> kShiftedVars{"xt", "yt"};
inline constexpr VarNames<2> kCentralVars{"z1", "z2"};

template <class R, std::size_t N>
std::string to_string(const Poly<R, N>& f, const VarNames<N>& names) {
  if (f.zero()) return "0";
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    std::string mono;
    for (std::size_t k = 0; k < N; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[k];
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    append_term(out, c, mono);
  }
  return out;
}

template <class R, std::size_t N>
std::string to_string(const Poly<R, N>& f) {
  VarNames<N> names;
  static const std::array<std::string, 8> generic{"v0", "v1", "v2", "v3", "v4", "v5", "v6", "v7"};
  for (std::size_t k = 0; k < N; ++k) names[k] = generic[k];
  if constexpr (N == 2) names = kCentralVars;
  return to_string(f, names);
}

template <class R, std::size_t N>
std::ostream& operator<<(std::ostream& os, const Poly<R, N>& f) {
  return os << to_string(f);
}

// ---------------------------------------------------------------------------
// Grid evaluation and interpolation for bivariate polynomials over a field.

template <class R>
struct Grid {
  std::vector<R> xs;
  std::vector<R> ys;
  /// values[i][j] = f(xs[i], ys[j]).
  std::vector<std::vector<R>> values;
};

template <class R>
Grid<R> evaluate_grid(const BiPoly<R>& f, std::vector<R> xs, std::vector<R> ys) {
  Grid<R> g{std::move(xs), std::move(ys), {}};
  g.values.resize(g.xs.size());
  for (std::size_t i = 0; i < g.xs.size(); ++i) {
    g.values[i].reserve(g.ys.size());
    for (const auto& y : g.ys) g.values[i].push_back(evaluate(f, g.xs[i], y));
  }
  return g;
}

namespace detail {

// Coefficients (low to high) of the unique polynomial of degree <= n-1 through
// (points[i], values[i]), i < n, via barycentric weights and the master
// polynomial prod (t - x_i). O(n^2) field operations.
template <class R>
std::vector<R> lagrange_coefficients(const std::vector<R>& points, const std::vector<R>& values,
                                     std::size_t n) {
  const R zero = zero_like(points[0]);
  const R one = one_like(points[0]);
  std::vector<R> master(n + 1, zero);
  master[0] = one;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k > 0; --k) master[k] = master[k - 1] - points[i] * master[k];
    master[0] = -(points[i] * master[0]);
  }
  std::vector<R> result(n, zero);
  std::vector<R> basis(n, zero);
  for (std::size_t i = 0; i < n; ++i) {
    R weight = one;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) weight = weight * (points[i] - points[j]);
    const R scale = values[i] / weight;
    if (is_zero(scale)) continue;
    // master / (t - x_i) by synthetic division.
    R carry = master[n];
    for (std::size_t k = n; k-- > 0;) {
      basis[k] = carry;
      carry = master[k] + points[i] * carry;
    }
    for (std::size_t k = 0; k < n; ++k) result[k] = result[k] + scale * basis[k];
  }
  return result;
}

template <class R>
void require_distinct(const std::vector<R>& points, const char* axis) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw Error(std::string("interpolation points repeat on the ") + axis + " axis");
}

}  // namespace detail

/// The unique f with deg_x f <= d1, deg_y f <= d2 matching every grid value.
/// Uses the first d1+1 (d2+1) points per axis and verifies any extra ones.
template <class R>
  requires is_field_v<R>
BiPoly<R> interpolate_grid(const Grid<R>& grid, int d1, int d2) {
  if (d1 < 0 || d2 < 0) throw Error("degree bounds must be nonnegative");
  const std::size_t n1 = static_cast<std::size_t>(d1) + 1, n2 = static_cast<std::size_t>(d2) + 1;
  if (grid.xs.size() < n1 || grid.ys.size() < n2)
    throw Error("interpolation needs at least " + std::to_string(n1) + "x" + std::to_string(n2) +
                " points, got " + std::to_string(grid.xs.size()) + "x" +
                std::to_string(grid.ys.size()));
  detail::require_distinct(grid.xs, "first");
  detail::require_distinct(grid.ys, "second");

  // Interpolate along y for each x, then along x for each y-coefficient.
  std::vector<std::vector<R>> along_y(n1);
  for (std::size_t i = 0; i < n1; ++i)
    along_y[i] = detail::lagrange_coefficients(grid.ys, grid.values[i], n2);

  BiPoly<R> f(grid.xs[0]);
  std::vector<R> column(n1, zero_like(grid.xs[0]));
  for (std::size_t j = 0; j < n2; ++j) {
    for (std::size_t i = 0; i < n1; ++i) column[i] = along_y[i][j];
    const auto cx = detail::lagrange_coefficients(grid.xs, column, n1);
    for (std::size_t i = 0; i < n1; ++i)
      f.add_term({static_cast<int>(i), static_cast<int>(j)}, cx[i]);
  }

  for (std::size_t i = 0; i < grid.xs.size(); ++i)
    for (std::size_t j = 0; j < grid.ys.size(); ++j)
      if ((i >= n1 || j >= n2) && !(evaluate(f, grid.xs[i], grid.ys[j]) == grid.values[i][j]))
        throw Error("grid values are not those of a polynomial within the degree bounds");
  return f;
}

}  // namespace weylcurve
