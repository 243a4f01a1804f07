#pragma once

// Test-only reference implementations. None of these share code with the
// library routines they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "weylcurve/ffield.hpp"
#include "weylcurve/matrix.hpp"
#include "weylcurve/weyl.hpp"

namespace oracle {

using weylcurve::BiPoly;
using weylcurve::FieldElem;
using weylcurve::GaloisField;
using weylcurve::Matrix;
using weylcurve::Operator;

/// Leibniz formula: sum over permutations of sign * product.
template <class R>
R leibniz_det(const Matrix<R>& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  R total = zero_like(a.unit());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    R prod = one_like(a.unit());
    for (std::size_t i = 0; i < n; ++i) prod = prod * a(i, perm[i]);
    total = inversions % 2 == 0 ? total + prod : total - prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Weyl-algebra product by literal word rewriting yx -> xy + 1, with integer
/// coefficients reduced mod p. Words are strings over {x, y}.
class WordAlgebra {
 public:
  using Element = std::map<std::string, long long>;

  explicit WordAlgebra(unsigned p) : p_(p) {}

  Element from_operator(const Operator& L) const {
    Element e;
    for (const auto& [exp, c] : L.terms())
      add(e, std::string(exp[0], 'x') + std::string(exp[1], 'y'), c.code());
    return e;
  }

  Element multiply(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [wa, ca] : a)
      for (const auto& [wb, cb] : b) add(out, wa + wb, ca * cb % p_);
    return normalize(out);
  }

  /// Rewrites until every word has all x before all y.
  Element normalize(Element e) const {
    while (true) {
      Element next;
      bool changed = false;
      for (const auto& [w, c] : e) {
        const auto pos = w.find("yx");
        if (pos == std::string::npos) {
          add(next, w, c);
          continue;
        }
        changed = true;
        add(next, w.substr(0, pos) + "xy" + w.substr(pos + 2), c);
        add(next, w.substr(0, pos) + w.substr(pos + 2), c);
      }
      e = std::move(next);
      if (!changed) return e;
    }
  }

  Operator to_operator(const Element& e, const GaloisField& field) const {
    Operator L(field.one());
    for (const auto& [w, c] : e) {
      const int i = static_cast<int>(std::count(w.begin(), w.end(), 'x'));
      L.add_term(i, static_cast<int>(w.size()) - i, field.from_int(c));
    }
    return L;
  }

 private:
  void add(Element& e, const std::string& w, long long c) const {
    c %= p_;
    if (c == 0) return;
    long long& slot = e[w];
    slot = (slot + c) % p_;
    if (slot == 0) e.erase(w);
  }

  long long p_;
};

/// Monic polynomials over F_p of degree m as coefficient vectors (low first),
/// in increasing order of sum c_i p^i.
inline std::vector<std::vector<unsigned>> monic_polys(unsigned p, unsigned m) {
  std::vector<std::vector<unsigned>> out;
  std::uint64_t count = 1;
  for (unsigned k = 0; k < m; ++k) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<unsigned> c(m + 1, 0);
    std::uint64_t v = code;
    for (unsigned k = 0; k < m; ++k) {
      c[k] = static_cast<unsigned>(v % p);
      v /= p;
    }
    c[m] = 1;
    out.push_back(c);
  }
  return out;
}

/// Polynomial product over F_p.
inline std::vector<unsigned> poly_mul(const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                                      unsigned p) {
  std::vector<unsigned> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return r;
}

/// Irreducible iff not a product of two monic factors of positive degree.
inline bool brute_irreducible(const std::vector<unsigned>& f, unsigned p) {
  const unsigned m = static_cast<unsigned>(f.size()) - 1;
  for (unsigned k = 1; k <= m / 2; ++k)
    for (const auto& g : monic_polys(p, k))
      for (const auto& h : monic_polys(p, m - k))
        if (poly_mul(g, h, p) == f) return false;
  return true;
}

/// Number of distinct nonzero vectors of length k over F_q up to scaling,
/// by normalizing every nonzero vector and collecting the results.
inline std::size_t brute_projective_count(const GaloisField& field, int k) {
  std::set<std::vector<std::uint32_t>> classes;
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= field.order();
  for (std::uint64_t code = 1; code < total; ++code) {
    std::vector<FieldElem> v;
    std::uint64_t c = code;
    for (int i = 0; i < k; ++i) {
      v.push_back(field.element(static_cast<std::uint32_t>(c % field.order())));
      c /= field.order();
    }
    const auto first = std::find_if(v.begin(), v.end(), [](const FieldElem& a) { return !a.is_zero(); });
    const FieldElem inv = first->inverse();
    std::vector<std::uint32_t> normalized;
    for (const auto& a : v) normalized.push_back((a * inv).code());
    classes.insert(normalized);
  }
  return classes.size();
}

}  // namespace oracle
