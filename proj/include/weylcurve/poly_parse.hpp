#pragma once

// Text input for commutative polynomials, e.g. "z1^2 + [1,1]*z2 - 3".

#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "weylcurve/ffield.hpp"
#include "weylcurve/parse.hpp"
#include "weylcurve/poly.hpp"

namespace weylcurve {

template <class R, std::size_t N>
class PolyAlgebra {
 public:
  using Value = Poly<R, N>;

  PolyAlgebra(const R& unit, const VarNames<N>& names) : unit_(unit) {
    for (const auto& n : names) symbols_.emplace_back(n);
  }

  Value integer(long long n) const { return Value::constant(from_int_like(unit_, n)); }
  Value residues(const std::vector<long long>& values) const {
    if constexpr (std::is_same_v<R, FieldElem>) {
      std::vector<unsigned> r;
      for (long long v : values) r.push_back(unit_.field().from_int(v).code());
      return Value::constant(unit_.field().from_residues(r));
    } else {
      throw ParseError("residue vectors need a finite-field coefficient ring", 0);
    }
  }
  const std::vector<std::string>& symbols() const { return symbols_; }
  Value symbol(std::size_t k) const { return Value::variable(unit_, k); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }

 private:
  R unit_;
  std::vector<std::string> symbols_;
};

template <class R, std::size_t N>
Poly<R, N> parse_poly(std::string_view text, const R& unit, const VarNames<N>& names) {
  const PolyAlgebra<R, N> algebra(one_like(unit), names);
  return parse_expression(text, algebra);
}

/// Splits "f, g" at commas outside brackets and parentheses.
inline std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

}  // namespace weylcurve
