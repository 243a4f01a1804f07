#pragma once

// Recursive-descent parser for polynomial-style expressions, shared by every
// text format in the library:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (['*'] power)*          juxtaposition multiplies
//   power  := atom ['^' integer]
//   atom   := integer | '[' integer (',' integer)* ']' | symbol | '(' expr ')'
//
// What the atoms mean and how products are formed is supplied by an algebra
// policy, so the same grammar yields commutative polynomials or normally
// ordered Weyl-algebra operators (where "y*x" is evaluated as y times x).

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "weylcurve/error.hpp"

namespace weylcurve {

/// An algebra policy A provides
///   using Value;
///   Value integer(long long) const;
///   Value residues(const std::vector<long long>&) const;
///   const std::vector<std::string>& symbols() const;
///   Value symbol(std::size_t index) const;
///   Value add(const Value&, const Value&) const;   // likewise sub, mul
///   Value neg(const Value&) const;
template <class Algebra>
class ExpressionParser {
 public:
  using Value = typename Algebra::Value;

  ExpressionParser(std::string_view text, const Algebra& algebra)
      : text_(text), algebra_(algebra) {}

  Value parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Value v = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return v;
  }

 private:
  static constexpr int kMaxExponent = 100000;

  Value expr() {
    skip_space();
    bool negate = false;
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    Value acc = term();
    if (negate) acc = algebra_.neg(acc);
    while (true) {
      skip_space();
      if (peek('+')) {
        ++pos_;
        acc = algebra_.add(acc, term());
      } else if (peek('-')) {
        ++pos_;
        acc = algebra_.sub(acc, term());
      } else {
        return acc;
      }
    }
  }

  Value term() {
    Value acc = power();
    while (true) {
      skip_space();
      if (peek('*')) {
        ++pos_;
        acc = algebra_.mul(acc, power());
      } else if (starts_atom()) {
        acc = algebra_.mul(acc, power());
      } else {
        return acc;
      }
    }
  }

  Value power() {
    Value base = atom();
    skip_space();
    if (!peek('^')) return base;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    const long long e = integer();
    if (e < 0 || e > kMaxExponent) fail_at("exponent out of range", start);
    if (e == 0) return algebra_.integer(1);
    Value result = base;
    for (long long k = 1; k < e; ++k) result = algebra_.mul(result, base);
    return result;
  }

  Value atom() {
    skip_space();
    if (at_end()) fail("expected a term");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return algebra_.integer(integer());
    if (c == '(') {
      ++pos_;
      Value v = expr();
      skip_space();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == '[') {
      ++pos_;
      std::vector<long long> values;
      while (true) {
        skip_space();
        bool negative = false;
        if (peek('-')) {
          negative = true;
          ++pos_;
        }
        const long long v = integer();
        values.push_back(negative ? -v : v);
        skip_space();
        if (peek(',')) {
          ++pos_;
          continue;
        }
        if (peek(']')) {
          ++pos_;
          break;
        }
        fail("expected ',' or ']' in residue vector");
      }
      return algebra_.residues(values);
    }
    const auto& symbols = algebra_.symbols();
    std::size_t best = symbols.size(), best_len = 0;
    for (std::size_t k = 0; k < symbols.size(); ++k) {
      const auto& s = symbols[k];
      if (s.size() > best_len && text_.substr(pos_, s.size()) == s) {
        best = k;
        best_len = s.size();
      }
    }
    if (best == symbols.size()) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
      if (end == pos_) fail(std::string("unexpected '") + c + "'");
      fail("unknown symbol '" + std::string(text_.substr(pos_, end - pos_)) + "'");
    }
    pos_ += best_len;
    return algebra_.symbol(best);
  }

  long long integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc{}) fail_at("integer out of range", start);
    return v;
  }

  bool starts_atom() const {
    if (at_end()) return false;
    const unsigned char c = static_cast<unsigned char>(text_[pos_]);
    return std::isalnum(c) || c == '(' || c == '[';
  }
  bool peek(char c) const { return !at_end() && text_[pos_] == c; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
    throw ParseError(message, at);
  }

  std::string_view text_;
  const Algebra& algebra_;
  std::size_t pos_ = 0;
};

template <class Algebra>
typename Algebra::Value parse_expression(std::string_view text, const Algebra& algebra) {
  return ExpressionParser<Algebra>(text, algebra).parse();
}

}  // namespace weylcurve
