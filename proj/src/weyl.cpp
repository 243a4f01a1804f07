#include "weylcurve/weyl.hpp"

namespace weylcurve {

unsigned binomial_mod(std::uint64_t n, std::uint64_t k, unsigned p) {
  if (k > n) return 0;
  // Lucas: C(n, k) = prod C(n_i, k_i) over base-p digits.
  std::uint64_t result = 1;
  while (k > 0 || n > 0) {
    const unsigned ni = static_cast<unsigned>(n % p), ki = static_cast<unsigned>(k % p);
    if (ki > ni) return 0;
    // Small C(ni, ki) with ni < p from a Pascal row mod p.
    std::vector<unsigned> row(ni + 1, 0);
    row[0] = 1;
    for (unsigned r = 1; r <= ni; ++r)
      for (unsigned c = r; c > 0; --c) row[c] = (row[c] + row[c - 1]) % p;
    result = result * row[ki] % p;
    n /= p;
    k /= p;
  }
  return static_cast<unsigned>(result);
}

unsigned factorial_mod(std::uint64_t k, unsigned p) {
  if (k >= p) return 0;
  std::uint64_t r = 1 % p;
  for (std::uint64_t i = 2; i <= k; ++i) r = r * i % p;
  return static_cast<unsigned>(r);
}

namespace {

template <class Coeff>
class WeylAlgebra {
 public:
  using Value = WeylOp<Coeff>;

  WeylAlgebra(const GaloisField& field, Coeff unit, std::vector<std::string> symbols)
      : field_(field), unit_(std::move(unit)), symbols_(std::move(symbols)) {}

  Value integer(long long n) const { return Value::constant(lift(field_.from_int(n))); }
  Value residues(const std::vector<long long>& values) const {
    std::vector<unsigned> r;
    for (long long v : values) r.push_back(field_.from_int(v).code());
    return Value::constant(lift(field_.from_residues(r)));
  }
  const std::vector<std::string>& symbols() const { return symbols_; }
  Value symbol(std::size_t k) const {
    if (k == 0) return Value::x(unit_);
    if (k == 1) return Value::y(unit_);
    if constexpr (std::is_same_v<Coeff, UniPoly<FieldElem>>) {
      return Value::constant(UniPoly<FieldElem>::variable(field_.one()));
    }
    throw Error("unknown symbol index");
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return weyl_mul(a, b); }
  Value neg(const Value& a) const { return -a; }

 private:
  Coeff lift(const FieldElem& c) const {
    if constexpr (std::is_same_v<Coeff, FieldElem>) {
      return c;
    } else {
      return Coeff::constant(c);
    }
  }

  const GaloisField& field_;
  Coeff unit_;
  std::vector<std::string> symbols_;
};

}  // namespace

Operator parse_op(std::string_view text, const GaloisField& field) {
  const WeylAlgebra<FieldElem> algebra(field, field.one(), {"x", "y"});
  return parse_expression(text, algebra);
}

std::string format_op(const Operator& L) { return to_string(L); }

OperatorFamily parse_family(std::string_view text, const GaloisField& field) {
  const WeylAlgebra<UniPoly<FieldElem>> algebra(field, UniPoly<FieldElem>::constant(field.one()),
                                                {"x", "y", "t"});
  return parse_expression(text, algebra);
}

Operator specialize(const OperatorFamily& family, const FieldElem& t) {
  BiPoly<FieldElem> coeffs(t.field().one());
  for (const auto& [e, c] : family.terms()) coeffs.add_term(e, c.evaluate(t));
  return Operator(std::move(coeffs));
}

}  // namespace weylcurve
