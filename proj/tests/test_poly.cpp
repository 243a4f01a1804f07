#include <gtest/gtest.h>

#include "support.hpp"
#include "weylcurve/dual.hpp"
#include "weylcurve/poly.hpp"
#include "weylcurve/poly_parse.hpp"
#include "weylcurve/random.hpp"
#include "weylcurve/resultant.hpp"
#include "weylcurve/unipoly.hpp"

using namespace weylcurve;

namespace {

BiPoly<FieldElem> random_bipoly(const GaloisField& f, int max_degree, Rng& rng) {
  BiPoly<FieldElem> out(f.one());
  for (int t = 0; t <= max_degree; ++t)
    for (int i = 0; i <= t; ++i)
      if (uniform_below(rng, 2)) out.add_term({i, t - i}, random_elem(f, rng));
  return out;
}

BiPoly<FieldElem> P(std::string_view text, const GaloisField& f) {
  return parse_poly(text, f.one(), kCentralVars);
}

}  // namespace

TEST(Poly, GrlexOrderLeadingTerm) {
  const auto& f = GaloisField::get(5);
  const auto p = P("z2^3 + z1*z2^2 + z1^2*z2 + z1 + 4", f);
  EXPECT_EQ(p.leading().first, (Exponent<2>{2, 1}));
  EXPECT_EQ(to_string(p), "z1^2*z2 + z1*z2^2 + z2^3 + z1 + 4");
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.degree_in(0), 2);
  EXPECT_THROW(BiPoly<FieldElem>(f.one()).leading(), ZeroInput);
  EXPECT_EQ(BiPoly<FieldElem>(f.one()).degree(), kZeroDegree);
}

TEST(Poly, RingAxiomsRandom) {
  Rng rng(11);
  const auto& f = GaloisField::get(3, 2);
  for (int s = 0; s < 100; ++s) {
    const auto a = random_bipoly(f, 3, rng), b = random_bipoly(f, 3, rng), c = random_bipoly(f, 2, rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).zero());
    if (!a.zero() && !b.zero()) EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
  }
}

TEST(Poly, EvaluationIsHomomorphism) {
  Rng rng(12);
  const auto& f = GaloisField::get(7);
  for (int s = 0; s < 100; ++s) {
    const auto a = random_bipoly(f, 3, rng), b = random_bipoly(f, 3, rng);
    const FieldElem u = random_elem(f, rng), v = random_elem(f, rng);
    EXPECT_EQ(evaluate(a * b, u, v), evaluate(a, u, v) * evaluate(b, u, v));
    EXPECT_EQ(evaluate(a + b, u, v), evaluate(a, u, v) + evaluate(b, u, v));
  }
}

TEST(Poly, DerivativeInCharacteristicP) {
  const auto& f = GaloisField::get(3);
  EXPECT_TRUE(partial_derivative(P("z1^3 + z2^6", f), 0).zero());
  EXPECT_EQ(partial_derivative(P("z1^2*z2 + z1", f), 0), P("2*z1*z2 + 1", f));
  Rng rng(13);
  for (int s = 0; s < 50; ++s) {
    const auto a = random_bipoly(f, 3, rng), b = random_bipoly(f, 3, rng);
    EXPECT_EQ(partial_derivative(a * b, 1),
              partial_derivative(a, 1) * b + a * partial_derivative(b, 1));
  }
}

TEST(Poly, SubstituteComposesEvaluation) {
  Rng rng(14);
  const auto& f = GaloisField::get(5);
  for (int s = 0; s < 50; ++s) {
    const auto a = random_bipoly(f, 2, rng);
    const std::array<BiPoly<FieldElem>, 2> g{random_bipoly(f, 2, rng), random_bipoly(f, 2, rng)};
    const FieldElem u = random_elem(f, rng), v = random_elem(f, rng);
    EXPECT_EQ(evaluate(substitute(a, g), u, v), evaluate(a, evaluate(g[0], u, v), evaluate(g[1], u, v)));
  }
}

TEST(Poly, ExactDivision) {
  Rng rng(15);
  const auto& f = GaloisField::get(5);
  for (int s = 0; s < 50; ++s) {
    const auto a = random_bipoly(f, 3, rng), b = random_bipoly(f, 2, rng);
    if (b.zero()) continue;
    EXPECT_EQ(exact_divide(a * b, b), a);
  }
  EXPECT_THROW(exact_divide(P("z1 + 1", f), P("z2", f)), InexactDivision);
  EXPECT_THROW(exact_divide(P("z1", f), BiPoly<FieldElem>(f.one())), DivisionByZero);
}

TEST(Poly, ParseFormatRoundTrip) {
  Rng rng(16);
  for (const auto& [p, m] : {std::pair{2u, 1u}, {3u, 2u}, {5u, 1u}}) {
    const auto& f = GaloisField::get(p, m);
    for (int s = 0; s < 50; ++s) {
      const auto a = random_bipoly(f, 4, rng);
      EXPECT_EQ(P(to_string(a), f), a) << to_string(a);
    }
  }
}

TEST(Poly, ParseErrors) {
  const auto& f = GaloisField::get(5);
  EXPECT_THROW(P("z1 +", f), ParseError);
  EXPECT_THROW(P("z3", f), ParseError);
  EXPECT_THROW(P("(z1", f), ParseError);
  EXPECT_THROW(P("", f), ParseError);
  try {
    P("z1 + q", f);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(Poly, InterpolationRecoversPolynomial) {
  Rng rng(17);
  const auto& f = GaloisField::get(2, 4);
  for (int s = 0; s < 20; ++s) {
    const auto a = random_bipoly(f, 5, rng);
    std::vector<FieldElem> xs, ys;
    for (std::uint32_t k = 0; k < 7; ++k) {
      xs.push_back(f.element(k));
      ys.push_back(f.element(k + 3));
    }
    const auto grid = evaluate_grid(a, xs, ys);
    EXPECT_EQ(interpolate_grid(grid, 5, 5), a);
  }
}

TEST(Poly, InterpolationNeedsEnoughDistinctPoints) {
  const auto& f = GaloisField::get(5);
  const auto a = P("z1^3", f);
  const std::vector<FieldElem> xs{f.element(0), f.element(1), f.element(2)};
  EXPECT_THROW(interpolate_grid(evaluate_grid(a, xs, xs), 3, 3), Error);
  const std::vector<FieldElem> dup{f.element(0), f.element(0), f.element(1), f.element(2)};
  EXPECT_THROW(interpolate_grid(evaluate_grid(a, dup, dup), 3, 3), Error);
}

TEST(UniPoly, ArithmeticAndEvaluation) {
  const auto& f = GaloisField::get(5);
  using U = UniPoly<FieldElem>;
  const U t = U::variable(f.one());
  const U a = t * t + U::constant(f.from_int(3));
  EXPECT_EQ(a.degree(), 2);
  EXPECT_EQ(a.evaluate(f.from_int(2)), f.from_int(2));  // 4 + 3 = 7 = 2
  EXPECT_EQ(to_string(a), "t^2 + 3");
  EXPECT_TRUE((a - a).zero());
  EXPECT_EQ(exact_divide(a * t, t), a);
}

TEST(Dual, DerivativeOfPolynomial) {
  const auto& f = GaloisField::get(7);
  using D = Dual<FieldElem>;
  // f(x) = x^3 + 2x at x = 3: value 33 = 5, derivative 3*9 + 2 = 29 = 1
  const D x(f.from_int(3), f.one());
  const D y = x * x * x + D(f.from_int(2)) * x;
  EXPECT_EQ(y.value, f.from_int(5));
  EXPECT_EQ(y.eps, f.from_int(1));
  EXPECT_EQ(inverse(x) * x, D(f.one()));
  EXPECT_THROW(inverse(D(f.zero(), f.one())), DivisionByZero);
}

TEST(Resultant, KnownValues) {
  const auto& f = GaloisField::get(7);
  // Res(y - a, y - b, y) = a - b; Res(y^2 - x, y - x, y) = x^2 - x
  const auto r1 = resultant(P("z2 - 3", f), P("z2 - 5", f), 1);
  EXPECT_EQ(r1, P("-2", f));
  const auto r2 = resultant(P("z2^2 - z1", f), P("z2 - z1", f), 1);
  EXPECT_EQ(r2, P("z1^2 - z1", f));
  EXPECT_THROW(resultant(P("z1", f), P("z1 + 1", f), 1), Error);
  EXPECT_THROW(resultant(BiPoly<FieldElem>(f.one()), P("z2", f), 1), ZeroInput);
}

TEST(Resultant, VanishesExactlyAtCommonRoots) {
  // Over F_p with f, g monic in z2: Res(x0) = 0 iff f(x0, .) and g(x0, .)
  // share a root in the algebraic closure. Brute-force check on F_p roots:
  // a common F_p root forces the resultant to vanish.
  Rng rng(18);
  const auto& f = GaloisField::get(5);
  for (int s = 0; s < 50; ++s) {
    auto a = random_bipoly(f, 1, rng) + P("z2^2", f);
    auto b = random_bipoly(f, 1, rng) + P("z2^2", f);
    const auto r = resultant(a, b, 1);
    for (const auto& x0 : f.elements()) {
      bool common = false;
      for (const auto& y0 : f.elements())
        if (evaluate(a, x0, y0).is_zero() && evaluate(b, x0, y0).is_zero()) common = true;
      if (common) EXPECT_TRUE(evaluate(r, x0, f.zero()).is_zero());
    }
  }
}
