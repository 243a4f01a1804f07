#include <gtest/gtest.h>

#include "support.hpp"
#include "weylcurve/dual.hpp"
#include "weylcurve/matrep.hpp"
#include "weylcurve/pdet.hpp"
#include "weylcurve/poly_parse.hpp"
#include "weylcurve/random.hpp"

using namespace weylcurve;

namespace {

BiPoly<FieldElem> raw_poly(std::string_view text, const GaloisField& f) {
  return parse_poly(text, f.one(), kShiftedVars);
}

}  // namespace

TEST(MatrixModel, Relations) {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    const auto& f = GaloisField::get(p);
    const auto x = build_Xp(p, f.one()), y = build_Yp(p, f.one());
    const auto id = PolyMatrix<FieldElem>::identity(p, x.unit());
    const auto zero = PolyMatrix<FieldElem>::zeros(p, p, x.unit());
    EXPECT_EQ(commutator(y, x), id);
    EXPECT_EQ(pow(x, p), zero);
    EXPECT_EQ(pow(y, p), zero);
    for (unsigned k = 1; k < p; ++k)
      EXPECT_EQ(commutator(y, pow(x, k)), pow(x, k - 1).scaled(BiPoly<FieldElem>::constant(f.from_int(k))));
  }
  EXPECT_THROW(build_Xp(4, GaloisField::get(2).one()), Error);
}

TEST(MatrixModel, RepresentIsMultiplicative) {
  Rng rng(41);
  for (unsigned p : {2u, 3u, 5u}) {
    const auto& f = GaloisField::get(p);
    for (int s = 0; s < 20; ++s) {
      const Operator a = random_operator(f, 2, rng), b = random_operator(f, 2, rng);
      EXPECT_EQ(represent(a * b), represent(a) * represent(b));
      EXPECT_EQ(represent(a + b), represent(a) + represent(b));
    }
  }
}

TEST(MatrixModel, CentralElementsAreScalars) {
  const auto& f = GaloisField::get(3);
  const auto unit = BiPoly<FieldElem>::constant(f.one());
  const auto xt3 = raw_poly("xt^3", f), yt3 = raw_poly("yt^3", f);
  EXPECT_EQ(represent(parse_op("x^3", f)), PolyMatrix<FieldElem>::identity(3, unit).scaled(xt3));
  EXPECT_EQ(represent(parse_op("y^3", f)), PolyMatrix<FieldElem>::identity(3, unit).scaled(yt3));
}

TEST(PDet, KnownValues) {
  // x + y at p = 2 is the matrix (xt + yt, 1; 1, xt + yt), whose determinant
  // (xt + yt)^2 - 1 is xt^2 + yt^2 + 1 in characteristic 2.
  const auto& f2 = GaloisField::get(2);
  const auto r = pdet(parse_op("x + y", f2));
  EXPECT_EQ(r.raw, raw_poly("xt^2 + yt^2 + 1", f2));
  EXPECT_EQ(to_string(r.central, kCentralVars), "z1 + z2 + 1");
  const auto& f3 = GaloisField::get(3);
  EXPECT_EQ(to_string(pdet(parse_op("x", f3)).central, kCentralVars), "z1");
  EXPECT_EQ(to_string(pdet(parse_op("2", f3)).central, kCentralVars), "2");
  EXPECT_THROW(pdet(Operator(f3.one())), ZeroInput);
}

TEST(PDet, MonomialLaw) {
  Rng rng(42);
  for (unsigned p : {2u, 3u, 5u}) {
    for (unsigned m : {1u, 2u}) {
      const auto& f = GaloisField::get(p, m);
      for (int s = 0; s < 10; ++s) {
        const Operator L = random_monomial(f, 4, rng);
        const auto lead = leading_monomial(L);
        const auto expected = BiPoly<FieldElem>::monomial(
            pow(lead.coeff, p), {static_cast<int>(p) * lead.i, static_cast<int>(p) * lead.j});
        EXPECT_EQ(pdet(L).raw, expected) << to_string(L);
      }
    }
  }
}

TEST(PDet, CentralityAndLeadingChecksPass) {
  Rng rng(43);
  for (unsigned p : {2u, 3u, 5u}) {
    const auto& f = GaloisField::get(p);
    for (int s = 0; s < 20; ++s) {
      const Operator L = random_operator(f, 4, rng);
      const auto r = pdet(L);
      EXPECT_TRUE(check_centrality(r).passed) << to_string(L);
      EXPECT_TRUE(check_leading(L, r).passed) << to_string(L);
      EXPECT_LE(r.central.degree(), bernstein_degree(L));
    }
  }
}

TEST(PDet, ChecksCatchCorruption) {
  const auto& f = GaloisField::get(3);
  const Operator L = parse_op("x*y + x + 2", f);
  auto r = pdet(L);
  auto broken = r;
  broken.raw.add_term({1, 0}, f.one());
  const auto centrality = check_centrality(broken);
  EXPECT_FALSE(centrality.passed);
  ASSERT_TRUE(centrality.offending_term.has_value());
  EXPECT_EQ(*centrality.offending_term, std::make_pair(1, 0));

  auto wrong_lead = r;
  wrong_lead.central.add_term({1, 1}, f.one());
  EXPECT_FALSE(check_leading(L, wrong_lead).passed);
  EXPECT_THROW(to_central(broken.raw, 3), InvariantViolation);
}

TEST(PDet, StrategiesAgree) {
  Rng rng(44);
  for (const auto& [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {5u, 1u}, {2u, 2u}, {3u, 2u}}) {
    const auto& f = GaloisField::get(p, m);
    for (int s = 0; s < 8; ++s) {
      const Operator L = random_operator(f, 3, rng);
      EXPECT_EQ(pdet_direct(L).raw, pdet_interp(L).raw) << to_string(L);
    }
  }
}

TEST(PDet, DeterminantMethodsAgreeOnModel) {
  Rng rng(45);
  const auto& f = GaloisField::get(5);
  for (int s = 0; s < 5; ++s) {
    const auto a = represent(random_operator(f, 2, rng));
    EXPECT_EQ(det_bareiss(a), det_berkowitz(a));
  }
}

TEST(PDet, ScalingMultipliesByPthPower) {
  Rng rng(46);
  const auto& f = GaloisField::get(3, 2);
  for (int s = 0; s < 10; ++s) {
    const Operator L = random_operator(f, 2, rng);
    const FieldElem c = random_nonzero(f, rng);
    EXPECT_EQ(pdet(L.scaled(c)).central, pdet(L).central.scaled(frobenius(c)));
  }
}

TEST(PDet, DualNumbersMatchSymbolicParameter) {
  // The eps-part of pdet over dual numbers must equal the t-linear part of
  // pdet over F_p[t] for the family L + t * x^i y^j.
  Rng rng(47);
  using D = Dual<FieldElem>;
  using U = UniPoly<FieldElem>;
  for (unsigned p : {2u, 3u, 5u}) {
    const auto& f = GaloisField::get(p);
    for (int s = 0; s < 6; ++s) {
      const Operator L = random_operator(f, 2, rng);
      const Exponent<2> dir{static_cast<int>(uniform_below(rng, 2)), static_cast<int>(uniform_below(rng, 2))};
      BiPoly<D> dual_coeffs(D(f.one()));
      BiPoly<U> family_coeffs(U::constant(f.one()));
      for (const auto& [e, c] : L.terms()) {
        dual_coeffs.add_term(e, D(c));
        family_coeffs.add_term(e, U::constant(c));
      }
      dual_coeffs.add_term(dir, D(f.zero(), f.one()));
      family_coeffs.add_term(dir, U::variable(f.one()));
      const auto dual = pdet_direct(WeylOp<D>(dual_coeffs)).central;
      const auto symbolic = pdet_direct(WeylOp<U>(family_coeffs)).central;
      BiPoly<FieldElem> value(f.one()), eps(f.one()), t0(f.one()), t1(f.one());
      for (const auto& [e, c] : dual.terms()) {
        value.add_term(e, c.value);
        eps.add_term(e, c.eps);
      }
      for (const auto& [e, c] : symbolic.terms()) {
        t0.add_term(e, c.coeff(0));
        t1.add_term(e, c.coeff(1));
      }
      EXPECT_EQ(value, t0) << to_string(L);
      EXPECT_EQ(eps, t1) << to_string(L);
    }
  }
}

TEST(TraceIdentity, HoldsForRandomOperators) {
  Rng rng(48);
  for (unsigned p : {2u, 3u, 5u}) {
    const auto& f = GaloisField::get(p);
    for (int s = 0; s < 10; ++s) EXPECT_TRUE(check_trace_identity(random_operator(f, 3, rng)));
  }
}
