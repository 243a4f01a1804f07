#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "weylcurve/oracles.hpp"
#include "weylcurve/poly_parse.hpp"
#include "weylcurve/random.hpp"

using namespace weylcurve;

namespace {

/// Curve of a degree-1 operator a*x + b*y + c at p = 2, from the explicit
/// 2x2 matrix (a xt + b yt + c, b; a, a xt + b yt + c) and Leibniz.
PlaneCurve degree_one_curve_p2(const FieldElem& a, const FieldElem& b, const FieldElem& c) {
  const auto& f = a.field();
  using Q = BiPoly<FieldElem>;
  const Q xt = Q::variable(f.one(), 0), yt = Q::variable(f.one(), 1);
  const Q diag = xt.scaled(a) + yt.scaled(b) + Q::constant(c);
  auto m = Matrix<Q>::zeros(2, 2, Q::constant(f.one()));
  m(0, 0) = diag;
  m(1, 1) = diag;
  m(0, 1) = Q::constant(b);
  m(1, 0) = Q::constant(a);
  const Q raw = oracle::leibniz_det(m);
  Q central(f.one());
  for (const auto& [e, v] : raw.terms()) central.add_term({e[0] / 2, e[1] / 2}, v);
  return PlaneCurve(central, 1);
}

}  // namespace

TEST(DetSumExpansion, MatchesDeterminantOfSum) {
  Rng rng(61);
  for (unsigned p : {2u, 3u}) {
    const auto& f = GaloisField::get(p);
    for (int s = 0; s < 30; ++s) {
      const std::size_t n = 1 + uniform_below(rng, 3), m = 1 + uniform_below(rng, 3);
      std::vector<Matrix<FieldElem>> summands;
      auto sum = Matrix<FieldElem>::zeros(n, n, f.one());
      for (std::size_t k = 0; k < m; ++k) {
        summands.push_back(random_matrix(f, n, rng));
        sum += summands.back();
      }
      EXPECT_EQ(det_sum_expansion(summands), oracle::leibniz_det(sum));
    }
  }
}

TEST(DetSumExpansion, EdgeCases) {
  const auto& f = GaloisField::get(3);
  Rng rng(62);
  const auto a = random_matrix(f, 3, rng);
  EXPECT_EQ(det_sum_expansion(std::vector{a}), det_gauss(a));
  const auto z = Matrix<FieldElem>::zeros(2, 2, f.one());
  EXPECT_TRUE(det_sum_expansion(std::vector{z, z, z}).is_zero());
  EXPECT_THROW(det_sum_expansion(std::vector{a, z}), SizeMismatch);
  EXPECT_THROW(det_sum_expansion(std::vector<Matrix<FieldElem>>(3, a), 10), CapExceeded);
}

TEST(ImageStudy, DegreeOneOverF2MatchesHandOracle) {
  const auto& f = GaloisField::get(2);
  std::set<PlaneCurve> expected;
  for (const auto& a : f.elements())
    for (const auto& b : f.elements())
      for (const auto& c : f.elements())
        if (!(a.is_zero() && b.is_zero() && c.is_zero())) expected.insert(degree_one_curve_p2(a, b, c));
  const auto study = image_study(2, 1, 1);
  EXPECT_EQ(study.domain_size, 7u);
  EXPECT_EQ(study.target_size, 7u);
  std::set<PlaneCurve> got;
  for (const auto& [curve, size] : study.fibers) got.insert(curve);
  EXPECT_EQ(got, expected);
  // Frozen from the enumeration above: every F_2-rational line is hit once.
  EXPECT_DOUBLE_EQ(study.coverage(), 1.0);
  EXPECT_EQ(study.histogram, (std::map<std::uint64_t, std::uint64_t>{{1, 7}}));
}

TEST(ImageStudy, DegreeZero) {
  const auto study = image_study(2, 1, 0);
  EXPECT_EQ(study.domain_size, 1u);
  EXPECT_EQ(study.image_size(), 1u);
  EXPECT_DOUBLE_EQ(study.coverage(), 1.0);
  EXPECT_EQ(to_string(study.fibers.begin()->first), "1");
}

TEST(ImageStudy, FibersPartitionDomain) {
  for (const auto& [p, m, d] : {std::tuple{2u, 1u, 1}, {2u, 2u, 1}, {3u, 1u, 1}, {2u, 1u, 2}, {3u, 1u, 2}}) {
    const auto s = image_study(p, m, d);
    std::uint64_t total = 0, from_hist = 0;
    for (const auto& [curve, size] : s.fibers) {
      total += size;
      EXPECT_EQ(curve.layer(), d);
    }
    for (const auto& [size, count] : s.histogram) from_hist += size * count;
    EXPECT_EQ(total, s.domain_size);
    EXPECT_EQ(from_hist, s.domain_size);
    EXPECT_GE(s.coverage(), 0.0);
    EXPECT_LE(s.coverage(), 1.0);
  }
}

TEST(ImageStudy, ExtensionContainsBaseImage) {
  for (int d : {1, 2}) {
    const auto base = image_study(2, 1, d);
    const auto ext = image_study(2, 2, d);
    EXPECT_TRUE(missing_after_extension(base, ext).empty());
    EXPECT_GE(rational_coverage(ext), base.coverage());
  }
}

TEST(ImageStudy, InterpolationStrategyGivesSameImageAtP3D2) {
  // Independent determinant route for every class of the layer.
  const auto study = image_study(3, 1, 2);
  const auto layer = layer_points(2, 3, 1);
  std::map<PlaneCurve, std::uint64_t> fibers;
  for (std::uint64_t k = 0; k < layer.size(); ++k) {
    const auto c = layer.at(k);
    ++fibers[PlaneCurve(pdet_interp(c.representative()).central, 2)];
  }
  EXPECT_EQ(fibers, study.fibers);
  // Frozen regression values from the enumeration.
  EXPECT_EQ(study.domain_size, 364u);
  EXPECT_EQ(study.image_size(), 256u);
  EXPECT_EQ(study.histogram, (std::map<std::uint64_t, std::uint64_t>{{1, 202}, {3, 54}}));
}

TEST(Fiber, MonomialCurve) {
  const auto& f = GaloisField::get(2);
  const PlaneCurve z1(parse_poly("z1", f.one(), kCentralVars), 1);
  const auto classes = fiber(z1, 1);
  ASSERT_FALSE(classes.empty());
  EXPECT_NE(std::find(classes.begin(), classes.end(), OperatorClass(parse_op("x", f), 1)), classes.end());
  for (const auto& c : classes) EXPECT_EQ(theta(c), z1);
}

TEST(Fiber, SizesSumToDomain) {
  const auto study = image_study(2, 1, 1);
  std::uint64_t total = 0;
  for (const auto& [curve, size] : study.fibers) {
    const auto classes = fiber(curve, 1);
    EXPECT_EQ(classes.size(), size);
    total += classes.size();
  }
  EXPECT_EQ(total, 7u);
}

TEST(Fiber, HigherDegreeCurveHasEmptyFiber) {
  const auto& f = GaloisField::get(2);
  const PlaneCurve c(parse_poly("z1^2 + z2", f.one(), kCentralVars), 2);
  EXPECT_TRUE(fiber(c, 1).empty());
}

TEST(Jacobian, DegreeZeroHasRankZero) {
  for (unsigned p : {2u, 3u, 5u}) {
    const auto& f = GaloisField::get(p);
    const auto r = jacobian_rank(Operator::constant(f.from_int(1)), 0);
    EXPECT_EQ(r.dimension, 1);
    EXPECT_EQ(r.affine, 0);
    EXPECT_EQ(r.projective, 0);
  }
}

TEST(Jacobian, BoundsAndScalingInvariance) {
  Rng rng(63);
  for (unsigned p : {2u, 3u}) {
    const auto& f = GaloisField::get(p);
    for (int s = 0; s < 15; ++s) {
      const Operator L = random_operator(f, 1, rng);
      const auto r = jacobian_rank(L, 1);
      EXPECT_EQ(r.dimension, 3);
      EXPECT_LE(r.affine, 3);
      EXPECT_GE(r.projective, 0);
      EXPECT_LE(r.projective, 2);
      const auto scaled = jacobian_rank(L.scaled(random_nonzero(f, rng)), 1);
      EXPECT_EQ(scaled.affine, r.affine);
      EXPECT_EQ(scaled.projective, r.projective);
    }
  }
  EXPECT_THROW(jacobian_rank(parse_op("x^2", GaloisField::get(3)), 1), Error);
}

TEST(Jacobian, DegreeOneAtP2ByHand) {
  // Central map (a, b, c) -> (a^2, b^2, c^2 + ab). Squares have zero
  // derivative in characteristic 2, so J = (0 0 0; 0 0 0; b a 0).
  const auto& f = GaloisField::get(2);
  const auto r = jacobian_rank(parse_op("x + y + 1", f), 1);
  EXPECT_EQ(r.affine, 1);
  EXPECT_EQ(r.projective, 1);
  EXPECT_EQ(jacobian_rank(parse_op("1", f), 1).affine, 0);
}

TEST(Family, ShiftFamilyHasTwoClasses) {
  const auto& f = GaloisField::get(2);
  const auto report = family_image(parse_family("x + t", f), 2);
  EXPECT_EQ(report.layer, 1);
  ASSERT_EQ(report.curves.size(), 2u);
  EXPECT_EQ(to_string(*report.curves[0]), "z1");
  EXPECT_EQ(to_string(*report.curves[1]), "z1 + 1");
  EXPECT_TRUE(report.nondegenerate());
}

TEST(Family, DegenerateFamiliesRejected) {
  const auto& f = GaloisField::get(5);
  EXPECT_THROW(family_image(parse_family("t*x", f), 5), DegenerateFamily);
  EXPECT_THROW(family_image(parse_family("x + 2*y", f), 5), DegenerateFamily);
  EXPECT_THROW(family_image(parse_family("(t + 1)*x + (2*t + 2)*y", f), 5), DegenerateFamily);
  EXPECT_THROW(family_image(parse_family("x + t", f), 6), Error);
}

TEST(Family, SkipsVanishingSamples) {
  const auto& f = GaloisField::get(3);
  const auto report = family_image(parse_family("t*x + t^2", f), 3);
  ASSERT_EQ(report.skipped.size(), 1u);
  EXPECT_TRUE(report.skipped[0].is_zero());
  EXPECT_FALSE(report.curves[0].has_value());
  for (const auto& c : report.distinct) EXPECT_EQ(c.layer(), report.layer);
}

TEST(Family, RandomFamiliesStayInLayer) {
  Rng rng(64);
  const auto& f = GaloisField::get(5);
  for (int s = 0; s < 20; ++s) {
    const auto family = random_family(f, 2, 2, rng);
    try {
      const auto report = family_image(family, 5);
      for (const auto& c : report.distinct) {
        EXPECT_EQ(c.layer(), report.layer);
        EXPECT_LE(c.representative().degree(), report.layer);
      }
    } catch (const DegenerateFamily&) {
    }
  }
}
