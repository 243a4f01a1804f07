#include <gtest/gtest.h>

#include "support.hpp"
#include "weylcurve/matrix.hpp"
#include "weylcurve/poly.hpp"
#include "weylcurve/random.hpp"

using namespace weylcurve;

TEST(Matrix, DeterminantsMatchLeibnizOverFields) {
  Rng rng(21);
  for (const auto& [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {7u, 1u}}) {
    const auto& f = GaloisField::get(p, m);
    for (int s = 0; s < 40; ++s) {
      const std::size_t n = 1 + uniform_below(rng, 5);
      const auto a = random_matrix(f, n, rng);
      const FieldElem expected = oracle::leibniz_det(a);
      EXPECT_EQ(det_cofactor(a), expected);
      EXPECT_EQ(det_bareiss(a), expected);
      EXPECT_EQ(det_berkowitz(a), expected);
      EXPECT_EQ(det_gauss(a), expected);
    }
  }
}

TEST(Matrix, DeterminantsMatchLeibnizOverPolynomials) {
  Rng rng(22);
  const auto& f = GaloisField::get(3);
  using Q = BiPoly<FieldElem>;
  for (int s = 0; s < 10; ++s) {
    const std::size_t n = 1 + uniform_below(rng, 4);
    auto a = Matrix<Q>::zeros(n, n, Q::constant(f.one()));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Q e(f.one());
        e.add_term({static_cast<int>(uniform_below(rng, 2)), static_cast<int>(uniform_below(rng, 2))},
                   random_elem(f, rng));
        e.add_term({0, 0}, random_elem(f, rng));
        a(i, j) = e;
      }
    const Q expected = oracle::leibniz_det(a);
    EXPECT_EQ(det_bareiss(a), expected);
    EXPECT_EQ(det_berkowitz(a), expected);
    EXPECT_EQ(determinant(a), expected);
  }
}

TEST(Matrix, AdjugateIdentities) {
  Rng rng(23);
  for (unsigned p : {2u, 3u, 5u}) {
    const auto& f = GaloisField::get(p);
    for (int s = 0; s < 30; ++s) {
      const std::size_t n = 1 + uniform_below(rng, 4);
      const auto a = random_matrix(f, n, rng);
      const auto adj = adjugate_cofactor(a);
      EXPECT_EQ(adjugate_charpoly(a), adj);
      EXPECT_EQ(a * adj, Matrix<FieldElem>::identity(n, f.one()).scaled(det_gauss(a)));
    }
  }
}

TEST(Matrix, CharpolyCayleyHamilton) {
  Rng rng(24);
  const auto& f = GaloisField::get(5);
  for (int s = 0; s < 30; ++s) {
    const std::size_t n = 1 + uniform_below(rng, 4);
    const auto a = random_matrix(f, n, rng);
    const auto c = charpoly_berkowitz(a);
    ASSERT_EQ(c.size(), n + 1);
    EXPECT_EQ(c[n], f.one());
    auto acc = Matrix<FieldElem>::zeros(n, n, f.one());
    for (std::size_t k = n + 1; k-- > 0;)
      acc = acc * a + Matrix<FieldElem>::identity(n, f.one()).scaled(c[k]);
    EXPECT_EQ(acc, Matrix<FieldElem>::zeros(n, n, f.one()));
  }
}

TEST(Matrix, RankMatchesDeterminant) {
  Rng rng(25);
  const auto& f = GaloisField::get(2);
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = 1 + uniform_below(rng, 4);
    const auto a = random_matrix(f, n, rng);
    EXPECT_EQ(rank_gauss(a) == n, !det_gauss(a).is_zero());
  }
  auto r = Matrix<FieldElem>::zeros(2, 3, f.one());
  r(0, 0) = f.one();
  r(1, 0) = f.one();
  EXPECT_EQ(rank_gauss(r), 1u);
}

TEST(Matrix, ShapeErrors) {
  const auto& f = GaloisField::get(3);
  const auto a = Matrix<FieldElem>::zeros(2, 3, f.one());
  EXPECT_THROW(a * a, SizeMismatch);
  EXPECT_THROW(det_cofactor(a), SizeMismatch);
  EXPECT_THROW(a + Matrix<FieldElem>::zeros(3, 2, f.one()), SizeMismatch);
}
