#pragma once

// Brute-force and exact-differentiation studies of the curve map:
// determinant-of-sum expansion, exhaustive image and fiber enumeration,
// Jacobian rank through dual numbers, and images of one-parameter families.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "weylcurve/curves.hpp"
#include "weylcurve/dual.hpp"
#include "weylcurve/matrix.hpp"
#include "weylcurve/parallel.hpp"

namespace weylcurve {

/// Sum over all maps sigma: {0..n-1} -> {0..m-1} of det(A^sigma), where row i
/// of A^sigma is row i of summands[sigma(i)]. Equals det of the sum.
template <CommutativeRing R>
R det_sum_expansion(const std::vector<Matrix<R>>& summands,
                    std::uint64_t cap = kDefaultEnumerationCap) {
  if (summands.empty()) throw Error("det_sum_expansion needs at least one summand");
  const std::size_t n = summands[0].rows();
  for (const auto& a : summands)
    if (a.rows() != n || a.cols() != n)
      throw SizeMismatch("det_sum_expansion needs square summands of equal size");
  const std::uint64_t m = summands.size();
  const std::uint64_t count = saturating_power(m, static_cast<int>(n));
  if (count > cap) throw CapExceeded("determinant-of-sum expansion", count, cap);

  const R unit = summands[0].unit();
  // Chunked partial sums, combined in chunk order.
  const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(count, 64));
  std::vector<std::optional<R>> partial(chunks);
  parallel_for(
      chunks,
      [&](std::size_t c) {
        const std::uint64_t begin = count * c / chunks, end = count * (c + 1) / chunks;
        R acc = zero_like(unit);
        Matrix<R> a = Matrix<R>::zeros(n, n, unit);
        for (std::uint64_t sigma = begin; sigma < end; ++sigma) {
          std::uint64_t code = sigma;
          for (std::size_t i = 0; i < n; ++i) {
            const auto& src = summands[code % m];
            code /= m;
            for (std::size_t j = 0; j < n; ++j) a(i, j) = src(i, j);
          }
          acc = acc + determinant(a);
        }
        partial[c] = std::move(acc);
      },
      1);
  R total = zero_like(unit);
  for (auto& s : partial) total = total + *s;
  return total;
}

struct ImageStudy {
  unsigned p = 0;
  unsigned m = 1;
  int d = 0;
  std::uint64_t domain_size = 0;
  /// Number of points of the curve layer of degree d.
  std::uint64_t target_size = 0;
  /// Image curve -> fiber size, in canonical order.
  std::map<PlaneCurve, std::uint64_t> fibers;
  /// Fiber size -> number of image curves with that fiber size.
  std::map<std::uint64_t, std::uint64_t> histogram;

  std::uint64_t image_size() const { return fibers.size(); }
  double coverage() const {
    return target_size == 0 ? 0.0 : static_cast<double>(fibers.size()) / target_size;
  }
};

/// Applies theta to every class of operator layer (d, p, m). Deterministic.
ImageStudy image_study(unsigned p, unsigned m, int d, std::uint64_t cap = kDefaultEnumerationCap);

/// The same curve with coefficients mapped into the extension `target`.
PlaneCurve extend_field(const PlaneCurve& curve, const GaloisField& target);

/// Containment check behind coverage monotonicity: every image curve of
/// `base` (over F_p) lifted to the field of `extension` (over F_{p^m}) is an
/// image curve of `extension`. Returns the curves that are missing.
std::vector<PlaneCurve> missing_after_extension(const ImageStudy& base,
                                                const ImageStudy& extension);

/// Coverage of the F_p-rational target curves within a study over F_{p^m}:
/// (rational targets in the image) / (number of rational targets).
double rational_coverage(const ImageStudy& study);

/// All classes of operator layer d over the curve's field mapping to the curve.
/// The curve's layer is ignored; only its class matters. Empty if deg C > d.
std::vector<OperatorClass> fiber(const PlaneCurve& curve, int d,
                                 std::uint64_t cap = kDefaultEnumerationCap);

struct JacobianRank {
  int dimension;   // K = (d+1)(d+2)/2
  int affine;      // rank of the K x K differential of the coefficient map
  int projective;  // rank of the induced map on projective tangent spaces
};

/// Exact rank of the differential of L -> central p-determinant on layer d,
/// with each column obtained by running the p-determinant over dual numbers.
JacobianRank jacobian_rank(const Operator& L, int d);

struct FamilyReport {
  /// Layer of the family: the largest degree of a term with nonzero coefficient.
  int layer = 0;
  std::vector<FieldElem> parameters;
  /// Image curve per sample; empty where L(t) vanished (those are also in skipped).
  std::vector<std::optional<PlaneCurve>> curves;
  std::vector<FieldElem> skipped;
  std::set<PlaneCurve> distinct;

  bool nondegenerate() const { return distinct.size() >= 2; }
};

/// Samples the family at the first `samples` field elements (code order) and
/// maps each specialization through theta. Families that are constant up to a
/// global scalar throw DegenerateFamily.
FamilyReport family_image(const OperatorFamily& family, std::size_t samples);

}  // namespace weylcurve
