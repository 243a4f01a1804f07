#pragma once

// Projective layers of operators and of plane curves, and the map between them.
//
// Layer d on the operator side is the projective space of nonzero operators of
// Bernstein degree <= d modulo scalars; on the curve side it is the projective
// space of nonzero polynomials in z1, z2 of degree <= d modulo scalars. Both
// have (d+1)(d+2)/2 homogeneous coordinates, indexed by the monomials of
// degree <= d in descending grlex order. A class is stored through its
// representative scaled so that the grlex-leading coefficient is 1.

#include <cstdint>
#include <string>
#include <vector>

#include "weylcurve/pdet.hpp"
#include "weylcurve/weyl.hpp"

namespace weylcurve {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Monomials of total degree <= d, descending grlex: (d,0), (d-1,1), ..., (0,0).
std::vector<Exponent<2>> layer_monomials(int d);
/// Number of homogeneous coordinates, (d+1)(d+2)/2.
int layer_dimension(int d);
/// Points of a projective space with k coordinates over F_q, (q^k - 1)/(q - 1).
/// Saturates at UINT64_MAX.
std::uint64_t projective_point_count(std::uint64_t q, int k);
/// q^k, saturating.
std::uint64_t saturating_power(std::uint64_t q, int k);

class OperatorClass {
 public:
  /// The class of L in layer d; throws ZeroInput for L = 0 and Error if deg L > d.
  OperatorClass(const Operator& L, int d);

  const Operator& representative() const noexcept { return rep_; }
  int layer() const noexcept { return d_; }
  const GaloisField& field() const { return rep_.unit().field(); }

  friend bool operator==(const OperatorClass& a, const OperatorClass& b) {
    return a.d_ == b.d_ && a.rep_ == b.rep_;
  }
  friend bool operator<(const OperatorClass& a, const OperatorClass& b) {
    if (a.d_ != b.d_) return a.d_ < b.d_;
    return a.rep_.coefficients() < b.rep_.coefficients();
  }

 private:
  Operator rep_;
  int d_;
};

class PlaneCurve {
 public:
  /// The curve class of f in layer d; throws ZeroInput for f = 0 and Error if deg f > d.
  PlaneCurve(const BiPoly<FieldElem>& f, int d);

  /// Canonical polynomial in z1, z2 with grlex-leading coefficient 1.
  const BiPoly<FieldElem>& representative() const noexcept { return rep_; }
  int layer() const noexcept { return d_; }
  const GaloisField& field() const { return rep_.unit().field(); }

  friend bool operator==(const PlaneCurve& a, const PlaneCurve& b) {
    return a.d_ == b.d_ && a.rep_ == b.rep_;
  }
  friend bool operator<(const PlaneCurve& a, const PlaneCurve& b) {
    if (a.d_ != b.d_) return a.d_ < b.d_;
    return a.rep_ < b.rep_;
  }

 private:
  BiPoly<FieldElem> rep_;
  int d_;
};

/// Theta_d: the class of the central p-determinant of the representative.
PlaneCurve theta(const OperatorClass& c);

/// Layer embeddings d -> d' (d' >= d): same representative, new layer.
OperatorClass embed_class(const OperatorClass& c, int target_layer);
PlaneCurve embed_curve(const PlaneCurve& curve, int target_layer);

/// theta(embed_class(c, d')) == embed_curve(theta(c), d').
bool check_square(const OperatorClass& c, int target_layer);

/// Enumerates every class of an operator layer exactly once, in a fixed order.
/// Index ranges are independent, so callers may split them across threads.
class LayerEnumerator {
 public:
  LayerEnumerator(const GaloisField& field, int d, std::uint64_t cap = kDefaultEnumerationCap);

  const GaloisField& field() const noexcept { return *field_; }
  int layer() const noexcept { return d_; }
  std::uint64_t size() const noexcept { return size_; }
  const std::vector<Exponent<2>>& monomials() const noexcept { return monomials_; }

  /// Homogeneous coordinates of the index-th class; first nonzero entry is 1.
  std::vector<FieldElem> coordinates(std::uint64_t index) const;
  OperatorClass at(std::uint64_t index) const;
  /// The curve with the same coordinates (curve layers share the indexing).
  PlaneCurve curve_at(std::uint64_t index) const;

 private:
  const GaloisField* field_;
  int d_;
  std::vector<Exponent<2>> monomials_;
  std::uint64_t size_;
};

LayerEnumerator layer_points(int d, unsigned p, unsigned m,
                             std::uint64_t cap = kDefaultEnumerationCap);

std::string to_string(const OperatorClass& c);
std::string to_string(const PlaneCurve& curve);

}  // namespace weylcurve
