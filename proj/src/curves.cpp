#include "weylcurve/curves.hpp"

#include <limits>

namespace weylcurve {

std::vector<Exponent<2>> layer_monomials(int d) {
  std::vector<Exponent<2>> out;
  for (int total = d; total >= 0; --total)
    for (int i = total; i >= 0; --i) out.push_back({i, total - i});
  return out;
}

int layer_dimension(int d) { return (d + 1) * (d + 2) / 2; }

std::uint64_t saturating_power(std::uint64_t q, int k) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > kMax / q) return kMax;
    r *= q;
  }
  return r;
}

std::uint64_t projective_point_count(std::uint64_t q, int k) {
  // 1 + q + ... + q^{k-1}
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0, term = 1;
  for (int i = 0; i < k; ++i) {
    if (total > kMax - term) return kMax;
    total += term;
    if (i + 1 < k) {
      if (term > kMax / q) return kMax;
      term *= q;
    }
  }
  return total;
}

OperatorClass::OperatorClass(const Operator& L, int d) : rep_(L), d_(d) {
  if (L.zero()) throw ZeroInput("the zero operator has no projective class");
  if (bernstein_degree(L) > d)
    throw Error("operator of degree " + std::to_string(bernstein_degree(L)) +
                " does not lie in layer " + std::to_string(d));
  const FieldElem lead = L.coefficients().leading().second;
  if (!lead.is_one()) rep_ = L.scaled(lead.inverse());
}

PlaneCurve::PlaneCurve(const BiPoly<FieldElem>& f, int d) : rep_(f), d_(d) {
  if (f.zero()) throw ZeroInput("the zero polynomial defines no curve class");
  if (f.degree() > d)
    throw Error("polynomial of degree " + std::to_string(f.degree()) + " does not lie in layer " +
                std::to_string(d));
  const FieldElem lead = f.leading().second;
  if (!lead.is_one()) rep_ = f.scaled(lead.inverse());
}

PlaneCurve theta(const OperatorClass& c) {
  return PlaneCurve(pdet_direct(c.representative()).central, c.layer());
}

OperatorClass embed_class(const OperatorClass& c, int target_layer) {
  if (target_layer < c.layer())
    throw Error("cannot embed layer " + std::to_string(c.layer()) + " into layer " +
                std::to_string(target_layer));
  return OperatorClass(c.representative(), target_layer);
}

PlaneCurve embed_curve(const PlaneCurve& curve, int target_layer) {
  if (target_layer < curve.layer())
    throw Error("cannot embed layer " + std::to_string(curve.layer()) + " into layer " +
                std::to_string(target_layer));
  return PlaneCurve(curve.representative(), target_layer);
}

bool check_square(const OperatorClass& c, int target_layer) {
  return theta(embed_class(c, target_layer)) == embed_curve(theta(c), target_layer);
}

LayerEnumerator::LayerEnumerator(const GaloisField& field, int d, std::uint64_t cap)
    : field_(&field), d_(d) {
  if (d < 0) throw Error("layer index must be nonnegative");
  const int k = layer_dimension(d);
  const std::uint64_t cost = saturating_power(field.order(), k);
  if (cost > cap)
    throw CapExceeded("enumerating layer " + std::to_string(d) + " over F_" +
                          std::to_string(field.characteristic()) + "^" +
                          std::to_string(field.degree()),
                      cost, cap);
  monomials_ = layer_monomials(d);
  size_ = projective_point_count(field.order(), k);
}

std::vector<FieldElem> LayerEnumerator::coordinates(std::uint64_t index) const {
  if (index >= size_) throw Error("layer index out of range");
  const std::uint64_t q = field_->order();
  const std::size_t k = monomials_.size();
  // Block `lead` holds the points whose first nonzero coordinate is `lead`;
  // it has q^(k-1-lead) members, one per choice of the trailing coordinates.
  std::size_t lead = 0;
  std::uint64_t block = saturating_power(q, static_cast<int>(k) - 1);
  while (index >= block) {
    index -= block;
    ++lead;
    block /= q;
  }
  std::vector<FieldElem> coords(k, field_->zero());
  coords[lead] = field_->one();
  for (std::size_t pos = k; pos-- > lead + 1;) {
    coords[pos] = field_->element(static_cast<std::uint32_t>(index % q));
    index /= q;
  }
  return coords;
}

OperatorClass LayerEnumerator::at(std::uint64_t index) const {
  const auto coords = coordinates(index);
  BiPoly<FieldElem> c(field_->one());
  for (std::size_t k = 0; k < coords.size(); ++k) c.add_term(monomials_[k], coords[k]);
  return OperatorClass(Operator(std::move(c)), d_);
}

PlaneCurve LayerEnumerator::curve_at(std::uint64_t index) const {
  const auto coords = coordinates(index);
  BiPoly<FieldElem> f(field_->one());
  for (std::size_t k = 0; k < coords.size(); ++k) f.add_term(monomials_[k], coords[k]);
  return PlaneCurve(f, d_);
}

LayerEnumerator layer_points(int d, unsigned p, unsigned m, std::uint64_t cap) {
  return LayerEnumerator(GaloisField::get(p, m), d, cap);
}

std::string to_string(const OperatorClass& c) { return "[" + to_string(c.representative()) + "]"; }

std::string to_string(const PlaneCurve& curve) {
  return to_string(curve.representative(), kCentralVars);
}

}  // namespace weylcurve
