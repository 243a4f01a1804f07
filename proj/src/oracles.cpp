#include "weylcurve/oracles.hpp"

#include <algorithm>

namespace weylcurve {

ImageStudy image_study(unsigned p, unsigned m, int d, std::uint64_t cap) {
  const LayerEnumerator layer = layer_points(d, p, m, cap);
  const std::size_t n = static_cast<std::size_t>(layer.size());
  std::vector<std::optional<PlaneCurve>> images(n);
  parallel_for(n, [&](std::size_t k) { images[k] = theta(layer.at(k)); }, 8);

  ImageStudy study;
  study.p = p;
  study.m = m;
  study.d = d;
  study.domain_size = layer.size();
  study.target_size = projective_point_count(layer.field().order(), layer_dimension(d));
  for (auto& c : images) ++study.fibers[*c];
  for (const auto& [curve, size] : study.fibers) ++study.histogram[size];
  return study;
}

PlaneCurve extend_field(const PlaneCurve& curve, const GaloisField& target) {
  const auto f = map_coefficients(curve.representative(), target.one(),
                                  [&](const FieldElem& c) { return embed(c, target); });
  return PlaneCurve(f, curve.layer());
}

std::vector<PlaneCurve> missing_after_extension(const ImageStudy& base,
                                                const ImageStudy& extension) {
  if (base.p != extension.p || base.d != extension.d || extension.m % base.m != 0)
    throw Error("studies are not related by a field extension");
  const GaloisField& target = GaloisField::get(extension.p, extension.m);
  std::vector<PlaneCurve> missing;
  for (const auto& [curve, size] : base.fibers) {
    PlaneCurve lifted = extend_field(curve, target);
    if (!extension.fibers.contains(lifted)) missing.push_back(std::move(lifted));
  }
  return missing;
}

double rational_coverage(const ImageStudy& study) {
  const GaloisField& prime = GaloisField::get(study.p, 1);
  std::uint64_t hit = 0;
  for (const auto& [curve, size] : study.fibers) {
    const bool rational = std::all_of(
        curve.representative().terms().begin(), curve.representative().terms().end(),
        [&](const auto& term) { return restrict_to(term.second, prime).has_value(); });
    if (rational) ++hit;
  }
  const std::uint64_t total = projective_point_count(study.p, layer_dimension(study.d));
  return static_cast<double>(hit) / static_cast<double>(total);
}

std::vector<OperatorClass> fiber(const PlaneCurve& curve, int d, std::uint64_t cap) {
  const GaloisField& field = curve.field();
  const LayerEnumerator layer(field, d, cap);
  if (curve.representative().degree() > d) return {};
  const PlaneCurve target(curve.representative(), d);
  const std::size_t n = static_cast<std::size_t>(layer.size());
  std::vector<char> hit(n, 0);
  parallel_for(n, [&](std::size_t k) { hit[k] = theta(layer.at(k)) == target; }, 8);
  std::vector<OperatorClass> out;
  for (std::size_t k = 0; k < n; ++k)
    if (hit[k]) out.push_back(layer.at(k));
  return out;
}

JacobianRank jacobian_rank(const Operator& L, int d) {
  if (L.zero()) throw ZeroInput("Jacobian rank at the zero operator");
  if (bernstein_degree(L) > d) throw Error("operator does not lie in layer " + std::to_string(d));
  using D = Dual<FieldElem>;
  const GaloisField& field = L.unit().field();
  const auto monomials = layer_monomials(d);
  const std::size_t k = monomials.size();

  Matrix<FieldElem> j = Matrix<FieldElem>::zeros(k, k + 1, field.one());
  for (std::size_t dir = 0; dir < k; ++dir) {
    BiPoly<D> coeffs(D(field.one()));
    for (std::size_t r = 0; r < k; ++r) {
      const FieldElem a = L.coeff(monomials[r][0], monomials[r][1]);
      coeffs.add_term(monomials[r], D(a, r == dir ? field.one() : field.zero()));
    }
    const auto central = pdet_direct(WeylOp<D>(std::move(coeffs))).central;
    if (central.degree() > d)
      throw InvariantViolation("perturbed p-determinant leaves layer " + std::to_string(d));
    for (std::size_t r = 0; r < k; ++r) {
      const D c = central.coeff(monomials[r]);
      j(r, dir) = c.eps;
      if (dir == 0) j(r, k) = c.value;
    }
  }
  Matrix<FieldElem> square = Matrix<FieldElem>::zeros(k, k, field.one());
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) square(r, c) = j(r, c);
  // L itself is a zero direction (scaling by lambda multiplies the image by
  // lambda^p), so the projective rank is rank([J | F(L)]) - 1.
  const int affine = static_cast<int>(rank_gauss(square));
  const int projective = static_cast<int>(rank_gauss(j)) - 1;
  return {static_cast<int>(k), affine, projective};
}

namespace {

/// True if every coefficient is constant in t, or all are proportional to one
/// polynomial g(t) with constant factors.
bool constant_up_to_scalar(const OperatorFamily& family) {
  using P = UniPoly<FieldElem>;
  const P* base = nullptr;
  for (const auto& [e, c] : family.terms()) {
    if (!base) {
      base = &c;
      continue;
    }
    // c = lambda * base with lambda = lc(c) / lc(base)
    if (c * P::constant(base->leading()) != *base * P::constant(c.leading())) return false;
  }
  return true;
}

}  // namespace

FamilyReport family_image(const OperatorFamily& family, std::size_t samples) {
  if (family.zero()) throw ZeroInput("family is identically zero");
  const GaloisField& field = family.unit().unit().field();
  if (samples == 0 || samples > field.order())
    throw Error("sample count must lie in [1, " + std::to_string(field.order()) + "]");
  if (constant_up_to_scalar(family))
    throw DegenerateFamily("family is constant up to a scalar factor; its image is a single class");

  FamilyReport report;
  report.layer = family.coefficients().degree();
  for (std::size_t s = 0; s < samples; ++s) {
    const FieldElem t = field.element(static_cast<std::uint32_t>(s));
    report.parameters.push_back(t);
    const Operator L = specialize(family, t);
    if (L.zero()) {
      report.skipped.push_back(t);
      report.curves.emplace_back();
      continue;
    }
    PlaneCurve curve = theta(OperatorClass(L, report.layer));
    report.distinct.insert(curve);
    report.curves.emplace_back(std::move(curve));
  }
  return report;
}

}  // namespace weylcurve
