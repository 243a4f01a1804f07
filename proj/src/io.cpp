#include "weylcurve/io.hpp"

#include <sstream>

namespace weylcurve {

Json to_json(const FieldElem& a) {
  if (a.field().degree() == 1) return a.code();
  Json r = Json::array();
  for (unsigned c : a.residues()) r.push_back(c);
  return r;
}

FieldElem field_elem_from_json(const Json& j, const GaloisField& field) {
  if (j.is_number_integer()) return field.from_int(j.get<long long>());
  if (j.is_array()) {
    std::vector<unsigned> r;
    for (const auto& v : j) r.push_back(field.from_int(v.get<long long>()).code());
    return field.from_residues(r);
  }
  if (j.is_string()) return field.parse(j.get<std::string>());
  throw ParseError("field element must be an integer, residue array or string", 0);
}

Json to_json(const BiPoly<FieldElem>& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({e[0], e[1], to_json(c)});
  return terms;
}

BiPoly<FieldElem> bipoly_from_json(const Json& j, const GaloisField& field) {
  if (!j.is_array()) throw ParseError("polynomial terms must be an array", 0);
  BiPoly<FieldElem> f(field.one());
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw ParseError("term must be [e1, e2, coeff]", 0);
    const int e1 = t[0].get<int>(), e2 = t[1].get<int>();
    if (e1 < 0 || e2 < 0) throw ParseError("negative exponent", 0);
    f.add_term({e1, e2}, field_elem_from_json(t[2], field));
  }
  return f;
}

namespace {

const GaloisField& field_from_json(const Json& j) {
  const unsigned p = j.at("p").get<unsigned>();
  const unsigned m = j.contains("m") ? j.at("m").get<unsigned>() : 1;
  return GaloisField::get(p, m);
}

}  // namespace

Json to_json(const Operator& L) {
  const GaloisField& f = L.unit().field();
  return {{"p", f.characteristic()}, {"m", f.degree()}, {"terms", to_json(L.coefficients())}};
}

Operator operator_from_json(const Json& j) {
  const GaloisField& field = field_from_json(j);
  return Operator(bipoly_from_json(j.at("terms"), field));
}

Json to_json(const PlaneCurve& curve) {
  const GaloisField& f = curve.field();
  return {{"p", f.characteristic()},
          {"m", f.degree()},
          {"d", curve.layer()},
          {"vars", {"z1", "z2"}},
          {"terms", to_json(curve.representative())}};
}

PlaneCurve curve_from_json(const Json& j) {
  const GaloisField& field = field_from_json(j);
  const auto f = bipoly_from_json(j.at("terms"), field);
  return PlaneCurve(f, j.contains("d") ? j.at("d").get<int>() : f.degree());
}

Json to_json(const CheckReport& r) {
  Json j = {{"passed", r.passed}, {"messages", r.messages}};
  if (r.offending_term) j["offending_term"] = {r.offending_term->first, r.offending_term->second};
  return j;
}

Json to_json(const PDetResult<FieldElem>& r) {
  return {{"raw", to_string(r.raw, kShiftedVars)},
          {"central", to_string(r.central, kCentralVars)},
          {"source_degree", r.source_degree},
          {"central_degree", r.central.degree()},
          {"raw_terms", to_json(r.raw)},
          {"central_terms", to_json(r.central)}};
}

Json to_json(const ImageStudy& s, bool with_images) {
  Json hist = Json::array();
  for (const auto& [size, count] : s.histogram) hist.push_back({{"fiber_size", size}, {"curves", count}});
  Json j = {{"domain_classes", s.domain_size},
            {"target_points", s.target_size},
            {"image_size", s.image_size()},
            {"coverage", s.coverage()},
            {"histogram", hist}};
  if (with_images) {
    Json images = Json::array();
    for (const auto& [curve, size] : s.fibers)
      images.push_back({{"curve", to_string(curve)}, {"fiber_size", size}});
    j["images"] = images;
  }
  return j;
}

Json to_json(const JacobianRank& r) {
  return {{"dimension", r.dimension}, {"affine_rank", r.affine}, {"projective_rank", r.projective}};
}

Json to_json(const FamilyReport& r) {
  Json samples = Json::array();
  for (std::size_t k = 0; k < r.parameters.size(); ++k) {
    Json s = {{"t", to_json(r.parameters[k])}};
    s["curve"] = r.curves[k] ? Json(to_string(*r.curves[k])) : Json(nullptr);
    samples.push_back(s);
  }
  Json distinct = Json::array();
  for (const auto& c : r.distinct) distinct.push_back(to_string(c));
  Json skipped = Json::array();
  for (const auto& t : r.skipped) skipped.push_back(to_json(t));
  return {{"layer", r.layer},
          {"samples", samples},
          {"skipped", skipped},
          {"distinct_classes", distinct},
          {"nondegenerate", r.nondegenerate()}};
}

std::string histogram_csv(const ImageStudy& s) {
  std::ostringstream out;
  out << "fiber_size,curves\n";
  for (const auto& [size, count] : s.histogram) out << size << ',' << count << '\n';
  return out.str();
}

}  // namespace weylcurve
