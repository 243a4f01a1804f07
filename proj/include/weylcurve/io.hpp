#pragma once

// JSON and CSV encodings.
//
//   field element   integer (prime field) or [c0, c1, ...] residues, low first
//   polynomial      [[e1, e2, coeff], ...] in descending grlex order
//   operator        {"p", "m", "terms"}; terms as a polynomial in (x, y)
//   curve           {"p", "m", "d", "vars": ["z1", "z2"], "terms"}
//   matrix          nested arrays of entry strings

#include <string>

#include <json.hpp>

#include "weylcurve/curves.hpp"
#include "weylcurve/matrix.hpp"
#include "weylcurve/oracles.hpp"
#include "weylcurve/pdet.hpp"

namespace weylcurve {

using Json = nlohmann::ordered_json;

Json to_json(const FieldElem& a);
FieldElem field_elem_from_json(const Json& j, const GaloisField& field);

Json to_json(const BiPoly<FieldElem>& f);
BiPoly<FieldElem> bipoly_from_json(const Json& j, const GaloisField& field);

Json to_json(const Operator& L);
Operator operator_from_json(const Json& j);

Json to_json(const PlaneCurve& curve);
PlaneCurve curve_from_json(const Json& j);

template <class R>
Json matrix_to_json(const Matrix<R>& a) {
  using weylcurve::to_string;
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(to_string(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const CheckReport& r);
Json to_json(const PDetResult<FieldElem>& r);
/// Counts, coverage and histogram; `with_images` adds every image curve with its fiber size.
Json to_json(const ImageStudy& s, bool with_images = false);
Json to_json(const JacobianRank& r);
Json to_json(const FamilyReport& r);

/// "fiber_size,curves" rows of the fiber-size histogram.
std::string histogram_csv(const ImageStudy& s);

}  // namespace weylcurve
