#pragma once

// Polynomial symplectic geometry of the plane: the Poisson bracket, checks
// for bracket-preserving polynomial maps, graph ideals, and the projection of
// a graph to a family of planar curves parameterised by x2.
//
// Sign convention: {f, g} = df/dz2 * dg/dz1 - df/dz1 * dg/dz2, so {z1, z2} = -1.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylcurve/curves.hpp"
#include "weylcurve/poly.hpp"
#include "weylcurve/poly_parse.hpp"
#include "weylcurve/resultant.hpp"

namespace weylcurve {

template <class R>
BiPoly<R> poisson_bracket(const BiPoly<R>& f, const BiPoly<R>& g) {
  return partial_derivative(f, 1) * partial_derivative(g, 0) -
         partial_derivative(f, 0) * partial_derivative(g, 1);
}

inline constexpr VarNames<2> kMapVars{"x1", "x2"};
inline constexpr VarNames<4> kGraphVars{"x1", "x2", "y1", "y2"};

/// The substitution (x1, x2) -> (F1(x1, x2), F2(x1, x2)).
template <class R>
struct PolyMap2 {
  BiPoly<R> f1;
  BiPoly<R> f2;

  static PolyMap2 identity(const R& unit) {
    return {BiPoly<R>::variable(unit, 0), BiPoly<R>::variable(unit, 1)};
  }
  friend bool operator==(const PolyMap2&, const PolyMap2&) = default;
};

/// {F1, F2} == {z1, z2} = -1 identically.
template <class R>
bool is_symplectomorphism(const PolyMap2<R>& map) {
  return poisson_bracket(map.f1, map.f2) == BiPoly<R>::constant(-one_like(map.f1.unit()));
}

/// outer after inner: z -> outer(inner(z)).
template <class R>
PolyMap2<R> compose(const PolyMap2<R>& outer, const PolyMap2<R>& inner) {
  const std::array<BiPoly<R>, 2> args{inner.f1, inner.f2};
  return {substitute(outer.f1, args), substitute(outer.f2, args)};
}

/// Generators y1 - F1(x1, x2) and y2 - F2(x1, x2) in variables (x1, x2, y1, y2).
template <class R>
struct GraphIdeal {
  Poly<R, 4> f1;
  Poly<R, 4> f2;
};

namespace detail {

template <class R>
Poly<R, 4> lift_to_graph(const BiPoly<R>& f) {
  Poly<R, 4> out(f.unit());
  for (const auto& [e, c] : f.terms()) out.add_term({e[0], e[1], 0, 0}, c);
  return out;
}

}  // namespace detail

template <class R>
GraphIdeal<R> graph_ideal(const PolyMap2<R>& map) {
  const R& unit = map.f1.unit();
  return {Poly<R, 4>::variable(unit, 2) - detail::lift_to_graph(map.f1),
          Poly<R, 4>::variable(unit, 3) - detail::lift_to_graph(map.f2)};
}

/// Which target coordinate survives the projection.
enum class Keep { y1, y2 };

/// A planar curve family in variables (x1, y, x2) where y is the kept
/// coordinate and x2 the parameter.
template <class R>
struct PlanarFamily {
  Poly<R, 3> f;
  Keep keep;

  VarNames<3> names() const {
    return {"x1", keep == Keep::y1 ? "y1" : "y2", "x2"};
  }
  friend bool operator==(const PlanarFamily&, const PlanarFamily&) = default;
};

namespace detail {

template <class R>
PlanarFamily<R> to_planar(const Poly<R, 4>& g, Keep keep) {
  const std::size_t kept = keep == Keep::y1 ? 2 : 3, dropped = keep == Keep::y1 ? 3 : 2;
  if (g.zero()) throw Error("eliminant vanishes identically; the ideal is not generic");
  Poly<R, 3> f(g.unit());
  for (const auto& [e, c] : g.terms()) {
    if (e[dropped] != 0) throw InvariantViolation("eliminant still involves the dropped variable");
    f.add_term({e[0], e[kept], e[1]}, c);
  }
  return {std::move(f), keep};
}

}  // namespace detail

/// Eliminates the dropped y by a resultant of the two generators.
template <class R>
PlanarFamily<R> project_family(const GraphIdeal<R>& g, Keep keep) {
  const std::size_t dropped = keep == Keep::y1 ? 3 : 2;
  return detail::to_planar(resultant(g.f1, g.f2, dropped), keep);
}

/// Eliminates the dropped y by solving its generator y_drop - F = 0 and
/// substituting into the other generator. Requires graph shape.
template <class R>
PlanarFamily<R> project_family_by_substitution(const GraphIdeal<R>& g, Keep keep) {
  const std::size_t dropped = keep == Keep::y1 ? 3 : 2;
  const Poly<R, 4>& solved = keep == Keep::y1 ? g.f2 : g.f1;
  const Poly<R, 4>& other = keep == Keep::y1 ? g.f1 : g.f2;
  const R& unit = solved.unit();
  const auto y = Poly<R, 4>::variable(unit, dropped);
  const auto parts = coefficients_in(solved, dropped);
  if (parts.size() != 2 || parts[1] != Poly<R, 4>::constant(one_like(unit)))
    throw Error("generator is not of the form y - F(x1, x2)");
  std::array<Poly<R, 4>, 4> args{Poly<R, 4>::variable(unit, 0), Poly<R, 4>::variable(unit, 1),
                                 Poly<R, 4>::variable(unit, 2), Poly<R, 4>::variable(unit, 3)};
  args[dropped] = y - solved;
  return detail::to_planar(substitute(other, args), keep);
}

/// The member of the family at x2 = c, as a polynomial in (x1, y_kept).
template <class R>
BiPoly<R> specialize_family(const PlanarFamily<R>& family, const R& c) {
  const R& unit = family.f.unit();
  const std::array<BiPoly<R>, 3> args{BiPoly<R>::variable(unit, 0), BiPoly<R>::variable(unit, 1),
                                      BiPoly<R>::constant(c)};
  return substitute(family.f, args);
}

template <class R>
std::string to_string(const PlanarFamily<R>& family) {
  return to_string(family.f, family.names());
}

/// Parses "F1, F2" in variables x1, x2.
template <class R>
PolyMap2<R> parse_map(std::string_view text, const R& unit) {
  const auto parts = split_top_level(text);
  if (parts.size() != 2) throw ParseError("expected two comma-separated polynomials", 0);
  return {parse_poly(parts[0], unit, kMapVars), parse_poly(parts[1], unit, kMapVars)};
}

template <class R>
std::string to_string(const PolyMap2<R>& map) {
  return to_string(map.f1, kMapVars) + ", " + to_string(map.f2, kMapVars);
}

/// Graph of a map -> projected family -> member at x2 = c -> Theta-fiber search.
struct PipelineReport {
  PolyMap2<FieldElem> map;
  bool symplectic = false;
  GraphIdeal<FieldElem> ideal;
  PlanarFamily<FieldElem> family;
  bool projections_agree = false;
  FieldElem parameter;
  /// The specialized curve, read in (z1, z2) = (x1, y_kept).
  std::optional<PlaneCurve> curve;
  std::vector<OperatorClass> fiber;
};

/// Runs the pipeline, searching the fiber in layer deg(curve); refuses layers
/// above max_layer. A specialized curve that vanishes leaves curve empty.
PipelineReport symplectic_pipeline(const PolyMap2<FieldElem>& map, Keep keep,
                                   const FieldElem& parameter, int max_layer,
                                   std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace weylcurve
