#include "weylcurve/symplectic.hpp"

#include "weylcurve/oracles.hpp"

namespace weylcurve {

PipelineReport symplectic_pipeline(const PolyMap2<FieldElem>& map, Keep keep,
                                   const FieldElem& parameter, int max_layer,
                                   std::uint64_t cap) {
  const GraphIdeal<FieldElem> ideal = graph_ideal(map);
  PlanarFamily<FieldElem> family = project_family(ideal, keep);
  PipelineReport report{map,    is_symplectomorphism(map), ideal, family, false, parameter,
                        std::nullopt, {}};
  report.projections_agree = project_family_by_substitution(ideal, keep) == family;
  const BiPoly<FieldElem> f = specialize_family(family, parameter);
  if (f.zero()) return report;
  const int layer = f.degree();
  if (layer > max_layer)
    throw Error("specialized curve has degree " + std::to_string(layer) + ", above the limit " +
                std::to_string(max_layer));
  report.curve = PlaneCurve(f, layer);
  report.fiber = fiber(*report.curve, layer, cap);
  return report;
}

}  // namespace weylcurve
