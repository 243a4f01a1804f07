#include "weylcurve/pdet.hpp"

#include "weylcurve/parallel.hpp"

namespace weylcurve {

unsigned interpolation_extension(unsigned p, unsigned m, std::uint64_t points) {
  unsigned ext = m;
  while (true) {
    std::uint64_t q = 1;
    for (unsigned k = 0; k < ext && q < points; ++k) q *= p;
    if (q >= points) return ext;
    ext += m;
  }
}

PDetResult<FieldElem> pdet_interp(const Operator& L, std::uint64_t field_cap) {
  if (L.zero()) throw ZeroInput("p-determinant of the zero operator");
  const GaloisField& base = L.unit().field();
  const unsigned p = base.characteristic();
  const int n = bernstein_degree(L);
  const int bound = static_cast<int>(p) * n;
  const std::size_t points = static_cast<std::size_t>(bound) + 1;
  const GaloisField& ext =
      GaloisField::get(p, interpolation_extension(p, base.degree(), points), field_cap);

  Grid<FieldElem> grid;
  for (std::size_t k = 0; k < points; ++k) {
    grid.xs.push_back(ext.element(static_cast<std::uint32_t>(k)));
    grid.ys.push_back(ext.element(static_cast<std::uint32_t>(k)));
  }
  grid.values.assign(points, std::vector<FieldElem>(points, ext.zero()));
  const auto lift = [&ext](const FieldElem& c) { return embed(c, ext); };
  parallel_for(points * points, [&](std::size_t idx) {
    const std::size_t i = idx / points, j = idx % points;
    grid.values[i][j] = det_gauss(represent_shifted(L, grid.xs[i], grid.ys[j], lift));
  });

  const BiPoly<FieldElem> lifted = interpolate_grid(grid, bound, bound);
  BiPoly<FieldElem> raw(base.one());
  for (const auto& [e, c] : lifted.terms()) {
    const auto back = restrict_to(c, base);
    if (!back) throw InvariantViolation("interpolated p-determinant leaves the coefficient field");
    raw.add_term(e, *back);
  }
  BiPoly<FieldElem> central = to_central(raw, p);
  return {std::move(raw), std::move(central), n, p};
}

CheckReport check_centrality(const PDetResult<FieldElem>& r) {
  CheckReport report;
  const int p = static_cast<int>(r.p);
  const bool derivatives_vanish =
      partial_derivative(r.raw, 0).zero() && partial_derivative(r.raw, 1).zero();
  bool exponents_divisible = true;
  for (const auto& [e, c] : r.raw.terms()) {
    if (e[0] % p != 0 || e[1] % p != 0) {
      exponents_divisible = false;
      if (!report.offending_term) report.offending_term = std::make_pair(e[0], e[1]);
    }
  }
  if (!derivatives_vanish) report.fail("partial derivatives of the p-determinant do not vanish");
  if (!exponents_divisible)
    report.fail("term xt^" + std::to_string(report.offending_term->first) + "*yt^" +
                std::to_string(report.offending_term->second) + " has an exponent not divisible by " +
                std::to_string(p));
  if (derivatives_vanish != exponents_divisible)
    report.fail("derivative test and exponent test disagree");
  if (exponents_divisible && !(from_central(r.central, r.p) == r.raw))
    report.fail("central form does not match the raw polynomial");
  return report;
}

CheckReport check_leading(const Operator& L, const PDetResult<FieldElem>& r) {
  CheckReport report;
  const auto lead = leading_monomial(L);
  const int n = bernstein_degree(L);
  if (r.central.zero() || r.raw.zero()) {
    report.fail("p-determinant of a nonzero operator vanished");
    return report;
  }
  if (r.central.degree() > n)
    report.fail("central degree " + std::to_string(r.central.degree()) + " exceeds deg L = " +
                std::to_string(n));
  const FieldElem expected = frobenius(lead.coeff);
  const FieldElem got = r.central.coeff({lead.i, lead.j});
  if (!(got == expected)) {
    report.fail("coefficient of z1^" + std::to_string(lead.i) + "*z2^" + std::to_string(lead.j) +
                " is " + to_string(got) + ", expected " + to_string(expected));
    report.offending_term = std::make_pair(lead.i, lead.j);
  }
  const auto& [top, top_coeff] = r.central.leading();
  if (top != Exponent<2>{lead.i, lead.j}) {
    report.fail("leading term of the central form is z1^" + std::to_string(top[0]) + "*z2^" +
                std::to_string(top[1]) + ", expected z1^" + std::to_string(lead.i) + "*z2^" +
                std::to_string(lead.j));
    if (!report.offending_term) report.offending_term = std::make_pair(top[0], top[1]);
  }
  if (!(r.raw.coeff({static_cast<int>(r.p) * lead.i, static_cast<int>(r.p) * lead.j}) == expected))
    report.fail("raw coefficient of the leading term differs from the central one");
  return report;
}

bool check_trace_identity(const Operator& L) {
  const unsigned p = L.characteristic();
  const auto a = represent(L);
  const auto yp = build_Yp(p, L.unit());
  const auto adj = adjugate_charpoly(a);
  return trace(adj * commutator(a, yp)).zero();
}

}  // namespace weylcurve
