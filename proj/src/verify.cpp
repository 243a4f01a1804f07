#include "weylcurve/verify.hpp"

#include <functional>

#include "weylcurve/curves.hpp"
#include "weylcurve/matrep.hpp"
#include "weylcurve/oracles.hpp"
#include "weylcurve/pdet.hpp"
#include "weylcurve/random.hpp"

namespace weylcurve {

Fault parse_fault(const std::string& name) {
  if (name.empty() || name == "none") return Fault::none;
  if (name == "centrality") return Fault::centrality;
  if (name == "leading") return Fault::leading;
  throw Error("unknown fault '" + name + "' (expected centrality or leading)");
}

namespace {

PDetResult<FieldElem> computed_pdet(const Operator& L, Fault fault) {
  auto r = pdet_direct(L);
  const FieldElem one = L.unit().field().one();
  if (fault == Fault::centrality) {
    r.raw.add_term({1, 0}, one);
  } else if (fault == Fault::leading) {
    const auto top = r.central.leading().first;
    r.central.add_term(top, one);
    r.raw.add_term({top[0] * static_cast<int>(r.p), top[1] * static_cast<int>(r.p)}, one);
  }
  return r;
}

// FNV-1a, so per-property seeds do not depend on the standard library.
std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

class Runner {
 public:
  Runner(const SuiteConfig& config, unsigned p)
      : config_(config), field_(GaloisField::get(p, config.ext_degree)), p_(p) {}

  /// Runs `check` on `samples` draws; check returns an empty string on success.
  PropertyResult run(const std::string& name, int samples,
                     const std::function<std::string(Rng&)>& check) {
    PropertyResult r{name, p_, samples, 0, {}};
    Rng rng(config_.seed ^ (name_hash(name) + p_ * 0x9e3779b97f4a7c15ULL));
    for (int s = 0; s < samples; ++s) {
      std::string failure;
      try {
        failure = check(rng);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (!failure.empty()) {
        if (r.failures == 0) r.first_failure = failure;
        ++r.failures;
      }
    }
    return r;
  }

  const GaloisField& field() const { return field_; }
  unsigned p() const { return p_; }

 private:
  const SuiteConfig& config_;
  const GaloisField& field_;
  unsigned p_;
};

}  // namespace

std::vector<PropertyResult> run_property_suite(const SuiteConfig& config) {
  std::vector<PropertyResult> out;
  for (unsigned p : config.primes) {
    Runner run(config, p);
    const GaloisField& field = run.field();
    const int n = config.samples, deg = config.max_degree;
    const Fault fault = config.fault;

    out.push_back(run.run("monomial_law", n, [&](Rng& rng) -> std::string {
      const Operator L = random_monomial(field, deg + 1, rng);
      const auto lead = leading_monomial(L);
      const auto expected = BiPoly<FieldElem>::monomial(frobenius(lead.coeff), {lead.i, lead.j});
      const auto got = computed_pdet(L, fault);
      if (got.raw == from_central(expected, p)) return {};
      return "pdet(" + to_string(L) + ") = " + to_string(got.raw, kShiftedVars);
    }));

    out.push_back(run.run("centrality", n, [&](Rng& rng) -> std::string {
      const Operator L = random_operator(field, deg, rng);
      const auto r = check_centrality(computed_pdet(L, fault));
      return r.passed ? std::string() : to_string(L) + ": " + r.messages.front();
    }));

    out.push_back(run.run("leading_term", n, [&](Rng& rng) -> std::string {
      const Operator L = random_operator(field, deg, rng);
      const auto r = check_leading(L, computed_pdet(L, fault));
      return r.passed ? std::string() : to_string(L) + ": " + r.messages.front();
    }));

    out.push_back(run.run("representation_relations", 1, [&](Rng&) -> std::string {
      const auto x = build_Xp(p, field.one());
      const auto y = build_Yp(p, field.one());
      const auto id = PolyMatrix<FieldElem>::identity(p, x.unit());
      const auto zero = PolyMatrix<FieldElem>::zeros(p, p, x.unit());
      if (!(commutator(y, x) == id)) return "[Y_p, X_p] != I";
      if (!(pow(x, p) == zero) || !(pow(y, p) == zero)) return "X_p or Y_p is not p-nilpotent";
      for (unsigned k = 1; k < p; ++k) {
        const auto rhs = pow(x, k - 1).scaled(BiPoly<FieldElem>::constant(field.from_int(k)));
        if (!(commutator(y, pow(x, k)) == rhs)) return "[Y_p, X_p^k] != k X_p^(k-1), k = " + std::to_string(k);
      }
      return {};
    }));

    out.push_back(run.run("representation_multiplicative", n, [&](Rng& rng) -> std::string {
      const Operator a = random_operator(field, 2, rng), b = random_operator(field, 2, rng);
      if (represent(a * b) == represent(a) * represent(b)) return {};
      return "represent(a*b) != represent(a)*represent(b) for a = " + to_string(a) +
             ", b = " + to_string(b);
    }));

    out.push_back(run.run("det_sum_expansion", n, [&](Rng& rng) -> std::string {
      const std::size_t size = 1 + uniform_below(rng, 3), count = 1 + uniform_below(rng, 3);
      std::vector<Matrix<FieldElem>> summands;
      auto sum = Matrix<FieldElem>::zeros(size, size, field.one());
      for (std::size_t k = 0; k < count; ++k) {
        summands.push_back(random_matrix(field, size, rng));
        sum += summands.back();
      }
      if (det_sum_expansion(summands) == det_gauss(sum)) return {};
      return "expansion differs from det of the sum (n = " + std::to_string(size) +
             ", m = " + std::to_string(count) + ")";
    }));

    out.push_back(run.run("strategy_equivalence", n, [&](Rng& rng) -> std::string {
      const Operator L = random_operator(field, deg, rng);
      if (pdet_direct(L).raw == pdet_interp(L).raw) return {};
      return "direct and interpolated p-determinants differ for " + to_string(L);
    }));

    out.push_back(run.run("layer_square", n, [&](Rng& rng) -> std::string {
      const Operator L = random_operator(field, deg, rng);
      const int d = bernstein_degree(L) + static_cast<int>(uniform_below(rng, 2));
      const int target = d + static_cast<int>(uniform_below(rng, 3));
      if (check_square(OperatorClass(L, d), target)) return {};
      return "square fails for " + to_string(L) + " from layer " + std::to_string(d) + " to " +
             std::to_string(target);
    }));

    out.push_back(run.run("trace_identity", n, [&](Rng& rng) -> std::string {
      const Operator L = random_operator(field, deg, rng);
      return check_trace_identity(L) ? std::string() : "Tr(adj(A)[A, Y_p]) != 0 for " + to_string(L);
    }));
  }
  return out;
}

}  // namespace weylcurve
