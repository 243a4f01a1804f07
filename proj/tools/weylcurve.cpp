// weylcurve: command-line front end.
//
// Exit codes: 0 success, 1 check failure, 2 usage or input error, 3 cap refusal.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weylcurve/curves.hpp"
#include "weylcurve/io.hpp"
#include "weylcurve/oracles.hpp"
#include "weylcurve/pdet.hpp"
#include "weylcurve/poly_parse.hpp"
#include "weylcurve/symplectic.hpp"
#include "weylcurve/verify.hpp"
#include "weylcurve/version.hpp"
#include "weylcurve/weyl.hpp"

namespace wc = weylcurve;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct RunConfig {
  unsigned p = 2;
  bool p_given = false;
  unsigned m = 1;
  int d = 2;
  std::uint64_t seed = 1;
  std::uint64_t cap = wc::kDefaultEnumerationCap;
  std::string format = "text";
  std::string strategy = "direct";
  bool timing = false;
  std::string fault;
};

wc::Json config_json(const RunConfig& c) {
  return {{"version", wc::kVersion}, {"p", c.p}, {"m", c.m},   {"d", c.d},
          {"seed", c.seed},          {"cap", c.cap}, {"strategy", c.strategy}};
}

std::string config_line(const RunConfig& c) {
  std::ostringstream s;
  s << "# weylcurve " << wc::kVersion << " p=" << c.p << " m=" << c.m << " d=" << c.d
    << " seed=" << c.seed << " cap=" << c.cap << " strategy=" << c.strategy;
  return s.str();
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

const wc::GaloisField& field_of(const RunConfig& c) { return wc::GaloisField::get(c.p, c.m); }

// Emits a finished report in the requested format. `text` is used for text
// and csv when no csv rendering exists.
void emit(const RunConfig& c, wc::Json report, const std::string& text, const Timer& timer,
          const std::string& csv = {}) {
  if (c.format == "json") {
    wc::Json out = {{"config", config_json(c)}};
    for (auto& [k, v] : report.items()) out[k] = v;
    if (c.timing) out["wall_time_s"] = timer.seconds();
    std::cout << out.dump(2) << '\n';
  } else if (c.format == "csv" && !csv.empty()) {
    std::cout << config_line(c) << '\n' << csv;
  } else {
    std::cout << config_line(c) << '\n' << text;
    if (c.timing) std::cout << "wall time: " << timer.seconds() << " s\n";
  }
}

int cmd_pdet(const RunConfig& c, const std::string& text, bool verify) {
  const Timer timer;
  const wc::Operator L = wc::parse_op(text, field_of(c));
  if (L.zero()) throw wc::ZeroInput("the zero operator has no p-determinant");

  std::optional<wc::PDetResult<wc::FieldElem>> direct, interp;
  if (c.strategy == "direct" || c.strategy == "both") direct = wc::pdet_direct(L);
  if (c.strategy == "interp" || c.strategy == "both") interp = wc::pdet_interp(L);
  auto result = direct ? *direct : *interp;
  const wc::Fault fault = wc::parse_fault(c.fault);
  if (fault == wc::Fault::centrality) {
    result.raw.add_term({1, 0}, L.unit().field().one());
  } else if (fault == wc::Fault::leading) {
    const auto top = result.central.leading().first;
    result.central.add_term(top, L.unit().field().one());
  }

  bool ok = true;
  wc::Json report = {{"operator", wc::to_string(L)}, {"operator_degree", wc::bernstein_degree(L)}};
  const wc::Json details = wc::to_json(result);
  for (const auto& [k, v] : details.items()) report[k] = v;
  std::ostringstream out;
  out << "operator: " << wc::to_string(L) << '\n'
      << "raw: " << wc::to_string(result.raw, wc::kShiftedVars) << '\n'
      << "central: " << wc::to_string(result.central, wc::kCentralVars) << '\n'
      << "degree: operator " << wc::bernstein_degree(L) << ", central " << result.central.degree()
      << '\n';
  if (direct && interp) {
    const bool agree = direct->raw == interp->raw;
    ok = ok && agree;
    report["strategies_agree"] = agree;
    out << "strategies agree: " << (agree ? "true" : "false") << '\n';
  }
  if (verify) {
    const auto centrality = wc::check_centrality(result);
    const auto leading = wc::check_leading(L, result);
    const bool trace = wc::check_trace_identity(L);
    ok = ok && centrality.passed && leading.passed && trace;
    report["checks"] = {{"centrality", wc::to_json(centrality)},
                        {"leading", wc::to_json(leading)},
                        {"trace_identity", trace}};
    const auto line = [&out](const char* name, const wc::CheckReport& r) {
      out << "check " << name << ": " << (r.passed ? "pass" : "FAIL") << '\n';
      for (const auto& m : r.messages) out << "  " << m << '\n';
    };
    line("centrality", centrality);
    line("leading", leading);
    out << "check trace_identity: " << (trace ? "pass" : "FAIL") << '\n';
  }
  emit(c, report, out.str(), timer);
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const RunConfig& c, const std::vector<unsigned>& primes, int samples) {
  const Timer timer;
  wc::SuiteConfig suite;
  suite.primes = primes;
  suite.ext_degree = c.m;
  suite.samples = samples;
  suite.seed = c.seed;
  suite.fault = wc::parse_fault(c.fault);
  const auto results = wc::run_property_suite(suite);

  bool ok = true;
  wc::Json rows = wc::Json::array();
  std::ostringstream text, csv;
  csv << "property,p,samples,failures,result\n";
  for (const auto& r : results) {
    ok = ok && r.passed();
    rows.push_back({{"property", r.name},
                    {"p", r.p},
                    {"samples", r.samples},
                    {"failures", r.failures},
                    {"passed", r.passed()},
                    {"first_failure", r.first_failure}});
    text << (r.passed() ? "PASS " : "FAIL ") << r.name << " p=" << r.p << " samples=" << r.samples
         << " failures=" << r.failures << '\n';
    if (!r.passed()) text << "  " << r.first_failure << '\n';
    csv << r.name << ',' << r.p << ',' << r.samples << ',' << r.failures << ','
        << (r.passed() ? "pass" : "fail") << '\n';
  }
  text << (ok ? "all properties passed\n" : "some properties FAILED\n");
  emit(c, {{"properties", rows}, {"passed", ok}}, text.str(), timer, csv.str());
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_enumerate(const RunConfig& c, bool images) {
  const Timer timer;
  const auto study = wc::image_study(c.p, c.m, c.d, c.cap);
  std::ostringstream text;
  text << "domain classes: " << study.domain_size << '\n'
       << "target points: " << study.target_size << '\n'
       << "image size: " << study.image_size() << '\n'
       << "coverage: " << study.coverage() << '\n'
       << "fiber histogram (size: curves):\n";
  for (const auto& [size, count] : study.histogram) text << "  " << size << ": " << count << '\n';
  if (images)
    for (const auto& [curve, size] : study.fibers)
      text << "  [" << wc::to_string(curve) << "] fiber " << size << '\n';
  emit(c, wc::to_json(study, images), text.str(), timer, wc::histogram_csv(study));
  return kExitOk;
}

int cmd_fiber(const RunConfig& c, const std::string& curve_text) {
  const Timer timer;
  const auto& field = field_of(c);
  const auto f = wc::parse_poly(curve_text, field.one(), wc::kCentralVars);
  if (f.zero()) throw wc::ZeroInput("the zero polynomial defines no curve class");
  const wc::PlaneCurve curve(f, std::max(c.d, f.degree()));
  const auto classes = wc::fiber(curve, c.d, c.cap);
  std::ostringstream text, csv;
  text << "curve: " << wc::to_string(curve) << '\n' << "fiber size: " << classes.size() << '\n';
  csv << "operator\n";
  wc::Json list = wc::Json::array();
  for (const auto& k : classes) {
    text << "  " << wc::to_string(k) << '\n';
    csv << '"' << wc::to_string(k.representative()) << "\"\n";
    list.push_back(wc::to_string(k.representative()));
  }
  emit(c, {{"curve", wc::to_json(curve)}, {"fiber_size", classes.size()}, {"fiber", list}},
       text.str(), timer, csv.str());
  return kExitOk;
}

int cmd_family(const RunConfig& c, const std::string& text_in, std::optional<std::size_t> samples) {
  const Timer timer;
  const auto& field = field_of(c);
  const auto family = wc::parse_family(text_in, field);
  const auto report = wc::family_image(family, samples.value_or(field.order()));
  std::ostringstream text, csv;
  text << "family: " << wc::to_string(family.coefficients(), wc::kWeylVars) << '\n'
       << "layer: " << report.layer << '\n';
  csv << "t,curve\n";
  for (std::size_t k = 0; k < report.parameters.size(); ++k) {
    const std::string curve = report.curves[k] ? wc::to_string(*report.curves[k]) : "skipped";
    text << "  t = " << wc::to_string(report.parameters[k]) << ": " << curve << '\n';
    csv << '"' << wc::to_string(report.parameters[k]) << "\",\"" << curve << "\"\n";
  }
  text << "distinct classes: " << report.distinct.size() << '\n'
       << "nondegenerate: " << (report.nondegenerate() ? "true" : "false") << '\n';
  emit(c, wc::to_json(report), text.str(), timer, csv.str());
  return kExitOk;
}

int cmd_jacobian(const RunConfig& c, const std::string& text_in) {
  const Timer timer;
  const wc::Operator L = wc::parse_op(text_in, field_of(c));
  if (L.zero()) throw wc::ZeroInput("Jacobian rank at the zero operator");
  const int d = std::max(c.d, wc::bernstein_degree(L));
  const auto r = wc::jacobian_rank(L, d);
  std::ostringstream text;
  text << "operator: " << wc::to_string(L) << '\n'
       << "layer: " << d << '\n'
       << "dimension: " << r.dimension << '\n'
       << "affine rank: " << r.affine << '\n'
       << "projective rank: " << r.projective << '\n';
  wc::Json report = wc::to_json(r);
  report["operator"] = wc::to_string(L);
  report["layer"] = d;
  emit(c, report, text.str(), timer);
  return kExitOk;
}

template <class R>
void describe_map(const wc::PolyMap2<R>& map, wc::Keep keep, std::ostream& text, wc::Json& report) {
  const bool ok = wc::is_symplectomorphism(map);
  const auto ideal = wc::graph_ideal(map);
  const auto by_resultant = wc::project_family(ideal, keep);
  const auto by_substitution = wc::project_family_by_substitution(ideal, keep);
  const bool agree = by_resultant == by_substitution;
  const auto bracket = wc::poisson_bracket(map.f1, map.f2);
  text << "map: " << wc::to_string(map) << '\n'
       << "bracket {F1, F2}: " << wc::to_string(bracket, wc::kMapVars) << '\n'
       << "symplectomorphism: " << (ok ? "true" : "false") << '\n'
       << "graph ideal: (" << wc::to_string(ideal.f1, wc::kGraphVars) << ", "
       << wc::to_string(ideal.f2, wc::kGraphVars) << ")\n"
       << "projected family (parameter x2): " << wc::to_string(by_resultant) << '\n'
       << "resultant and substitution agree: " << (agree ? "true" : "false") << '\n';
  report["map"] = wc::to_string(map);
  report["bracket"] = wc::to_string(bracket, wc::kMapVars);
  report["symplectomorphism"] = ok;
  report["graph_ideal"] = {wc::to_string(ideal.f1, wc::kGraphVars),
                           wc::to_string(ideal.f2, wc::kGraphVars)};
  report["family"] = wc::to_string(by_resultant);
  report["family_parameter"] = "x2";
  report["projections_agree"] = agree;
}

int cmd_sympl(const RunConfig& c, const std::string& text_in, const std::string& keep_name,
              const std::optional<std::string>& parameter) {
  const Timer timer;
  if (keep_name != "y1" && keep_name != "y2") throw CLI::ValidationError("--keep", "expected y1 or y2");
  const wc::Keep keep = keep_name == "y1" ? wc::Keep::y1 : wc::Keep::y2;
  std::ostringstream text;
  wc::Json report = {{"coefficients", c.p_given ? "finite field" : "rational"}};
  if (!c.p_given) {
    if (parameter) throw CLI::ValidationError("--param", "the fiber search needs --p");
    describe_map(wc::parse_map(text_in, wc::Rational(1)), keep, text, report);
    emit(c, report, text.str(), timer);
    return kExitOk;
  }
  const auto& field = field_of(c);
  const auto map = wc::parse_map(text_in, field.one());
  describe_map(map, keep, text, report);
  if (parameter) {
    const auto run = wc::symplectic_pipeline(map, keep, field.parse(*parameter), c.d, c.cap);
    text << "parameter x2 = " << wc::to_string(run.parameter) << '\n';
    report["parameter"] = wc::to_json(run.parameter);
    if (run.curve) {
      text << "curve: " << wc::to_string(*run.curve) << '\n'
           << "fiber size: " << run.fiber.size() << '\n';
      for (const auto& k : run.fiber) text << "  " << wc::to_string(k) << '\n';
      wc::Json list = wc::Json::array();
      for (const auto& k : run.fiber) list.push_back(wc::to_string(k.representative()));
      report["curve"] = wc::to_json(*run.curve);
      report["fiber"] = list;
    } else {
      text << "curve: vanishes identically at this parameter\n";
      report["curve"] = nullptr;
    }
  }
  emit(c, report, text.str(), timer);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl-algebra p-determinants and planar curves over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", wc::kVersion);

  RunConfig c;
  app.add_option("--p", c.p, "characteristic (prime)")->check(CLI::PositiveNumber);
  app.add_option("--ext-degree", c.m, "extension degree m of F_{p^m}")->check(CLI::PositiveNumber);
  app.add_option("--d", c.d, "degree layer")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", c.seed, "random seed");
  app.add_option("--cap", c.cap, "enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--strategy", c.strategy, "p-determinant strategy")
      ->check(CLI::IsMember({"direct", "interp", "both"}));
  app.add_flag("--timing", c.timing, "include wall time in reports");
  app.add_option("--inject-fault", c.fault, "corrupt p-determinants (centrality|leading)")
      ->check(CLI::IsMember({"none", "centrality", "leading"}));

  std::string op_text;
  bool verify_checks = false;
  auto* pdet = app.add_subcommand("pdet", "p-determinant of an operator");
  pdet->add_option("operator", op_text, "operator, e.g. \"x*y + 1\"")->required();
  pdet->add_flag("--verify", verify_checks, "run the centrality, leading-term and trace checks");

  std::vector<unsigned> primes{2, 3, 5};
  int samples = 20;
  auto* verify = app.add_subcommand("verify", "seeded property suite");
  verify->add_option("--primes", primes, "characteristics to test")->delimiter(',');
  verify->add_option("--samples", samples, "samples per property")->check(CLI::PositiveNumber);

  bool images = false;
  auto* enumerate = app.add_subcommand("enumerate", "image of an operator layer");
  enumerate->add_flag("--images", images, "list every image curve");

  std::string curve_text;
  auto* fiber = app.add_subcommand("fiber", "operator classes mapping to a curve");
  fiber->add_option("--curve", curve_text, "curve polynomial in z1, z2")->required();

  std::string family_text;
  std::optional<std::size_t> family_samples;
  auto* family = app.add_subcommand("family", "image of a one-parameter family");
  family->add_option("family", family_text, "operator with coefficients in t")->required();
  family->add_option("--samples", family_samples, "number of parameter values");

  std::string jac_text;
  auto* jacobian = app.add_subcommand("jacobian", "rank of the differential at an operator");
  jacobian->add_option("operator", jac_text, "operator of degree <= d")->required();

  std::string map_text, keep = "y1";
  std::optional<std::string> parameter;
  auto* sympl = app.add_subcommand("sympl", "symplectic check and graph projection of a map");
  sympl->add_option("map", map_text, "\"F1, F2\" in x1, x2")->required();
  sympl->add_option("--keep", keep, "kept target coordinate (y1|y2)");
  sympl->add_option("--param", parameter, "specialize x2 and search the fiber (needs --p)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  c.p_given = app.count("--p") > 0;

  try {
    if (!wc::is_prime(c.p)) throw CLI::ValidationError("--p", std::to_string(c.p) + " is not prime");
    if (*pdet) return cmd_pdet(c, op_text, verify_checks);
    if (*verify) return cmd_verify(c, primes, samples);
    if (*enumerate) return cmd_enumerate(c, images);
    if (*fiber) return cmd_fiber(c, curve_text);
    if (*family) return cmd_family(c, family_text, family_samples);
    if (*jacobian) return cmd_jacobian(c, jac_text);
    if (*sympl) return cmd_sympl(c, map_text, keep, parameter);
  } catch (const wc::CapExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitCap;
  } catch (const wc::InvariantViolation& e) {
    std::cerr << "check failure: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const wc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const wc::ZeroInput& e) {
    std::cerr << "zero input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
