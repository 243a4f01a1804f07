#pragma once

// Seeded property suite over random operators, shared by the CLI `verify`
// subcommand. Each property reports how many samples it checked and the
// first failure it saw.

#include <cstdint>
#include <string>
#include <vector>

namespace weylcurve {

/// Deliberate corruption of computed p-determinants, for negative controls.
enum class Fault { none, centrality, leading };

Fault parse_fault(const std::string& name);

struct SuiteConfig {
  std::vector<unsigned> primes{2, 3, 5};
  unsigned ext_degree = 1;
  int max_degree = 3;
  int samples = 20;
  std::uint64_t seed = 1;
  Fault fault = Fault::none;
};

struct PropertyResult {
  std::string name;
  unsigned p = 0;
  int samples = 0;
  int failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

std::vector<PropertyResult> run_property_suite(const SuiteConfig& config);

}  // namespace weylcurve
