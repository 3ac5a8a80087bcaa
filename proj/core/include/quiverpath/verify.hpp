#pragma once
// Named property suites over the whole library, shared by the command line
// verify subcommand and the acceptance runner.  Each suite checks one
// cross-module identity at desk scale and reports the first counterexample
// it finds.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "quiverpath/partitions.hpp"

namespace quiverpath::verify {

struct PropertyResult {
  std::string name;
  bool pass = false;
  long long cases = 0;
  std::string counterexample;  // empty when pass holds
  double seconds = 0.0;
};

struct Options {
  std::uint64_t seed = 1;
  int jobs = 1;
  // Fault injection hook for the pairing suite: when set, replaces the
  // diagonal eigenvalue delta_k(Y) computed at the given rank, so a corrupted
  // value surfaces as a named failure.
  std::function<long long(const YoungDiagram&, int, long long)>
      diagonal_override;
};

PropertyResult energy_matches_base_dimension(const Options& opts);
PropertyResult diagonal_matches_cartan_pairing(const Options& opts);
PropertyResult fock_commutation_relations(const Options& opts);
PropertyResult single_charge_classification(const Options& opts);
PropertyResult highest_lift_calculus(const Options& opts);
PropertyResult weight_preserving_bijection(const Options& opts);
PropertyResult unreduced_enumeration_count(const Options& opts);
PropertyResult moment_map_exactness(const Options& opts);
PropertyResult stability_agreement(const Options& opts);

// All nine suites in a fixed order; opts.jobs > 1 runs them in waves of that
// size with the result order unchanged.
std::vector<PropertyResult> run_all(const Options& opts);

}  // namespace quiverpath::verify
