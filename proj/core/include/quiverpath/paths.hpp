#pragma once
// Arbitrary-level path model over the cyclic quiver: ground paths, the
// assignment-problem step energy, path weights, lifts to Maya tuples,
// n-reduction and energy-bounded enumeration.

#include <optional>
#include <vector>

#include "quiverpath/multisegments.hpp"
#include "quiverpath/weights.hpp"

namespace quiverpath {

// One step of a level-l path: l residues in [0, n], sorted ascending.
using PathStep = std::vector<int>;

// Eventually-ground sequence of steps: step(k) equals the stored prefix for
// k < prefix length and the ground step of the highest weight beyond it.
// The constructor sorts each step and trims trailing ground steps, so equal
// paths compare equal.
class LevelPath {
 public:
  LevelPath(HighestWeight hw, std::vector<PathStep> prefix);

  const HighestWeight& highest_weight() const { return hw_; }
  int rank() const { return hw_.rank(); }
  int level() const { return hw_.level(); }

  PathStep step(long long k) const;
  PathStep ground_step(long long k) const;
  // Steps at and beyond this index are ground.
  long long agreement_bound() const {
    return static_cast<long long>(prefix_.size());
  }
  const std::vector<PathStep>& prefix() const { return prefix_; }

  bool operator==(const LevelPath&) const = default;

 private:
  HighestWeight hw_;
  std::vector<PathStep> prefix_;
};

// Minimum over assignments of the number of weakly descending pairs:
//   min over permutations s of sum_i [alpha_i >= beta_{s(i)}],
// residues compared as integers in [0, n]. Exhaustive search for sizes up to
// eight, maximum-matching solver above.
long long h_energy(const std::vector<int>& alpha, const std::vector<int>& beta,
                   int rank);

namespace detail {
// Both h_energy strategies, exposed for cross-validation.
long long h_energy_exhaustive(const std::vector<int>& alpha,
                              const std::vector<int>& beta);
long long h_energy_matching(const std::vector<int>& alpha,
                            const std::vector<int>& beta);
}  // namespace detail

LevelPath ground_path(const HighestWeight& hw);

// omega(eta): sum over k >= 1 of k times the step-energy excess over the
// ground path. Finite by the agreement bound.
long long path_energy(const LevelPath& eta);

// The weight of eta: h-part is the charge residue profile corrected by the
// signed step deviations under pi(eps_mu) = Lambda_{mu+1} - Lambda_mu,
// degree is -path_energy(eta).
AffineWeight path_weight(const LevelPath& eta);

// Step k is the multiset of Maya values of the entries at k, mod n+1.
// Cyclic mode only.
LevelPath path_of_tuple(const MayaTuple& m);

// True iff m is chain-ordered and path_of_tuple(m) equals eta. The charges
// of m must match eta's highest weight.
bool is_lift(const MayaTuple& m, const LevelPath& eta);

// Removes full residue runs (one segment of every residue class, equal
// lengths) and re-canonicalizes until the tuple is n-reduced. Keeps the
// path; weakly increases the tuple in the product order. Input must be
// chain-ordered and cyclic.
MayaTuple n_reduce(const MayaTuple& m);

// Product order on tuples with equal charges: entrywise maya_leq.
bool tuple_leq(const MayaTuple& a, const MayaTuple& b);

// Lowering operator at residue r: the signature rule over the step factors
// (position 0 is the rightmost tensor factor) picks the acting position, and
// one entry r of that step becomes r-1 mod n+1. Returns nothing when every
// plus sign cancels. Raises path_energy by exactly one when r is 0 and
// preserves it otherwise; shifts the weight by minus the r-th simple root.
// Both invariants are rechecked on every call. Supported for level one at
// any rank and for rank one at any level; other shapes throw
// std::domain_error, because there the step energy no longer grades the
// operators and the closure below would not terminate.
std::optional<LevelPath> crystal_lower(const LevelPath& eta, int r);

// All paths of the highest weight with path_energy <= max_energy, each once,
// sorted by (energy, prefix). Breadth-first closure of the ground path under
// crystal_lower, pruning above the energy bound; complete because raising
// never increases the energy, so every admissible path is reached through
// admissible ones. Same supported shapes as crystal_lower.
std::vector<LevelPath> enumerate_paths(const HighestWeight& hw,
                                       long long max_energy);

// The unique n-reduced chain-ordered lift of eta. Found as the unique lift
// of minimal total size, which the product order forces to dominate every
// other lift; the target size is solved exactly from the path weight.
MayaTuple highest_lift(const LevelPath& eta);

// All chain-ordered tuples with the given charges and v_0 <= max_energy,
// restricted to n-reduced tuples when reduced is set. Sorted by (v_0,
// entries).
std::vector<MayaTuple> enumerate_components(const HighestWeight& hw,
                                            long long max_energy, bool reduced);

}  // namespace quiverpath
