#pragma once
// Exact-rational quiver representations of the doubled cyclic or windowed
// linear quiver: moment map, nilpotency, conormal sampling, stability.

#include <cstdint>
#include <map>
#include <vector>

#include "quiverpath/multisegments.hpp"
#include "quiverpath/ratmat.hpp"
#include "quiverpath/weights.hpp"

namespace quiverpath {

// Clockwise arrows run i -> i-1 (down), their reverses i -> i+1 (up).  The
// vertex set is the full cycle in cyclic mode and the support window of the
// spaces otherwise; everything outside the window is zero dimensional, so
// boundary maps simply have zero rows or columns.
class QuiverRep {
public:
  QuiverRep(SegmentMode mode, const DimVector& spaces);

  SegmentMode mode() const { return mode_; }
  long long window_lo() const { return lo_; }
  long long window_hi() const { return hi_; }
  long long dim(long long vertex) const;
  long long total_dim() const;
  DimVector spaces() const;

  // x_{i -> i-1} and x_{i -> i+1}.  The vertex is reduced mod the period in
  // cyclic mode and must lie inside the window otherwise.
  const RatMatrix& down(long long vertex) const;
  RatMatrix& down(long long vertex);
  const RatMatrix& up(long long vertex) const;
  RatMatrix& up(long long vertex);

  bool up_is_zero() const;
  bool operator==(const QuiverRep&) const = default;

private:
  size_t index(long long vertex) const;
  SegmentMode mode_;
  long long lo_ = 0;
  long long hi_ = -1;
  std::vector<long long> dims_;
  std::vector<RatMatrix> down_;
  std::vector<RatMatrix> up_;
};

struct MomentValue {
  std::map<long long, RatMatrix> psi;  // square block at each window vertex
  bool is_zero() const;
};

// Direct sum of string representations, one block per segment copy: the down
// maps send each basis vector to its left neighbour, the up maps are zero.
QuiverRep build_rep(const SegmentMultiset& f);

// psi_i = down_{i+1} up_i - up_{i-1} down_i, exactly.
MomentValue moment_map(const QuiverRep& x);

// True iff every composable product of exactly max_len arrow maps vanishes.
// Products are tracked as a span per length, so distinct words cannot cancel
// against each other.
bool is_nilpotent(const QuiverRep& x, long long max_len);

// x_omega plus an up part drawn from the exact null space of the conormal
// constraints: the up part must pair to zero with every tangent direction of
// the base-change orbit of the down part, equivalently the moment map of the
// sum must vanish.  Coefficients are pseudo-random small rationals from seed;
// the result always has exactly zero moment map.
QuiverRep conormal_sample(const QuiverRep& x_omega, std::uint64_t seed);

// Dimension of that null space.
long long conormal_dimension(const QuiverRep& x_omega);

// True iff at every vertex dim(ker down_i intersect ker up_i) <= w_i.
bool stability_test(const QuiverRep& x, const DimVector& w);

}  // namespace quiverpath
