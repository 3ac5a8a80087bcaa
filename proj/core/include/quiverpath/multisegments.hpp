#pragma once
// Segment multisets, aperiodicity, and the greedy decomposition of a
// multiset into an ordered tuple of charged Maya sequences.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "quiverpath/partitions.hpp"

namespace quiverpath {

// Interval of quiver vertices [lo, hi], lo <= hi.
struct Segment {
  long long lo = 0;
  long long hi = 0;

  Segment() = default;
  Segment(long long lo_, long long hi_);
  long long length() const { return hi - lo + 1; }
  auto operator<=>(const Segment&) const = default;
};

// Vertex set selector: the doubly infinite chain, or the cycle of rank n
// (vertices mod n+1, segments up to simultaneous translation by n+1).
class SegmentMode {
public:
  static SegmentMode infinite() { return SegmentMode(-1); }
  static SegmentMode cyclic(int rank);

  bool is_cyclic() const { return rank_ >= 0; }
  int rank() const;
  int period() const { return rank() + 1; }

  auto operator<=>(const SegmentMode&) const = default;

private:
  explicit SegmentMode(int rank) : rank_(rank) {}
  int rank_;
};

// Finitely supported multiplicity function on segments.  In cyclic mode each
// translation class is stored by the representative with lo in [0, n].
class SegmentMultiset {
public:
  explicit SegmentMultiset(SegmentMode mode) : mode_(mode) {}

  SegmentMode mode() const { return mode_; }
  Segment canonical(Segment s) const;
  void add(Segment s, long long mult = 1);
  long long count(Segment s) const;
  const std::map<Segment, long long>& support() const { return mult_; }

  bool empty() const { return mult_.empty(); }
  long long total_length() const;  // sum of length * multiplicity

  bool operator==(const SegmentMultiset&) const = default;

private:
  SegmentMode mode_;
  std::map<Segment, long long> mult_;
};

// Ordered tuple (m_1, ..., m_l) of charged Maya sequences with weakly
// increasing charges.
class MayaTuple {
public:
  MayaTuple(SegmentMode mode, std::vector<ChargedMaya> entries);

  SegmentMode mode() const { return mode_; }
  const std::vector<ChargedMaya>& entries() const { return entries_; }
  int level() const { return static_cast<int>(entries_.size()); }
  std::vector<long long> charges() const;
  long long total_size() const;

  bool operator==(const MayaTuple&) const = default;
  auto operator<=>(const MayaTuple&) const = default;

private:
  SegmentMode mode_;
  std::vector<ChargedMaya> entries_;
};

// Multiset of (top-edge y-coordinate, row length) pairs.
class RowMultiset {
public:
  void add(long long y, long long len, long long mult = 1);
  const std::map<std::pair<long long, long long>, long long>& support() const {
    return mult_;
  }
  bool operator==(const RowMultiset&) const = default;

private:
  std::map<std::pair<long long, long long>, long long> mult_;
};

// Rows of (Y, charge) as segments: row i covers [charge+1-i, charge+l_i-i].
SegmentMultiset segments_of_charged_young(const YoungDiagram& y, long long charge,
                                          SegmentMode mode);

// Union with multiplicity over the entries.
SegmentMultiset segments_of_tuple(const MayaTuple& m);

// Cyclic mode only: true iff no length has segments at every residue class.
bool is_aperiodic(const SegmentMultiset& f);

// Vertex dimension counts of f.
DimVector dim_vector(const SegmentMultiset& f);

// The greedy decomposition: visit left-end positions from the largest charge
// downward, charges in order at each position, so the p-th row taken for
// charge g sits at leftmost vertex g - (p-1) and is the longest remaining
// segment there; a charge with no match drops out for good.  Succeeds iff the
// multiset is exhausted and the collected rows form diagrams whose tuple is
// chain-ordered; failure means f admits no such decomposition.
std::optional<MayaTuple> canonical_tuple(const SegmentMultiset& f,
                                         const std::vector<long long>& charges);

// Rows of all entries at absolute heights: entry (Y_j, g_j), row i of length
// l_i contributes (g_j - i + 1, l_i).
RowMultiset row_multiset(const MayaTuple& m);

// Cyclic mode only: true iff the row multiset contains no n+1 equal-length
// rows at consecutive heights.
bool is_n_reduced_tuple(const MayaTuple& m);

// m_1 <= ... <= m_l, and in cyclic mode also m_l <= m_1 shifted by n+1.
bool tuple_is_chain(const MayaTuple& m);

}  // namespace quiverpath
