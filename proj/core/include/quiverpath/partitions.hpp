#pragma once
// Young diagrams, charged Maya sequences and the level-1 path model.

#include <functional>
#include <optional>
#include <vector>

#include "quiverpath/weights.hpp"

namespace quiverpath {

// Partition with weakly decreasing positive parts.  The box in row i (from
// the top, 1-based) and column c has content c - i; a charge shifts every
// content by the same amount.
class YoungDiagram {
public:
  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> parts);

  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int i) const;  // 1-based, 0 beyond the last row
  const std::vector<int>& parts() const { return parts_; }
  long long size() const;
  bool empty() const { return parts_.empty(); }

  // Number of parts strictly greater than t (the conjugate part t+1).
  int parts_greater_than(long long t) const;

  // True iff no part value occurs more than n times.
  bool is_n_reduced(int n) const;

  bool contains(const YoungDiagram& other) const;

  // Unique diagram obtained by adding (removing) a box of content k, if the
  // result is again a diagram.  Charge 0 contents.
  std::optional<YoungDiagram> with_box_of_content(long long k) const;
  std::optional<YoungDiagram> without_box_of_content(long long k) const;

  auto operator<=>(const YoungDiagram&) const = default;

private:
  std::vector<int> parts_;
};

// Charged Maya sequence of (Y, gamma): the bijection m : Z -> Z that is
// strictly increasing on each of j >= 0 and j < 0, determined by
//   m(-i) = gamma + l_i - i   (i >= 1, parts read as 0 beyond the last row)
// with the non-negative branch enumerating the complement in increasing
// order.  m(j) = j + charge once j >= stabilization_bound().
class ChargedMaya {
public:
  ChargedMaya() = default;
  ChargedMaya(YoungDiagram shape, long long charge);

  const YoungDiagram& shape() const { return shape_; }
  long long charge() const { return charge_; }

  long long eval(long long j) const;
  ChargedMaya shifted(long long r) const;  // shape kept, charge + r
  long long stabilization_bound() const;

  bool operator==(const ChargedMaya&) const = default;
  auto operator<=>(const ChargedMaya&) const = default;

private:
  YoungDiagram shape_;
  long long charge_ = 0;
};

// Dominance order on charged Maya sequences: a <= b iff a.eval(j) <= b.eval(j)
// for every j >= 0.  Decided on a finite window; the equivalent row
// containment test is run as an internal consistency assertion.
bool maya_leq(const ChargedMaya& a, const ChargedMaya& b);

// Rebuilds (Y, gamma) from the values m(0), m(1), ..., m(J) provided J
// reaches the stabilization range (the last two values have equal offset).
// Throws std::invalid_argument if the values are not such a prefix.
ChargedMaya maya_from_prefix(const std::vector<long long>& values);

// Eventually periodic residue sequence: entry(j) = prefix[j] for j inside
// the stored prefix and (j + offset) mod (n+1) beyond it.  offset == 0 gives
// the ground sequence j mod (n+1).
class BasicPath {
public:
  BasicPath(int rank, int offset, std::vector<int> entries);  // trims the tail

  int rank() const { return rank_; }
  int offset() const { return offset_; }
  int entry(long long j) const;
  const std::vector<int>& prefix() const { return prefix_; }

  bool operator==(const BasicPath&) const = default;

private:
  int rank_;
  int offset_;
  std::vector<int> prefix_;
};

// Residues of the Maya values of m: entry(j) = m(j) mod (n+1).
BasicPath basic_path(const ChargedMaya& m, int rank);

// Content residue counts of the boxes of Y (charge 0): cyclic mod n+1 when
// rank is given, over Z otherwise.
DimVector dim_vector_level1(const YoungDiagram& y, std::optional<int> rank);

// Change of the weight h-component when a charge-0 box of content in residue
// class k is added to Y, rank n:
//   delta_k(Y) = d(k, -s) + sum_i (d(k, l_i - i + 1) - d(k, l_i - i))
// where d(k, t) = 1 iff k == t mod (n+1) and s = rows(Y).
long long delta_weight(const YoungDiagram& y, int rank, long long k);

// Level-1 energy of the basic path of (Y, 0):
//   omega = sum_{k >= 1} k * (H(entry(k-1), entry(k)) - H(ground pair))
// with H(a, b) = 1 iff a >= b.  Requires Y n-reduced (std::domain_error
// otherwise); the sum is finite because the path agrees with the ground
// sequence beyond the largest part.
long long energy_level1(const YoungDiagram& y, int rank);

// All partitions of exactly n, then of at most n, in lexicographic order of
// the part lists.
std::vector<YoungDiagram> partitions_of(int n);
std::vector<YoungDiagram> partitions_up_to(int n);

// Number of integers in [lo, hi] congruent to r mod m (m >= 1).
long long count_congruent(long long lo, long long hi, long long r, long long m);

}  // namespace quiverpath
