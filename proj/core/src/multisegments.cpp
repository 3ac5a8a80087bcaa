#include "quiverpath/multisegments.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace quiverpath {

static long long floor_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

Segment::Segment(long long lo_, long long hi_) : lo(lo_), hi(hi_) {
  if (lo > hi) throw std::invalid_argument("Segment: lo must be <= hi");
}

SegmentMode SegmentMode::cyclic(int rank) {
  if (rank < 1) throw std::invalid_argument("SegmentMode: rank must be >= 1");
  return SegmentMode(rank);
}

int SegmentMode::rank() const {
  if (rank_ < 0) throw std::logic_error("SegmentMode: no rank in infinite mode");
  return rank_;
}

Segment SegmentMultiset::canonical(Segment s) const {
  if (!mode_.is_cyclic()) return s;
  long long shift = floor_mod(s.lo, mode_.period()) - s.lo;
  return Segment(s.lo + shift, s.hi + shift);
}

void SegmentMultiset::add(Segment s, long long mult) {
  if (mult < 0) throw std::invalid_argument("SegmentMultiset::add: negative multiplicity");
  if (mult == 0) return;
  Segment c = canonical(s);
  mult_[c] += mult;
}

long long SegmentMultiset::count(Segment s) const {
  auto it = mult_.find(canonical(s));
  return it == mult_.end() ? 0 : it->second;
}

long long SegmentMultiset::total_length() const {
  long long t = 0;
  for (const auto& [s, m] : mult_) t += s.length() * m;
  return t;
}

MayaTuple::MayaTuple(SegmentMode mode, std::vector<ChargedMaya> entries)
    : mode_(mode), entries_(std::move(entries)) {
  for (size_t j = 1; j < entries_.size(); ++j)
    if (entries_[j - 1].charge() > entries_[j].charge())
      throw std::invalid_argument("MayaTuple: charges must be weakly increasing");
}

std::vector<long long> MayaTuple::charges() const {
  std::vector<long long> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.charge());
  return out;
}

long long MayaTuple::total_size() const {
  long long t = 0;
  for (const auto& e : entries_) t += e.shape().size();
  return t;
}

void RowMultiset::add(long long y, long long len, long long mult) {
  if (len <= 0) throw std::invalid_argument("RowMultiset: length must be positive");
  if (mult != 0) mult_[{y, len}] += mult;
}

SegmentMultiset segments_of_charged_young(const YoungDiagram& y, long long charge,
                                          SegmentMode mode) {
  SegmentMultiset f(mode);
  for (int i = 1; i <= y.rows(); ++i)
    f.add(Segment(charge + 1 - i, charge + y.part(i) - i));
  return f;
}

SegmentMultiset segments_of_tuple(const MayaTuple& m) {
  SegmentMultiset f(m.mode());
  for (const auto& e : m.entries())
    for (int i = 1; i <= e.shape().rows(); ++i)
      f.add(Segment(e.charge() + 1 - i, e.charge() + e.shape().part(i) - i));
  return f;
}

bool is_aperiodic(const SegmentMultiset& f) {
  if (!f.mode().is_cyclic())
    throw std::logic_error("is_aperiodic: undefined in infinite mode");
  long long period = f.mode().period();
  // Group the residue classes present for each segment length.
  std::map<long long, std::set<long long>> los_by_length;
  for (const auto& [s, mult] : f.support())
    los_by_length[s.length()].insert(s.lo);
  for (const auto& [len, los] : los_by_length)
    if (static_cast<long long>(los.size()) == period) return false;
  return true;
}

DimVector dim_vector(const SegmentMultiset& f) {
  if (f.mode().is_cyclic()) {
    int rank = f.mode().rank();
    DimVector v = DimVector::cyclic(rank);
    for (const auto& [s, mult] : f.support())
      for (long long r = 0; r <= rank; ++r)
        v.add(r, mult * count_congruent(s.lo, s.hi, r, rank + 1));
    return v;
  }
  DimVector v = DimVector::infinite();
  for (const auto& [s, mult] : f.support())
    for (long long r = s.lo; r <= s.hi; ++r) v.add(r, mult);
  return v;
}

std::optional<MayaTuple> canonical_tuple(const SegmentMultiset& f,
                                         const std::vector<long long>& charges) {
  if (charges.empty())
    throw std::invalid_argument("canonical_tuple: need at least one charge");
  for (size_t j = 1; j < charges.size(); ++j)
    if (charges[j - 1] > charges[j])
      throw std::invalid_argument("canonical_tuple: charges must be weakly increasing");

  SegmentMode mode = f.mode();
  std::map<Segment, long long> left = f.support();
  size_t l = charges.size();
  std::vector<std::vector<int>> rows(l);
  std::vector<bool> active(l, true);

  // Positions (charge j, left end t) are visited by t from the top down,
  // charges in order at each t. Row p of charge j is claimed at t equal to
  // charges[j] - (p - 1), so per charge this matches the round for round
  // description; across charges the top-down order additionally keeps
  // lengths weakly decreasing along each residue class in cyclic mode, which
  // the wrap inequality of tuple_is_chain needs once the charge list spans
  // more than one period. A charge whose current t has no matching segment
  // is out for good: a later row would break row contiguity.
  size_t active_count = l;
  long long t = charges.back();
  while (active_count > 0 && !left.empty()) {
    for (size_t j = 0; j < l && !left.empty(); ++j) {
      if (!active[j] || charges[j] < t) continue;
      long long target = mode.is_cyclic() ? floor_mod(t, mode.period()) : t;
      // Longest candidate with leftmost vertex target; candidates share lo,
      // so length settles the choice.
      auto best = left.end();
      for (auto it = left.begin(); it != left.end(); ++it) {
        if (it->first.lo != target) continue;
        if (best == left.end() || it->first.length() > best->first.length())
          best = it;
      }
      if (best == left.end()) {
        active[j] = false;
        --active_count;
        continue;
      }
      rows[j].push_back(static_cast<int>(best->first.length()));
      if (--best->second == 0) left.erase(best);
    }
    --t;
  }

  if (!left.empty()) return std::nullopt;

  std::vector<ChargedMaya> entries;
  entries.reserve(l);
  for (size_t j = 0; j < l; ++j) {
    for (size_t i = 1; i < rows[j].size(); ++i)
      if (rows[j][i - 1] < rows[j][i]) return std::nullopt;  // not a diagram
    entries.emplace_back(YoungDiagram(rows[j]), charges[j]);
  }
  MayaTuple m(mode, std::move(entries));
  if (!tuple_is_chain(m)) return std::nullopt;
  if (segments_of_tuple(m) != f)
    throw std::logic_error("canonical_tuple: reconstruction mismatch");
  return m;
}

RowMultiset row_multiset(const MayaTuple& m) {
  RowMultiset rows;
  for (const auto& e : m.entries())
    for (int i = 1; i <= e.shape().rows(); ++i)
      rows.add(e.charge() - i + 1, e.shape().part(i));
  return rows;
}

bool is_n_reduced_tuple(const MayaTuple& m) {
  if (!m.mode().is_cyclic())
    throw std::logic_error("is_n_reduced_tuple: undefined in infinite mode");
  long long period = m.mode().period();
  RowMultiset rows = row_multiset(m);
  std::map<long long, std::set<long long>> heights_by_length;
  for (const auto& [row, mult] : rows.support())
    heights_by_length[row.second].insert(row.first);
  for (const auto& [len, heights] : heights_by_length) {
    long long run = 0;
    long long prev = 0;
    for (long long h : heights) {  // ascending
      run = (run > 0 && h == prev + 1) ? run + 1 : 1;
      prev = h;
      if (run >= period) return false;
    }
  }
  return true;
}

bool tuple_is_chain(const MayaTuple& m) {
  const auto& e = m.entries();
  for (size_t j = 1; j < e.size(); ++j)
    if (!maya_leq(e[j - 1], e[j])) return false;
  if (m.mode().is_cyclic() && !e.empty()) {
    if (!maya_leq(e.back(), e.front().shifted(m.mode().period()))) return false;
  }
  return true;
}

}  // namespace quiverpath
