#include "quiverpath/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace quiverpath {

YoungDiagram::YoungDiagram(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("YoungDiagram: parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw std::invalid_argument("YoungDiagram: parts must be weakly decreasing");
  }
}

int YoungDiagram::part(int i) const {
  if (i < 1) throw std::invalid_argument("YoungDiagram::part: 1-based index");
  return i <= rows() ? parts_[static_cast<size_t>(i - 1)] : 0;
}

long long YoungDiagram::size() const {
  long long s = 0;
  for (int p : parts_) s += p;
  return s;
}

int YoungDiagram::parts_greater_than(long long t) const {
  // parts_ is weakly decreasing: first index with part <= t.
  auto it = std::lower_bound(parts_.begin(), parts_.end(), t,
                             [](int p, long long v) { return p > v; });
  return static_cast<int>(it - parts_.begin());
}

bool YoungDiagram::is_n_reduced(int n) const {
  if (n < 1) throw std::invalid_argument("is_n_reduced: rank must be >= 1");
  int run = 1;
  for (size_t i = 1; i < parts_.size(); ++i) {
    run = (parts_[i] == parts_[i - 1]) ? run + 1 : 1;
    if (run > n) return false;
  }
  return true;
}

bool YoungDiagram::contains(const YoungDiagram& other) const {
  if (other.rows() > rows()) return false;
  for (int i = 0; i < other.rows(); ++i)
    if (parts_[static_cast<size_t>(i)] < other.parts_[static_cast<size_t>(i)])
      return false;
  return true;
}

std::optional<YoungDiagram> YoungDiagram::with_box_of_content(long long k) const {
  // Adding to row i appends column l_i + 1, content l_i + 1 - i.
  for (int i = 1; i <= rows() + 1; ++i) {
    long long c = static_cast<long long>(part(i)) + 1 - i;
    if (c != k) continue;
    if (i > 1 && part(i - 1) == part(i)) return std::nullopt;  // not a diagram
    std::vector<int> p = parts_;
    if (i <= rows())
      p[static_cast<size_t>(i - 1)] += 1;
    else
      p.push_back(1);
    return YoungDiagram(std::move(p));
  }
  return std::nullopt;
}

std::optional<YoungDiagram> YoungDiagram::without_box_of_content(long long k) const {
  for (int i = 1; i <= rows(); ++i) {
    long long c = static_cast<long long>(part(i)) - i;
    if (c != k) continue;
    if (part(i + 1) == part(i)) return std::nullopt;
    std::vector<int> p = parts_;
    if (p[static_cast<size_t>(i - 1)] == 1)
      p.erase(p.begin() + (i - 1));
    else
      p[static_cast<size_t>(i - 1)] -= 1;
    return YoungDiagram(std::move(p));
  }
  return std::nullopt;
}

ChargedMaya::ChargedMaya(YoungDiagram shape, long long charge)
    : shape_(std::move(shape)), charge_(charge) {}

long long ChargedMaya::eval(long long j) const {
  if (j < 0) {
    long long i = -j;
    long long part = i <= shape_.rows() ? shape_.part(static_cast<int>(i)) : 0;
    return charge_ + part - i;
  }
  // Increasing enumeration of the complement of the j < 0 image reduces to
  // skipping one value per part exceeding j.
  return charge_ + j - shape_.parts_greater_than(j);
}

ChargedMaya ChargedMaya::shifted(long long r) const {
  return ChargedMaya(shape_, charge_ + r);
}

long long ChargedMaya::stabilization_bound() const {
  return shape_.empty() ? 0 : shape_.part(1);
}

bool maya_leq(const ChargedMaya& a, const ChargedMaya& b) {
  bool le = a.charge() <= b.charge();
  if (le) {
    long long bound = std::max(a.stabilization_bound(), b.stabilization_bound());
    for (long long j = 0; j < bound && le; ++j)
      le = a.eval(j) <= b.eval(j);
  }

  // Equivalent formulation: row i of a covers row i + d of b, d the charge
  // difference.  Rows past the last one read as 0 and always fit.
  bool rowwise = a.charge() <= b.charge();
  if (rowwise) {
    long long d = b.charge() - a.charge();
    for (long long i = 1; i + d <= b.shape().rows() && rowwise; ++i)
      rowwise = a.shape().part(static_cast<int>(i)) >=
                b.shape().part(static_cast<int>(i + d));
  }
  if (le != rowwise)
    throw std::logic_error("maya_leq: window test and row test disagree");
  return le;
}

ChargedMaya maya_from_prefix(const std::vector<long long>& values) {
  if (values.size() < 2)
    throw std::invalid_argument("maya_from_prefix: need at least two values");
  size_t J = values.size() - 1;
  for (size_t j = 1; j <= J; ++j)
    if (values[j] <= values[j - 1])
      throw std::invalid_argument("maya_from_prefix: values must be strictly increasing");
  long long charge = values[J] - static_cast<long long>(J);
  if (values[J - 1] != static_cast<long long>(J - 1) + charge)
    throw std::invalid_argument("maya_from_prefix: prefix does not reach stabilization");
  // A gap of g before position j records g parts of size j; the telescoped
  // gap total charge - values[0] is then the row count automatically.
  std::vector<int> parts;
  for (size_t j = J; j >= 1; --j) {
    long long gap = values[j] - values[j - 1] - 1;
    for (long long t = 0; t < gap; ++t) parts.push_back(static_cast<int>(j));
  }
  return ChargedMaya(YoungDiagram(std::move(parts)), charge);
}

BasicPath::BasicPath(int rank, int offset, std::vector<int> entries)
    : rank_(rank), offset_(offset), prefix_(std::move(entries)) {
  if (rank_ < 1) throw std::invalid_argument("BasicPath: rank must be >= 1");
  int m = rank_ + 1;
  if (offset_ < 0 || offset_ >= m)
    throw std::invalid_argument("BasicPath: offset out of range");
  for (int e : prefix_)
    if (e < 0 || e >= m)
      throw std::invalid_argument("BasicPath: entry out of range");
  while (!prefix_.empty() &&
         prefix_.back() ==
             static_cast<int>((static_cast<long long>(prefix_.size()) - 1 + offset_) % m))
    prefix_.pop_back();
}

int BasicPath::entry(long long j) const {
  if (j < 0) throw std::invalid_argument("BasicPath::entry: j must be >= 0");
  if (j < static_cast<long long>(prefix_.size()))
    return prefix_[static_cast<size_t>(j)];
  return static_cast<int>((j + offset_) % (rank_ + 1));
}

static long long floor_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

BasicPath basic_path(const ChargedMaya& m, int rank) {
  long long mod = rank + 1;
  int offset = static_cast<int>(floor_mod(m.charge(), mod));
  long long bound = m.stabilization_bound();
  std::vector<int> entries;
  entries.reserve(static_cast<size_t>(bound));
  for (long long j = 0; j < bound; ++j)
    entries.push_back(static_cast<int>(floor_mod(m.eval(j), mod)));
  return BasicPath(rank, offset, std::move(entries));
}

long long count_congruent(long long lo, long long hi, long long r, long long m) {
  if (hi < lo) return 0;
  long long first = lo + floor_mod(r - lo, m);
  if (first > hi) return 0;
  return (hi - first) / m + 1;
}

DimVector dim_vector_level1(const YoungDiagram& y, std::optional<int> rank) {
  DimVector v = rank ? DimVector::cyclic(*rank) : DimVector::infinite();
  for (int i = 1; i <= y.rows(); ++i) {
    long long lo = 1 - i;
    long long hi = y.part(i) - i;
    if (rank) {
      long long m = *rank + 1;
      for (long long r = 0; r < m; ++r) v.add(r, count_congruent(lo, hi, r, m));
    } else {
      for (long long c = lo; c <= hi; ++c) v.add(c, 1);
    }
  }
  return v;
}

long long delta_weight(const YoungDiagram& y, int rank, long long k) {
  long long m = rank + 1;
  auto d = [&](long long t) { return floor_mod(k - t, m) == 0 ? 1LL : 0LL; };
  long long s = y.rows();
  long long out = d(-s);
  for (int i = 1; i <= y.rows(); ++i) {
    long long edge = static_cast<long long>(y.part(i)) - i;
    out += d(edge + 1) - d(edge);
  }
  return out;
}

long long energy_level1(const YoungDiagram& y, int rank) {
  if (!y.is_n_reduced(rank))
    throw std::domain_error("energy_level1: diagram is not n-reduced");
  BasicPath p = basic_path(ChargedMaya(y, 0), rank);
  long long m = rank + 1;
  long long omega = 0;
  long long bound = static_cast<long long>(p.prefix().size());
  for (long long k = 1; k <= bound; ++k) {
    long long h = p.entry(k - 1) >= p.entry(k) ? 1 : 0;
    long long hg = (k % m == 0) ? 1 : 0;  // ground pair (k-1 mod, k mod)
    omega += k * (h - hg);
  }
  return omega;
}

static void extend_partitions(std::vector<int>& stack, int remaining, int max_part,
                              std::vector<YoungDiagram>& out) {
  if (remaining == 0) {
    out.emplace_back(stack);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    stack.push_back(p);
    extend_partitions(stack, remaining - p, p, out);
    stack.pop_back();
  }
}

std::vector<YoungDiagram> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
  std::vector<YoungDiagram> out;
  std::vector<int> stack;
  extend_partitions(stack, n, n == 0 ? 1 : n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<YoungDiagram> partitions_up_to(int n) {
  std::vector<YoungDiagram> out;
  for (int s = 0; s <= n; ++s) {
    auto part = partitions_of(s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace quiverpath
