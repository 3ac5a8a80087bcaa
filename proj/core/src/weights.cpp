#include "quiverpath/weights.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace quiverpath {

DimVector DimVector::infinite() { return DimVector{}; }

DimVector DimVector::cyclic(int rank) {
  if (rank < 1) throw std::invalid_argument("DimVector: rank must be >= 1");
  DimVector v;
  v.modulus_ = rank + 1;
  return v;
}

static long long floor_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

void DimVector::add(long long vertex, long long count) {
  if (count == 0) return;
  if (modulus_ != 0) vertex = floor_mod(vertex, modulus_);
  auto it = counts_.find(vertex);
  if (it == counts_.end()) {
    counts_.emplace(vertex, count);
  } else if ((it->second += count) == 0) {
    counts_.erase(it);
  }
}

long long DimVector::at(long long vertex) const {
  if (modulus_ != 0) vertex = floor_mod(vertex, modulus_);
  auto it = counts_.find(vertex);
  return it == counts_.end() ? 0 : it->second;
}

long long DimVector::total() const {
  long long t = 0;
  for (const auto& [v, c] : counts_) t += c;
  return t;
}

std::vector<long long> DimVector::residues() const {
  if (modulus_ == 0)
    throw std::logic_error("DimVector::residues: not a cyclic vector");
  std::vector<long long> out(modulus_, 0);
  for (const auto& [v, c] : counts_) out[static_cast<size_t>(v)] = c;
  return out;
}

DimVector& DimVector::operator+=(const DimVector& other) {
  if (modulus_ != other.modulus_)
    throw std::invalid_argument("DimVector: mixed vertex sets");
  for (const auto& [v, c] : other.counts_) add(v, c);
  return *this;
}

long long AffineWeight::level() const {
  return std::accumulate(h.begin(), h.end(), 0LL);
}

std::string AffineWeight::tsv() const {
  std::ostringstream os;
  for (size_t i = 0; i < h.size(); ++i) {
    if (i) os << ',';
    os << h[i];
  }
  os << ';' << deg;
  return os.str();
}

HighestWeight::HighestWeight(int rank, std::vector<long long> charges)
    : rank_(rank), charges_(std::move(charges)) {
  if (rank_ < 1) throw std::invalid_argument("HighestWeight: rank must be >= 1");
  if (charges_.empty())
    throw std::invalid_argument("HighestWeight: need at least one charge");
  for (size_t j = 1; j < charges_.size(); ++j)
    if (charges_[j - 1] > charges_[j])
      throw std::invalid_argument("HighestWeight: charges must be weakly increasing");
}

std::vector<long long> HighestWeight::residue_counts() const {
  std::vector<long long> w(rank_ + 1, 0);
  for (long long g : charges_) w[static_cast<size_t>(floor_mod(g, rank_ + 1))] += 1;
  return w;
}

long long cartan_cyclic(int rank, long long k, long long l) {
  long long m = rank + 1;
  long long a = 0;
  if (floor_mod(k - l, m) == 0) a += 2;
  if (floor_mod(k - l - 1, m) == 0) a -= 1;
  if (floor_mod(k - l + 1, m) == 0) a -= 1;
  return a;
}

long long cartan_inf(long long k, long long l) {
  if (k == l) return 2;
  if (k == l + 1 || k == l - 1) return -1;
  return 0;
}

std::vector<long long> cartan_apply(int rank, const std::vector<long long>& v) {
  size_t m = static_cast<size_t>(rank) + 1;
  if (v.size() != m) throw std::invalid_argument("cartan_apply: size mismatch");
  std::vector<long long> out(m, 0);
  for (size_t k = 0; k < m; ++k)
    for (size_t l = 0; l < m; ++l)
      out[k] += cartan_cyclic(rank, static_cast<long long>(k),
                              static_cast<long long>(l)) * v[l];
  return out;
}

AffineWeight geometric_weight(const HighestWeight& hw, const DimVector& v) {
  if (!v.is_cyclic() || v.modulus() != hw.rank() + 1)
    throw std::invalid_argument("geometric_weight: dimension vector rank mismatch");
  std::vector<long long> res = v.residues();
  std::vector<long long> cv = cartan_apply(hw.rank(), res);
  std::vector<long long> h = hw.residue_counts();
  for (size_t k = 0; k < h.size(); ++k) h[k] -= cv[k];
  return AffineWeight{std::move(h), -res[0]};
}

}  // namespace quiverpath
