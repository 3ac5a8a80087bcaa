#pragma once
// Dimension vectors and affine weights for the cyclic quiver of rank n
// (vertex set Z/(n+1)) and for the doubly infinite chain (vertex set Z).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace quiverpath {

// Finitely supported vertex -> count map.  modulus() == 0 means vertices
// range over all of Z; otherwise vertices are residues mod modulus().
class DimVector {
public:
  static DimVector infinite();
  static DimVector cyclic(int rank);  // rank n, modulus n+1

  // vertex is reduced mod modulus() in cyclic mode; zero entries are erased.
  void add(long long vertex, long long count);
  long long at(long long vertex) const;

  bool is_cyclic() const { return modulus_ != 0; }
  int modulus() const { return modulus_; }
  long long total() const;

  // Cyclic mode only: counts listed by residue 0..n.
  std::vector<long long> residues() const;
  const std::map<long long, long long>& support() const { return counts_; }

  DimVector& operator+=(const DimVector& other);
  bool operator==(const DimVector&) const = default;

private:
  int modulus_ = 0;
  std::map<long long, long long> counts_;
};

// Weight for the rank-n cyclic setting: h-eigenvalues by residue plus the
// degree-operator eigenvalue.
struct AffineWeight {
  std::vector<long long> h;  // size n+1
  long long deg = 0;

  long long level() const;
  std::string tsv() const;  // "u_0,...,u_n;deg"
  bool operator==(const AffineWeight&) const = default;
  auto operator<=>(const AffineWeight&) const = default;
};

// Dominant integral highest weight of level l, recorded as a weakly
// increasing charge list (gamma_1 <= ... <= gamma_l); the weight itself is
// Lambda_{gamma_1 mod n+1} + ... + Lambda_{gamma_l mod n+1}.
class HighestWeight {
public:
  HighestWeight(int rank, std::vector<long long> charges);

  int rank() const { return rank_; }
  const std::vector<long long>& charges() const { return charges_; }
  int level() const { return static_cast<int>(charges_.size()); }

  // Multiplicity of each residue class among the charges, size n+1.
  std::vector<long long> residue_counts() const;

  bool operator==(const HighestWeight&) const = default;

private:
  int rank_;
  std::vector<long long> charges_;
};

// Cartan pairing <h_k, alpha_l> for the cyclic quiver of rank n.
long long cartan_cyclic(int rank, long long k, long long l);

// Cartan pairing for the infinite chain: 2 on the diagonal, -1 adjacent.
long long cartan_inf(long long k, long long l);

// (C v)_k for a cyclic dimension vector v of size rank+1.
std::vector<long long> cartan_apply(int rank, const std::vector<long long>& v);

// Weight attached to a cyclic dimension vector v:
// h-part  (residue counts of hw) - C v,  degree  -v_0.
AffineWeight geometric_weight(const HighestWeight& hw, const DimVector& v);

}  // namespace quiverpath
