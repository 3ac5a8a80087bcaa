#pragma once

#include <gmpxx.h>

#include <map>

#include "quiverpath/partitions.hpp"

namespace quiverpath {

// Formal rational linear combination of Young diagrams. Zero coefficients
// are never stored, so map equality is vector equality.
class FockVector {
 public:
  FockVector() = default;

  static FockVector basis(const YoungDiagram& y);

  const std::map<YoungDiagram, mpq_class>& terms() const { return terms_; }
  mpq_class coeff(const YoungDiagram& y) const;
  bool is_zero() const { return terms_.empty(); }

  void add(const YoungDiagram& y, const mpq_class& c);

  FockVector& operator+=(const FockVector& rhs);
  FockVector& operator-=(const FockVector& rhs);
  FockVector& operator*=(const mpq_class& c);

  friend FockVector operator+(FockVector a, const FockVector& b) {
    a += b;
    return a;
  }
  friend FockVector operator-(FockVector a, const FockVector& b) {
    a -= b;
    return a;
  }
  friend FockVector operator*(const mpq_class& c, FockVector v) {
    v *= c;
    return v;
  }

  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  std::map<YoungDiagram, mpq_class> terms_;
};

// Raising operator: adds the unique box of content k to each diagram in the
// support, dropping diagrams with no such addable box.
FockVector f_op(long long k, const FockVector& v);

// Lowering operator: removes the unique box of content k, dropping diagrams
// with no such removable box.
FockVector e_op(long long k, const FockVector& v);

// Diagonal operator: scales each diagram by its weight entry at k.
FockVector h_op(long long k, const FockVector& v);

// The full weight of a single diagram: k maps to
// delta(k,0) - 2 v_k + v_{k-1} + v_{k+1} with v the content counts of Y.
// Zero entries are omitted.
std::map<long long, long long> weight_inf(const YoungDiagram& y);

}  // namespace quiverpath
