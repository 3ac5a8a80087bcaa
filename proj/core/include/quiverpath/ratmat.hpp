#pragma once
// Dense exact-rational matrices.  Every consumer works with single-digit
// dimensions, so plain Gaussian elimination covers all the linear algebra
// needed: rank, right null space, incremental row spans.

#include <gmpxx.h>

#include <vector>

namespace quiverpath {

class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(long long rows, long long cols);
  static RatMatrix identity(long long n);

  long long rows() const { return rows_; }
  long long cols() const { return cols_; }
  const mpq_class& at(long long r, long long c) const;
  mpq_class& at(long long r, long long c);
  bool is_zero() const;

  RatMatrix& operator+=(const RatMatrix& other);
  RatMatrix& operator-=(const RatMatrix& other);
  RatMatrix& operator*=(const mpq_class& scale);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

  bool operator==(const RatMatrix&) const = default;

private:
  long long rows_ = 0;
  long long cols_ = 0;
  std::vector<mpq_class> data_;
};

long long rank(const RatMatrix& m);

// Basis of {u : m u = 0}, one vector per free column, in column order.
std::vector<std::vector<mpq_class>> null_space(const RatMatrix& m);

// Row space kept in echelon form with unit pivots.  insert reports whether
// the vector enlarged the span.
class RowSpan {
public:
  explicit RowSpan(long long width);

  long long width() const { return width_; }
  long long dimension() const { return static_cast<long long>(rows_.size()); }
  bool insert(std::vector<mpq_class> v);
  bool contains(std::vector<mpq_class> v) const;

private:
  // Rows stay sorted by pivot column, so one ascending sweep reduces fully.
  void reduce(std::vector<mpq_class>& v) const;
  long long width_;
  std::vector<std::pair<size_t, std::vector<mpq_class>>> rows_;
};

}  // namespace quiverpath
