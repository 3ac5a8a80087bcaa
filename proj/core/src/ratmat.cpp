#include "quiverpath/ratmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace quiverpath {

RatMatrix::RatMatrix(long long rows, long long cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  data_.assign(static_cast<size_t>(rows * cols), mpq_class(0));
}

RatMatrix RatMatrix::identity(long long n) {
  RatMatrix m(n, n);
  for (long long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

const mpq_class& RatMatrix::at(long long r, long long c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index");
  return data_[static_cast<size_t>(r * cols_ + c)];
}

mpq_class& RatMatrix::at(long long r, long long c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index");
  return data_[static_cast<size_t>(r * cols_ + c)];
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const mpq_class& v) { return sgn(v) == 0; });
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const mpq_class& scale) {
  for (mpq_class& v : data_) v *= scale;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  RatMatrix out(a.rows_, b.cols_);
  for (long long i = 0; i < a.rows_; ++i) {
    for (long long k = 0; k < a.cols_; ++k) {
      const mpq_class& lhs = a.at(i, k);
      if (sgn(lhs) == 0) continue;
      for (long long j = 0; j < b.cols_; ++j) out.at(i, j) += lhs * b.at(k, j);
    }
  }
  return out;
}

namespace {

// Reduced row echelon form in place; returns the pivot columns in order.
std::vector<long long> rref(std::vector<std::vector<mpq_class>>& rows,
                            long long cols) {
  std::vector<long long> pivots;
  size_t next_row = 0;
  for (long long col = 0; col < cols && next_row < rows.size(); ++col) {
    size_t hit = next_row;
    while (hit < rows.size() && sgn(rows[hit][col]) == 0) ++hit;
    if (hit == rows.size()) continue;
    std::swap(rows[next_row], rows[hit]);
    mpq_class inv = 1 / rows[next_row][col];
    for (long long j = col; j < cols; ++j) rows[next_row][j] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == next_row || sgn(rows[r][col]) == 0) continue;
      mpq_class factor = rows[r][col];
      for (long long j = col; j < cols; ++j)
        rows[r][j] -= factor * rows[next_row][j];
    }
    pivots.push_back(col);
    ++next_row;
  }
  return pivots;
}

std::vector<std::vector<mpq_class>> matrix_rows(const RatMatrix& m) {
  std::vector<std::vector<mpq_class>> rows(m.rows());
  for (long long r = 0; r < m.rows(); ++r) {
    rows[r].resize(m.cols());
    for (long long c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c);
  }
  return rows;
}

}  // namespace

long long rank(const RatMatrix& m) {
  auto rows = matrix_rows(m);
  return static_cast<long long>(rref(rows, m.cols()).size());
}

std::vector<std::vector<mpq_class>> null_space(const RatMatrix& m) {
  auto rows = matrix_rows(m);
  std::vector<long long> pivots = rref(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (long long p : pivots) is_pivot[p] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (long long free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> u(m.cols(), mpq_class(0));
    u[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) u[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(u));
  }
  return basis;
}

RowSpan::RowSpan(long long width) : width_(width) {
  if (width < 0) throw std::invalid_argument("negative span width");
}

void RowSpan::reduce(std::vector<mpq_class>& v) const {
  for (const auto& [pivot, row] : rows_) {
    if (sgn(v[pivot]) == 0) continue;
    mpq_class factor = v[pivot];
    for (size_t j = pivot; j < row.size(); ++j) v[j] -= factor * row[j];
  }
}

bool RowSpan::insert(std::vector<mpq_class> v) {
  if (static_cast<long long>(v.size()) != width_)
    throw std::invalid_argument("span width mismatch");
  reduce(v);
  size_t pivot = 0;
  while (pivot < v.size() && sgn(v[pivot]) == 0) ++pivot;
  if (pivot == v.size()) return false;
  mpq_class inv = 1 / v[pivot];
  for (size_t j = pivot; j < v.size(); ++j) v[j] *= inv;
  auto pos = std::lower_bound(
      rows_.begin(), rows_.end(), pivot,
      [](const auto& row, size_t p) { return row.first < p; });
  rows_.insert(pos, {pivot, std::move(v)});
  return true;
}

bool RowSpan::contains(std::vector<mpq_class> v) const {
  if (static_cast<long long>(v.size()) != width_)
    throw std::invalid_argument("span width mismatch");
  reduce(v);
  return std::all_of(v.begin(), v.end(),
                     [](const mpq_class& x) { return sgn(x) == 0; });
}

}  // namespace quiverpath
