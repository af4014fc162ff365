#ifndef GORLAB_MATRIX_HPP
#define GORLAB_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gorlab/errors.hpp"

namespace gorlab {

// Dense matrix over an exact field scalar K. Carries a prototype element so
// zero/one can be materialized for fields with runtime context (GFp).
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const K& proto)
      : rows_(rows), cols_(cols), proto_(proto.zero_like()), d_(rows * cols, proto.zero_like()) {}

  static Matrix identity(std::size_t n, const K& proto) {
    Matrix m(n, n, proto);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = proto.one_like();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const K& proto() const { return proto_; }

  K& at(std::size_t r, std::size_t c) { return d_[r * cols_ + c]; }
  const K& at(std::size_t r, std::size_t c) const { return d_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : d_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
    Matrix r(rows_, o.cols_, proto_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const K& a = at(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const K& b = o.at(k, j);
          if (!b.is_zero()) r.at(i, j) += a * b;
        }
      }
    return r;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    if (v.size() != cols_) throw InputError("matrix apply shape mismatch");
    std::vector<K> r(rows_, proto_.zero_like());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
  }

  // Horizontal concatenation [this | o].
  Matrix augmented(const Matrix& o) const {
    if (rows_ != o.rows_) throw InputError("augment shape mismatch");
    Matrix r(rows_, cols_ + o.cols_, proto_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
  }

  // Vertical stack [this; o].
  Matrix stacked(const Matrix& o) const {
    if (cols_ != o.cols_) throw InputError("stack shape mismatch");
    Matrix r(rows_ + o.rows_, cols_, proto_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
  }

  Matrix columns(const std::vector<std::size_t>& idx) const {
    Matrix r(rows_, idx.size(), proto_);
    for (std::size_t j = 0; j < idx.size(); ++j)
      for (std::size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
    return r;
  }

  std::vector<K> column(std::size_t j) const {
    std::vector<K> c(rows_, proto_.zero_like());
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  void set_column(std::size_t j, const std::vector<K>& v) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
  }

  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<K>>& cols,
                             const K& proto) {
    Matrix r(rows, cols.size(), proto);
    for (std::size_t j = 0; j < cols.size(); ++j) r.set_column(j, cols[j]);
    return r;
  }

  Matrix transposed() const {
    Matrix r(cols_, rows_, proto_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  // In-place reduced row echelon form; returns pivot column indices.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = row;
      while (sel < rows_ && at(sel, col).is_zero()) ++sel;
      if (sel == rows_) continue;
      if (sel != row)
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
      K inv = at(row, col).inv();
      for (std::size_t j = col; j < cols_; ++j) at(row, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row || at(i, col).is_zero()) continue;
        K f = at(i, col);
        for (std::size_t j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix c = *this;
    return c.rref().size();
  }

  // Basis of the nullspace, one vector per free column.
  std::vector<std::vector<K>> kernel_basis() const {
    Matrix r = *this;
    std::vector<std::size_t> pivots = r.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<K> v(cols_, proto_.zero_like());
      v[free] = proto_.one_like();
      for (std::size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -r.at(pi, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Solve A X = B for all columns of B with a single elimination; nullopt
  // when any column is inconsistent.
  std::optional<Matrix> solve_columns(const Matrix& b) const {
    if (b.rows() != rows_) throw InputError("solve shape mismatch");
    Matrix aug = augmented(b);
    std::vector<std::size_t> pivots = aug.rref();
    for (std::size_t p : pivots)
      if (p >= cols_) return std::nullopt;
    Matrix x(cols_, b.cols(), proto_);
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      for (std::size_t j = 0; j < b.cols(); ++j) x.at(pivots[pi], j) = aug.at(pi, cols_ + j);
    return x;
  }

  // One solution of A x = b, or nullopt when inconsistent.
  std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
    if (b.size() != rows_) throw InputError("solve shape mismatch");
    Matrix aug(rows_, cols_ + 1, proto_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_) = b[i];
    }
    std::vector<std::size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<K> x(cols_, proto_.zero_like());
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug.at(pi, cols_);
    return x;
  }

  // Column indices forming a basis of the column space (leftmost choice).
  std::vector<std::size_t> column_space_pivots() const {
    Matrix c = *this;
    return c.rref();
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  K proto_;
  std::vector<K> d_;
};

// Span tracker: maintains an rref'd basis of a subspace of K^n and answers
// membership/extension queries. Rows are basis vectors.
template <class K>
class SpanBuilder {
 public:
  SpanBuilder(std::size_t n, const K& proto) : n_(n), proto_(proto.zero_like()) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }

  // Reduce v against the current basis; returns the residual.
  std::vector<K> reduce(std::vector<K> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const K& c = v[pivots_[i]];
      if (c.is_zero()) continue;
      K f = c;
      for (std::size_t j = 0; j < n_; ++j)
        if (!rows_[i][j].is_zero()) v[j] -= f * rows_[i][j];
    }
    return v;
  }

  bool contains(const std::vector<K>& v) const {
    auto r = reduce(v);
    for (const auto& x : r)
      if (!x.is_zero()) return false;
    return true;
  }

  // Insert v if independent; returns true when the span grew.
  bool add(std::vector<K> v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < n_ && v[p].is_zero()) ++p;
    if (p == n_) return false;
    K inv = v[p].inv();
    for (auto& x : v) x *= inv;
    // Back-substitute into existing rows to keep the basis reduced.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      K f = rows_[i][p];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!v[j].is_zero()) rows_[i][j] -= f * v[j];
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
  }

  const std::vector<std::vector<K>>& basis_rows() const { return rows_; }

 private:
  std::size_t n_;
  K proto_;
  std::vector<std::vector<K>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace gorlab

#endif
