#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quiverrep/errors.hpp"
#include "quiverrep/field.hpp"

namespace qrep {

/// Dense exact matrix acting on column vectors. All elimination routines are
/// deterministic: pivots are always the first nonzero entry scanning rows
/// top-down, columns left-right, so every computed basis is canonical for its
/// input.
template <class F>
class Matrix {
public:
  using Elem = typename F::Elem;

  Matrix() : fld_(), rows_(0), cols_(0) {}
  Matrix(F f, std::size_t rows, std::size_t cols)
      : fld_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

  static Matrix identity(F f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& field() const { return fld_; }

  Elem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& e : a_)
      if (!fld_.is_zero(e)) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (!fld_.eq(a_[i], o.a_[i])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix mul(const Matrix& o) const {
    assert(cols_ == o.rows_);
    Matrix r(fld_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Elem& x = at(i, k);
        if (fld_.is_zero(x)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) = fld_.add(r.at(i, j), fld_.mul(x, o.at(k, j)));
      }
    return r;
  }

  Matrix add(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix r(fld_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = fld_.add(a_[i], o.a_[i]);
    return r;
  }

  Matrix sub(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix r(fld_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = fld_.sub(a_[i], o.a_[i]);
    return r;
  }

  Matrix scale(const Elem& s) const {
    Matrix r(fld_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = fld_.mul(a_[i], s);
    return r;
  }

  Matrix transpose() const {
    Matrix r(fld_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  /// [this | o] side by side.
  Matrix hstack(const Matrix& o) const {
    assert(rows_ == o.rows_);
    Matrix r(fld_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
  }

  Matrix vstack(const Matrix& o) const {
    assert(cols_ == o.cols_);
    Matrix r(fld_, rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
  }

  Matrix columns(const std::vector<std::size_t>& idx) const {
    Matrix r(fld_, rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
      for (std::size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
    return r;
  }

  Matrix rows_slice(std::size_t from, std::size_t count) const {
    assert(from + count <= rows_);
    Matrix r(fld_, count, cols_);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(from + i, j);
    return r;
  }

  struct Echelon {
    Matrix<F> r;                      // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
  };

  Echelon rref() const {
    Matrix r = *this;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = row;
      while (sel < rows_ && fld_.is_zero(r.at(sel, col))) ++sel;
      if (sel == rows_) continue;
      if (sel != row)
        for (std::size_t j = col; j < cols_; ++j) std::swap(r.at(sel, j), r.at(row, j));
      Elem piv = fld_.inv(r.at(row, col));
      for (std::size_t j = col; j < cols_; ++j) r.at(row, j) = fld_.mul(r.at(row, j), piv);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row || fld_.is_zero(r.at(i, col))) continue;
        Elem factor = r.at(i, col);
        for (std::size_t j = col; j < cols_; ++j)
          r.at(i, j) = fld_.sub(r.at(i, j), fld_.mul(factor, r.at(row, j)));
      }
      pivots.push_back(col);
      ++row;
    }
    return {std::move(r), std::move(pivots)};
  }

  std::size_t rank() const { return rref().pivots.size(); }

  /// Columns form the canonical basis of the kernel (one per free column of
  /// the RREF, in increasing column order).
  Matrix kernel_basis() const {
    Echelon e = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(fld_, cols_, free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
      std::size_t fc = free_cols[j];
      k.at(fc, j) = fld_.one();
      for (std::size_t row = 0; row < e.pivots.size(); ++row)
        k.at(e.pivots[row], j) = fld_.neg(e.r.at(row, fc));
    }
    return k;
  }

  /// Solve (*this) x = b for one column vector; nullopt if inconsistent.
  std::optional<Matrix> solve(const Matrix& b) const {
    assert(b.rows() == rows_ && b.cols() == 1);
    Echelon e = hstack(b).rref();
    for (auto c : e.pivots)
      if (c == cols_) return std::nullopt;
    Matrix x(fld_, cols_, 1);
    for (std::size_t row = 0; row < e.pivots.size(); ++row)
      x.at(e.pivots[row], 0) = e.r.at(row, cols_);
    return x;
  }

  /// Solve (*this) X = B columnwise; nullopt if any column is inconsistent.
  std::optional<Matrix> solve_mat(const Matrix& b) const {
    assert(b.rows() == rows_);
    Echelon e = hstack(b).rref();
    for (auto c : e.pivots)
      if (c >= cols_) return std::nullopt;
    Matrix x(fld_, cols_, b.cols());
    for (std::size_t row = 0; row < e.pivots.size(); ++row)
      for (std::size_t j = 0; j < b.cols(); ++j)
        x.at(e.pivots[row], j) = e.r.at(row, cols_ + j);
    return x;
  }

  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Echelon e = hstack(identity(fld_, rows_)).rref();
    if (e.pivots.size() != rows_) return std::nullopt;
    for (std::size_t i = 0; i < rows_; ++i)
      if (e.pivots[i] != i) return std::nullopt;
    Matrix inv(fld_, rows_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < rows_; ++j) inv.at(i, j) = e.r.at(i, cols_ + j);
    return inv;
  }

  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

  Matrix pow(std::size_t n) const {
    assert(rows_ == cols_);
    Matrix r = identity(fld_, rows_);
    Matrix b = *this;
    while (n) {
      if (n & 1) r = r.mul(b);
      b = b.mul(b);
      n >>= 1;
    }
    return r;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        s += fld_.str(at(i, j));
        if (j + 1 < cols_) s += ", ";
      }
      s += "]";
      if (i + 1 < rows_) s += "; ";
    }
    return s + "]";
  }

private:
  F fld_;
  std::size_t rows_, cols_;
  std::vector<Elem> a_;
};

// ---------------------------------------------------------------------------
// Subspace kit. A subspace of k^n is a matrix whose columns are a basis; the
// canonical form (column echelon, pivot rows normalized) makes equality a
// matrix compare.

/// Canonical column-space basis: RREF of the transpose, transposed back.
template <class F>
Matrix<F> colspace(const Matrix<F>& m) {
  auto e = m.transpose().rref();
  std::size_t r = e.pivots.size();
  return e.r.rows_slice(0, r).transpose();
}

template <class F>
Matrix<F> subspace_sum(const Matrix<F>& a, const Matrix<F>& b) {
  return colspace(a.hstack(b));
}

/// span(a) ∩ span(b) via the kernel of [a | b].
template <class F>
Matrix<F> subspace_intersect(const Matrix<F>& a, const Matrix<F>& b) {
  assert(a.rows() == b.rows());
  if (a.cols() == 0 || b.cols() == 0) return Matrix<F>(a.field(), a.rows(), 0);
  Matrix<F> k = a.hstack(b).kernel_basis();
  Matrix<F> xa(a.field(), a.cols(), k.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) xa.at(i, j) = k.at(i, j);
  return colspace(a.mul(xa));
}

template <class F>
bool subspace_eq(const Matrix<F>& a, const Matrix<F>& b) {
  return colspace(a) == colspace(b);
}

/// Is v (a column) in the span of s?
template <class F>
bool in_span(const Matrix<F>& s, const Matrix<F>& v) {
  if (v.is_zero()) return true;
  if (s.cols() == 0) return false;
  return s.solve(v).has_value();
}

/// {x : m x ∈ span(s)}, canonical basis.
template <class F>
Matrix<F> preimage(const Matrix<F>& m, const Matrix<F>& s) {
  assert(m.rows() == s.rows());
  if (s.cols() == 0) return m.kernel_basis();
  Matrix<F> k = m.hstack(s).kernel_basis();
  Matrix<F> x(m.field(), m.cols(), k.cols());
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) x.at(i, j) = k.at(i, j);
  return colspace(x);
}

/// Coordinates on k^n / span(s) via the echelon complement: the non-pivot
/// standard coordinates survive, pivot coordinates are eliminated through s.
template <class F>
struct QuotientMap {
  Matrix<F> proj;  // (n - dim s) x n
  Matrix<F> lift;  // n x (n - dim s), standard-vector section
};

template <class F>
QuotientMap<F> quotient_map(const F& fld, std::size_t n, const Matrix<F>& sub) {
  Matrix<F> s = colspace(sub);
  assert(s.rows() == n);
  // pivot row of each echelon column = first nonzero entry
  std::vector<std::size_t> pivot_rows(s.cols());
  std::vector<bool> is_pivot(n, false);
  for (std::size_t j = 0; j < s.cols(); ++j) {
    std::size_t i = 0;
    while (i < n && fld.is_zero(s.at(i, j))) ++i;
    assert(i < n);
    pivot_rows[j] = i;
    is_pivot[i] = true;
  }
  std::vector<std::size_t> free_rows;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) free_rows.push_back(i);
  QuotientMap<F> qm{Matrix<F>(fld, free_rows.size(), n),
                    Matrix<F>(fld, n, free_rows.size())};
  // proj(v) = (v - sum_j v[p_j] * s_col_j) restricted to free rows
  for (std::size_t r = 0; r < free_rows.size(); ++r) {
    std::size_t fr = free_rows[r];
    qm.proj.at(r, fr) = fld.one();
    for (std::size_t j = 0; j < s.cols(); ++j)
      qm.proj.at(r, pivot_rows[j]) =
          fld.sub(qm.proj.at(r, pivot_rows[j]), s.at(fr, j));
    qm.lift.at(fr, r) = fld.one();
  }
  return qm;
}

}  // namespace qrep
