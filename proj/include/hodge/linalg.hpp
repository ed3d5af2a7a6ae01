#pragma once

// Exact linear algebra over a field F (Rational or CycloScalar): dense matrices,
// sparse incremental echelon forms, kernels and subspace intersection.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hodge/cyclotomic.hpp"

namespace hodge {

inline Rational inv(const Rational& q) {
  if (sgn(q) == 0) throw DivisionByZero("inverse of zero rational");
  return 1 / q;
}
template <int D>
Cyclotomic<D> inv(const Cyclotomic<D>& x) {
  return x.inverse();
}

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<F> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const F> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void append_row(std::span<const F> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
  }
  friend Matrix operator*(const F& s, Matrix m) {
    for (auto& x : m.data_) x = s * x;
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// In-place reduced row echelon form; returns pivot columns. Rows beyond the rank are zero.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const F piv_inv = inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!is_zero(m(r, j))) m(r, j) = m(r, j) * piv_inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref(m).size();
}

/// Basis of { v : M v = 0 }.
template <class F>
std::vector<std::vector<F>> right_kernel(Matrix<F> m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(m.cols());
    v[f] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Basis of { v : v^T M = 0 }.
template <class F>
std::vector<std::vector<F>> left_kernel(const Matrix<F>& m) {
  return right_kernel(m.transpose());
}

/// Sparse row: (column, value) pairs with strictly increasing columns and nonzero values.
template <class F>
using SparseRow = std::vector<std::pair<std::uint32_t, F>>;

/// row += factor * other
template <class F>
SparseRow<F> axpy(const SparseRow<F>& row, const F& factor, const SparseRow<F>& other) {
  SparseRow<F> out;
  out.reserve(row.size() + other.size());
  auto a = row.begin();
  auto b = other.begin();
  while (a != row.end() || b != other.end()) {
    if (b == other.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      F v = a->second + factor * b->second;
      if (!is_zero(v)) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

/// Incremental echelon basis of a row space; the pivot of a row is its smallest column.
template <class F>
class SparseEchelon {
 public:
  /// Adds a row to the span; returns true if the rank grew.
  bool insert(SparseRow<F> row) {
    row = reduce_leading(std::move(row));
    if (row.empty()) return false;
    const F s = inv(row.front().second);
    for (auto& [c, v] : row) v = v * s;
    const auto lead = row.front().first;
    rows_.emplace(lead, std::move(row));
    return true;
  }

  /// Reduces until the leading column is not a pivot column.
  SparseRow<F> reduce_leading(SparseRow<F> row) const {
    while (!row.empty()) {
      auto it = rows_.find(row.front().first);
      if (it == rows_.end()) break;
      row = axpy(row, F(-row.front().second), it->second);
    }
    return row;
  }

  /// Full normal form: no entry sits in a pivot column.
  SparseRow<F> reduce(SparseRow<F> row) const {
    std::size_t i = 0;
    while (i < row.size()) {
      auto it = rows_.find(row[i].first);
      if (it == rows_.end()) {
        ++i;
        continue;
      }
      const auto col = row[i].first;
      row = axpy(row, F(-row[i].second), it->second);
      i = std::lower_bound(row.begin(), row.end(), col,
                           [](const auto& e, std::uint32_t c) { return e.first < c; }) -
          row.begin();
    }
    return row;
  }

  bool contains(const SparseRow<F>& row) const { return reduce_leading(row).empty(); }

  std::size_t rank() const { return rows_.size(); }

  std::vector<std::uint32_t> pivots() const {
    std::vector<std::uint32_t> out;
    out.reserve(rows_.size());
    for (const auto& [c, r] : rows_) out.push_back(c);
    return out;
  }

  /// Back-substitutes to reduced row echelon form.
  void make_reduced() {
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      SparseRow<F> tail(it->second.begin() + 1, it->second.end());
      tail = reduce(std::move(tail));
      SparseRow<F> full;
      full.reserve(tail.size() + 1);
      full.push_back(it->second.front());
      full.insert(full.end(), tail.begin(), tail.end());
      it->second = std::move(full);
    }
  }

  const std::map<std::uint32_t, SparseRow<F>>& rows() const { return rows_; }

 private:
  std::map<std::uint32_t, SparseRow<F>> rows_;
};

/// Basis (in echelon form, leading 1s) of span(U) ∩ span(W) by the Zassenhaus method.
template <class F>
std::vector<SparseRow<F>> intersect_spans(const std::vector<SparseRow<F>>& u,
                                          const std::vector<SparseRow<F>>& w,
                                          std::uint32_t ncols) {
  SparseEchelon<F> ech;
  for (const auto& r : u) {
    SparseRow<F> row = r;
    for (const auto& [c, v] : r) row.emplace_back(c + ncols, v);
    ech.insert(std::move(row));
  }
  for (const auto& r : w) ech.insert(r);
  std::vector<SparseRow<F>> out;
  for (const auto& [lead, row] : ech.rows()) {
    if (lead < ncols) continue;
    SparseRow<F> shifted;
    shifted.reserve(row.size());
    for (const auto& [c, v] : row) shifted.emplace_back(c - ncols, v);
    out.push_back(std::move(shifted));
  }
  return out;
}

}  // namespace hodge
