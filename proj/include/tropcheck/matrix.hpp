// Copyright 2026 The tropcheck Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/// \file matrix.hpp
/// Max-plus vectors and matrices over ExtScalar, plus residuation.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tropcheck/error.hpp"
#include "tropcheck/scalar.hpp"

namespace tropcheck {

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n, ExtScalar fill = ExtScalar::bottom())
      : entries_(n, std::move(fill)) {}
  explicit Vector(std::vector<ExtScalar> entries) : entries_(std::move(entries)) {}
  Vector(std::initializer_list<ExtScalar> entries) : entries_(entries) {}

  std::size_t size() const noexcept { return entries_.size(); }
  const ExtScalar& operator[](std::size_t i) const { return entries_[i]; }
  ExtScalar& operator[](std::size_t i) { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<ExtScalar>& entries() const noexcept { return entries_; }

  bool is_finite() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const ExtScalar& e) { return e.is_finite(); });
  }
  bool is_all_bottom() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const ExtScalar& e) { return e.is_bottom(); });
  }

  /// i-th standard basis vector of length n: 0 at i, -inf elsewhere.
  static Vector unit(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = ExtScalar(0);
    return v;
  }

  friend bool operator==(const Vector&, const Vector&) = default;
  friend auto operator<=>(const Vector& a, const Vector& b) {
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                  b.entries_.begin(), b.entries_.end());
  }

 private:
  std::vector<ExtScalar> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const Vector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, ExtScalar fill = ExtScalar::bottom())
      : rows_(rows), cols_(cols), entries_(rows * cols, std::move(fill)) {}
  /// Row-major nested initialiser, e.g. Matrix{{0, -3}, {0, 0}}.
  Matrix(std::initializer_list<std::initializer_list<ExtScalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) {
        throw Error(ErrorKind::kDimensionMismatch, "ragged matrix initialiser");
      }
      entries_.insert(entries_.end(), r.begin(), r.end());
    }
  }

  static Matrix from_columns(const std::vector<Vector>& columns) {
    if (columns.empty()) return {};
    Matrix m(columns.front().size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != m.rows_) {
        throw Error(ErrorKind::kDimensionMismatch, "columns of unequal length");
      }
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }
  static Matrix from_rows(const std::vector<Vector>& rows) {
    return from_columns(rows).transposed();
  }
  /// All-zero matrix; the max-plus "J".
  static Matrix zeros(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols, ExtScalar(0));
  }
  /// Max-plus identity: 0 on the diagonal, -inf elsewhere.
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ExtScalar(0);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const ExtScalar& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  ExtScalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  Vector column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vector row(std::size_t i) const {
    return Vector(std::vector<ExtScalar>(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                         entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
  }
  std::vector<Vector> columns() const {
    std::vector<Vector> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }
  std::vector<Vector> rows_list() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_finite() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const ExtScalar& e) { return e.is_finite(); });
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExtScalar> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

inline void require_finite(const Matrix& a, const char* what) {
  if (!a.is_finite()) {
    throw Error(ErrorKind::kNonFiniteEntries, std::string(what) + " must be finite");
  }
}
inline void require_finite(const Vector& x, const char* what) {
  if (!x.is_finite()) {
    throw Error(ErrorKind::kNonFiniteEntries, std::string(what) + " must be finite");
  }
}
inline void require_square(const Matrix& a) {
  if (!a.is_square()) {
    throw Error(ErrorKind::kNotSquare, std::to_string(a.rows()) + "x" +
                                           std::to_string(a.cols()) + " matrix");
  }
}

namespace detail {
inline void require_same_length(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "vector lengths " + std::to_string(x.size()) +
                                                   " and " + std::to_string(y.size()));
  }
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Vector operations

inline Vector vec_add(const Vector& x, const Vector& y) {
  detail::require_same_length(x, y);
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = tadd(x[i], y[i]);
  return out;
}

inline Vector pointwise_min(const Vector& x, const Vector& y) {
  detail::require_same_length(x, y);
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::min(x[i], y[i]);
  return out;
}

inline bool vec_leq(const Vector& x, const Vector& y) {
  detail::require_same_length(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] < x[i]) return false;
  }
  return true;
}

inline Vector scale(const Scalar& lambda, const Vector& x) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = tmul(lambda, x[i]);
  return out;
}

/// Largest entry of a vector with at least one finite entry.
inline Scalar max_entry(const Vector& x) {
  ExtScalar best = ExtScalar::bottom();
  for (const auto& e : x) best = tadd(best, e);
  if (best.is_bottom()) throw Error(ErrorKind::kInvalidArgument, "all entries are -inf");
  return best.value();
}

// ---------------------------------------------------------------------------
// Matrix products

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::kDimensionMismatch, "inner dimensions " + std::to_string(a.cols()) +
                                                   " and " + std::to_string(b.rows()));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const ExtScalar& aik = a(i, k);
      if (aik.is_bottom()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = tadd(out(i, j), tmul(aik, b(k, j)));
    }
  return out;
}

/// A ⊗ x with x read as a column.
inline Vector mat_vec(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "matrix has " + std::to_string(a.cols()) +
                                                   " columns, vector has " +
                                                   std::to_string(x.size()) + " entries");
  }
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] = tadd(out[i], tmul(a(i, k), x[k]));
  return out;
}

/// x ⊗ A with x read as a row.
inline Vector vec_mat(const Vector& x, const Matrix& a) {
  return mat_vec(a.transposed(), x);
}

// ---------------------------------------------------------------------------
// Residuation

/// A \ B: the greatest X with A ⊗ X <= B, (A\B)_ij = min_k (B_kj - A_ki).
/// A must be finite. -inf entries in B propagate to -inf in the result.
inline Matrix left_residual(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw Error(ErrorKind::kDimensionMismatch, "left_residual needs equal row counts");
  }
  require_finite(a, "left_residual divisor");
  Matrix out(a.cols(), b.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      ExtScalar best;
      bool first = true;
      for (std::size_t k = 0; k < a.rows(); ++k) {
        ExtScalar cand = b(k, j).is_bottom() ? ExtScalar::bottom()
                                             : ExtScalar(b(k, j).value() - a(k, i).value());
        if (first || cand < best) best = std::move(cand);
        first = false;
      }
      out(i, j) = std::move(best);
    }
  return out;
}

/// Vector form of left_residual: the principal solution of A ⊗ x <= b.
inline Vector left_residual(const Matrix& a, const Vector& b) {
  return left_residual(a, Matrix::from_columns({b})).column(0);
}

/// A \ A / A: the greatest X with A ⊗ X ⊗ A <= A,
/// B_ij = min_{k,l} (A_kl - A_ki - A_jl).
inline Matrix double_residual(const Matrix& a) {
  require_square(a);
  require_finite(a, "double_residual argument");
  const std::size_t n = a.rows();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar best = a(0, 0).value() - a(0, i).value() - a(j, 0).value();
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Scalar cand = a(k, l).value() - a(k, i).value() - a(j, l).value();
          if (cand < best) best = std::move(cand);
        }
      out(i, j) = std::move(best);
    }
  return out;
}

}  // namespace tropcheck
