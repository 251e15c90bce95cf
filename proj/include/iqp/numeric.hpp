// Copyright 2026 The iqp Authors
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

// Exact scalar types, dense matrices and the error hierarchy shared by every
// module. Nothing in the solve path touches floating point.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace iqp {

using BigInt = mpz_class;
using BigRat = mpq_class;

using IntVector = std::vector<BigInt>;
using RatVector = std::vector<BigRat>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class RankDeficientRows : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class NotConcave : public Error {
 public:
  using Error::Error;
};

class NotAVertexCover : public Error {
 public:
  using Error::Error;
};

class KappaOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Dense row-major matrix
// ---------------------------------------------------------------------------

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
      if (r.size() != cols_) throw InvalidInstance("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows,
                          std::size_t cols) {
    Matrix m(0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  std::vector<T> row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }

  std::vector<T> col_vector(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  void append_row(std::span<const T> r) {
    if (r.size() != cols_) throw InvalidInstance("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }
  void append_row(const std::vector<T>& r) {
    append_row(std::span<const T>(r.data(), r.size()));
  }
  void pop_row() {
    data_.resize(data_.size() - cols_);
    --rows_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Rows listed in `idx`, in that order.
  Matrix select_rows(std::span<const std::size_t> idx) const {
    Matrix m(0, cols_);
    for (std::size_t i : idx) m.append_row(row(i));
    return m;
  }

  Matrix select_cols(std::span<const std::size_t> idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < idx.size(); ++k)
        m(i, k) = (*this)(i, idx[k]);
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<BigRat>;

// ---------------------------------------------------------------------------
// Scalar and vector helpers
// ---------------------------------------------------------------------------

inline BigInt floor_rat(const BigRat& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline BigInt ceil_rat(const BigRat& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline bool is_integral(const BigRat& q) { return q.get_den() == 1; }

inline bool is_integral(const RatVector& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const BigRat& q) { return is_integral(q); });
}

inline RatVector to_rat(const IntVector& v) {
  return RatVector(v.begin(), v.end());
}

inline IntVector to_int(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) {
    if (!is_integral(q)) throw std::logic_error("to_int: fractional entry");
    out.push_back(q.get_num());
  }
  return out;
}

inline RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

template <class T, class U>
inline auto dot(std::span<const T> a, std::span<const U> b) {
  using R = std::conditional_t<std::is_same_v<T, BigRat> ||
                                   std::is_same_v<U, BigRat>,
                               BigRat, BigInt>;
  R s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline BigInt dot(const IntVector& a, const IntVector& b) {
  return dot(std::span<const BigInt>(a), std::span<const BigInt>(b));
}
inline BigRat dot(const RatVector& a, const RatVector& b) {
  return dot(std::span<const BigRat>(a), std::span<const BigRat>(b));
}

template <class T>
std::vector<T> mat_vec(const Matrix<T>& m, const std::vector<T>& v) {
  std::vector<T> out(m.rows(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

inline RatVector mat_vec(const IntMatrix& m, const RatVector& v) {
  RatVector out(m.rows(), BigRat(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

// Lexicographic order on equal-length vectors.
template <class T>
bool lex_less(const std::vector<T>& a, const std::vector<T>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline BigInt inf_norm(const IntVector& v) {
  BigInt m = 0;
  for (const auto& x : v) {
    BigInt a = abs(x);
    if (a > m) m = a;
  }
  return m;
}

inline BigInt max_abs_entry(const IntMatrix& m) {
  BigInt best = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& x : m.row(i)) {
      BigInt a = abs(x);
      if (a > best) best = a;
    }
  return best;
}

inline BigInt content_gcd(std::span<const BigInt> v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

template <class T>
std::string to_string(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace iqp
