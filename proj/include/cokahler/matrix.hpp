#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cokahler/errors.hpp"
#include "cokahler/numeric.hpp"

namespace cokahler {

/// Dense matrix of exact rationals. Every operation is exact; the integer-only
/// routines (Smith form, order detection, ...) reject non-integer entries.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DimensionError("ragged initializer for Matrix");
      for (std::int64_t v : row) data_.emplace_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_square() const { return rows_ == cols_; }

  bool is_integral() const {
    for (const Rat& q : data_)
      if (!is_integer(q)) return false;
    return true;
  }

  bool is_zero() const {
    for (const Rat& q : data_)
      if (!q.is_zero()) return false;
    return true;
  }

  Rat trace() const {
    if (!is_square()) throw DimensionError("trace of a non-square matrix");
    Rat t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o, "+");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o, "-");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const Rat& s) {
    for (Rat& q : data_) q *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rat& s) { return a *= s; }
  friend Matrix operator*(const Rat& s, Matrix a) { return a *= s; }
  friend Matrix operator-(const Matrix& a) {
    Matrix r = a;
    for (Rat& q : r.data_) q = -q;
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionError("matrix product shape mismatch: " + a.shape_string() + " * " +
                           b.shape_string());
    Matrix out(a.rows_, b.cols_);
    if (a.is_integral() && b.is_integral()) {
      // Integer fast path: cpp_int arithmetic avoids per-step gcd work.
      std::vector<Int> ai = a.integer_data(), bi = b.integer_data();
      Int acc;
      for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
          acc = 0;
          for (std::size_t k = 0; k < a.cols_; ++k) acc += ai[i * a.cols_ + k] * bi[k * b.cols_ + j];
          out(i, j) = Rat(std::move(acc));
        }
    } else {
      for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
          Rat acc = 0;
          for (std::size_t k = 0; k < a.cols_; ++k) acc += a(i, k) * b(k, j);
          out(i, j) = std::move(acc);
        }
    }
    return out;
  }

  /// Non-negative integer power of a square matrix (binary exponentiation).
  Matrix pow(std::uint64_t e) const {
    if (!is_square()) throw DimensionError("power of a non-square matrix");
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  /// Entries as integers; callers must check is_integral first.
  std::vector<Int> integer_data() const {
    std::vector<Int> out;
    out.reserve(data_.size());
    for (const Rat& q : data_) out.push_back(numerator(q));
    return out;
  }

  std::string shape_string() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i == 0 ? "[" : " ");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "[") << (*this)(i, j);
      os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
  }

 private:
  void require_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError(std::string("matrix ") + op + " shape mismatch: " + shape_string() +
                           " vs " + o.shape_string());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Sum I + T + T^2 + ... + T^{m-1} together with the trace of every power.
/// One pass over the powers serves both the averaging projector and the
/// Molien trace average.
struct PowerScan {
  Matrix sum;
  std::vector<Rat> traces;
};

inline PowerScan power_scan(const Matrix& t, std::uint64_t m) {
  if (!t.is_square()) throw DimensionError("power_scan needs a square matrix");
  const std::size_t n = t.rows();
  PowerScan scan;
  scan.sum = Matrix::zero(n, n);
  scan.traces.reserve(m);
  if (t.is_integral()) {
    const std::vector<Int> ti = t.integer_data();
    std::vector<Int> p(n * n, 0), sum(n * n, 0), next(n * n);
    for (std::size_t i = 0; i < n; ++i) p[i * n + i] = 1;
    for (std::uint64_t j = 0; j < m; ++j) {
      Int tr = 0;
      for (std::size_t i = 0; i < n; ++i) tr += p[i * n + i];
      scan.traces.emplace_back(std::move(tr));
      for (std::size_t i = 0; i < n * n; ++i) sum[i] += p[i];
      if (j + 1 < m) {
        Int acc;
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) {
            acc = 0;
            for (std::size_t k = 0; k < n; ++k) acc += p[r * n + k] * ti[k * n + c];
            next[r * n + c] = std::move(acc);
          }
        p.swap(next);
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) scan.sum(i, j) = Rat(std::move(sum[i * n + j]));
  } else {
    Matrix p = Matrix::identity(n);
    for (std::uint64_t j = 0; j < m; ++j) {
      scan.traces.push_back(p.trace());
      scan.sum += p;
      if (j + 1 < m) p = p * t;
    }
  }
  return scan;
}

}  // namespace cokahler
