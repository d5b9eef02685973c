#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "openmarkov/rational.hpp"

namespace openmarkov {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }
  static RatMatrix identity(std::size_t n);
  /// One row per vector; all vectors must share a length (`cols` is used when
  /// the list is empty).
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix from_columns(const std::vector<RatVector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector column(std::size_t c) const;
  RatMatrix transpose() const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  RatMatrix& operator+=(const RatMatrix& other);
  RatMatrix& operator-=(const RatMatrix& other);
  RatMatrix& operator*=(const Rational& scalar);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RatMatrix operator+(RatMatrix a, const RatMatrix& b);
RatMatrix operator-(RatMatrix a, const RatMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(RatMatrix a, const Rational& scalar);
RatVector operator*(const RatMatrix& a, const RatVector& v);

/// Block-diagonal [[A, 0], [0, B]].
RatMatrix direct_sum_matrix(const RatMatrix& a, const RatMatrix& b);

/// [A | B]
RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);
/// [A ; B]
RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);

/// "[[a,b],[c,d]]" with canonical rational entries.
std::string to_string(const RatMatrix& m);

}  // namespace openmarkov
