#pragma once

#include "torhom/numbers.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace torhom {

/// Dense matrix of arbitrary-precision integers, row-major.
/// Matrices with 0 rows or 0 columns are first-class values.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMat(std::size_t rows, std::size_t cols, std::initializer_list<Int> entries);

  static IntMat identity(std::size_t n);
  static IntMat zero(std::size_t rows, std::size_t cols) { return IntMat(rows, cols); }
  static IntMat diagonal(const std::vector<Int>& d);
  static IntMat row_vector(const std::vector<Int>& v);
  static IntMat col_vector(const std::vector<Int>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const IntMat& o) const = default;

  IntMat transpose() const;
  IntMat operator*(const IntMat& o) const;
  IntMat operator+(const IntMat& o) const;
  IntMat operator-(const IntMat& o) const;
  IntMat operator-() const;
  IntMat scaled(const Int& c) const;

  bool is_zero() const;
  bool is_identity() const;

  std::vector<Int> row(std::size_t i) const;
  std::vector<Int> col(std::size_t j) const;

  /// Matrix-vector product with a rational vector.
  RatVec apply(const RatVec& x) const;

  IntMat submatrix(const std::vector<std::size_t>& row_idx,
                   const std::vector<std::size_t>& col_idx) const;

  static IntMat vstack(const IntMat& top, const IntMat& bottom);
  static IntMat hstack(const IntMat& left, const IntMat& right);
  /// Block-diagonal stacking.
  static IntMat dsum(const IntMat& a, const IntMat& b);

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);

  Int det() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

/// Block matrix builder: assemble from a grid of blocks with prescribed
/// row/column partition sizes. Missing blocks are zero.
class BlockMat {
 public:
  BlockMat(std::vector<std::size_t> row_sizes, std::vector<std::size_t> col_sizes);
  void set(std::size_t bi, std::size_t bj, const IntMat& block);
  void add(std::size_t bi, std::size_t bj, const IntMat& block);
  IntMat assemble() const;

 private:
  std::vector<std::size_t> row_off_, col_off_;
  IntMat m_;
};

}  // namespace torhom
