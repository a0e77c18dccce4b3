#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "qlens/bigint.hpp"

namespace qlens {

/// Dense row-major matrix of arbitrary-precision integers. Indices are 0-based.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const BigInt& factor);
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const BigInt& factor);
  void negate_row(std::size_t i);

  /// Principal block on indices [first, last] inclusive.
  IntMatrix principal_block(std::size_t first, std::size_t last) const;

  bool is_upper_triangular() const;
  /// Upper triangular with every diagonal entry equal to one.
  bool is_unipotent_upper() const;
  bool is_diagonal() const;

  /// Canonical text key: rows separated by ';', entries by ','.
  std::string digest() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
std::vector<BigInt> operator*(const IntMatrix& a, const std::vector<BigInt>& x);

/// Inverse of a unipotent upper-triangular matrix, exact over the integers.
IntMatrix unipotent_inverse(const IntMatrix& u);

/// Determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& a);

}  // namespace qlens
