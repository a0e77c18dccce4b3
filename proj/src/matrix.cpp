#include "qlens/matrix.hpp"

#include <utility>

#include "qlens/error.hpp"

namespace qlens {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(Errc::DimensionMismatch, "ragged matrix literal");
    }
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const BigInt& s = (*this)(source, j);
    if (s != 0) mpz_addmul((*this)(target, j).get_mpz_t(), factor.get_mpz_t(), s.get_mpz_t());
  }
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const BigInt& s = (*this)(i, source);
    if (s != 0) mpz_addmul((*this)(i, target).get_mpz_t(), factor.get_mpz_t(), s.get_mpz_t());
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) {
    BigInt& x = (*this)(i, j);
    mpz_neg(x.get_mpz_t(), x.get_mpz_t());
  }
}

IntMatrix IntMatrix::principal_block(std::size_t first, std::size_t last) const {
  if (!square() || first > last || last >= rows_) {
    throw Error(Errc::IndexOutOfRange, "block [" + std::to_string(first) + ", " +
                                           std::to_string(last) + "] outside " +
                                           std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  const std::size_t k = last - first + 1;
  IntMatrix out(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out(i, j) = (*this)(first + i, first + j);
  }
  return out;
}

bool IntMatrix::is_upper_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < i && j < cols_; ++j) {
      if ((*this)(i, j) != 0) return false;
    }
  }
  return true;
}

bool IntMatrix::is_unipotent_upper() const {
  if (!square() || !is_upper_triangular()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if ((*this)(i, i) != 1) return false;
  }
  return true;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && (*this)(i, j) != 0) return false;
    }
  }
  return true;
}

std::string IntMatrix::digest() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i > 0) out += ';';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out += ',';
      out += (*this)(i, j).get_str(10);
    }
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
  }
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
      }
    }
  }
  return c;
}

namespace {

template <class Op>
IntMatrix elementwise(const IntMatrix& a, const IntMatrix& b, Op op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::DimensionMismatch, "elementwise shape mismatch");
  }
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = op(a(i, j), b(i, j));
  }
  return c;
}

}  // namespace

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  return elementwise(a, b, [](const BigInt& x, const BigInt& y) -> BigInt { return x + y; });
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  return elementwise(a, b, [](const BigInt& x, const BigInt& y) -> BigInt { return x - y; });
}

std::vector<BigInt> operator*(const IntMatrix& a, const std::vector<BigInt>& x) {
  if (a.cols() != x.size()) {
    throw Error(Errc::DimensionMismatch, "matrix-vector shape mismatch");
  }
  std::vector<BigInt> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) mpz_addmul(y[i].get_mpz_t(), a(i, j).get_mpz_t(), x[j].get_mpz_t());
    }
  }
  return y;
}

IntMatrix unipotent_inverse(const IntMatrix& u) {
  if (!u.is_unipotent_upper()) {
    throw Error(Errc::InvalidMatrix, "matrix is not unipotent upper triangular");
  }
  // Back substitution column by column: (U X)_{ij} = delta_ij.
  const std::size_t n = u.rows();
  IntMatrix x = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t ii = j; ii-- > 0;) {
      BigInt acc = 0;
      for (std::size_t k = ii + 1; k <= j; ++k) acc += u(ii, k) * x(k, j);
      x(ii, j) = -acc;
    }
  }
  return x;
}

BigInt determinant(const IntMatrix& a) {
  if (!a.square()) throw Error(Errc::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace qlens
