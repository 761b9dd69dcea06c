#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace bunpic {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
Int floor_div(const Int& a, const Int& b);
Int mod_floor(const Int& a, const Int& m);
Int content(const IntVector& v);
bool is_zero(const IntVector& v);
std::string to_string(const IntVector& v);

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& cols);
  static IntMatrix from_rows(std::size_t cols, const std::vector<IntVector>& rows);
  static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix diagonal(const IntVector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;
  std::vector<IntVector> columns() const;
  IntMatrix column_range(std::size_t begin, std::size_t end) const;
  IntMatrix transpose() const;
  IntVector apply(const IntVector& v) const;
  bool is_zero() const;
  bool is_symmetric() const;

  void swap_columns(std::size_t a, std::size_t b);
  void swap_rows(std::size_t a, std::size_t b);
  // col[dst] += k * col[src]
  void add_column_multiple(std::size_t dst, std::size_t src, const Int& k);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& k);
  void negate_column(std::size_t j);
  void negate_row(std::size_t i);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Int& k, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::vector<std::vector<std::string>> to_strings() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// Exact rational matrix, used for forms extended from finite-index sublattices.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  explicit RatMatrix(const IntMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatMatrix transpose() const;
  // Throws std::domain_error when singular.
  RatMatrix inverse() const;
  bool is_integral() const;
  IntMatrix to_integral() const;
  Int denominator_lcm() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rat& k, const RatMatrix& a);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

// x^T m y over the rationals.
Rat bilinear(const RatMatrix& m, const IntVector& x, const IntVector& y);

}  // namespace bunpic
