#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "critgroup/integer.hpp"

namespace critgroup {

using IntVector = std::vector<BigInt>;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Columns are the natural unit for lattice work here: relation matrices,
/// bases and morphism images are all stored column-wise, so the API has
/// column extraction and horizontal concatenation as first-class operations.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const BigInt> entries);
  static IntMatrix from_columns(std::size_t rows,
                                const std::vector<IntVector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector column(std::size_t c) const;
  IntVector row(std::size_t r) const;
  void set_column(std::size_t c, std::span<const BigInt> values);

  /// Columns [first, first + count).
  IntMatrix column_range(std::size_t first, std::size_t count) const;
  /// Rows [first, first + count).
  IntMatrix row_range(std::size_t first, std::size_t count) const;
  IntMatrix select_rows(std::span<const std::size_t> indices) const;

  IntMatrix transpose() const;

  /// [*this | other]; row counts must agree.
  IntMatrix hconcat(const IntMatrix& other) const;

  bool is_zero() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, std::span<const BigInt> x);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const BigInt& s, const IntMatrix& a);

IntVector unit_vector(std::size_t n, std::size_t i);
IntVector to_int_vector(std::initializer_list<long> values);

/// Plain-text fixture format: first line "rows cols", then one line per row
/// of space-separated decimal integers.
std::string to_text(const IntMatrix& m);
IntMatrix matrix_from_text(std::string_view text);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace critgroup
