// Exact non-negative integer matrices with checked 64-bit arithmetic.

#ifndef SHIFTEQUIV_MATRIX_HPP_
#define SHIFTEQUIV_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace shiftequiv {

using Entry = std::uint64_t;

// Thrown when an exact result does not fit in an Entry.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Thrown for incompatible or invalid shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Entry checked_add(Entry a, Entry b);
Entry checked_mul(Entry a, Entry b);

//! Immutable rows x cols matrix of non-negative integers, stored row-major.
//!
//! Both dimensions are at least one. Every operation returns a new value.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries);
  Matrix(std::initializer_list<std::initializer_list<Entry>> rows);

  static Matrix zero(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Entry operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Entry at(std::size_t i, std::size_t j) const;

  std::span<const Entry> entries() const noexcept { return entries_; }
  std::span<const Entry> row(std::size_t i) const {
    return std::span<const Entry>(entries_).subspan(i * cols_, cols_);
  }

  Matrix transpose() const;
  Entry sum() const;
  Entry max_entry() const;
  Entry trace() const;
  std::vector<Entry> row_sums() const;

  std::string shape_string() const;

  friend bool operator==(Matrix const&, Matrix const&) = default;
  friend auto operator<=>(Matrix const&, Matrix const&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Entry> entries_;
};

std::ostream& operator<<(std::ostream& os, Matrix const& m);

// Exact product; throws DimensionError if a.cols() != b.rows(), OverflowError
// if any partial sum leaves the 64-bit range.
Matrix multiply(Matrix const& a, Matrix const& b);

Matrix power(Matrix const& a, std::size_t k);

// [tr(A), tr(A^2), ..., tr(A^kmax)]
std::vector<Entry> trace_powers(Matrix const& a, std::size_t kmax);

// The (m+n)x(m+n) matrix (0 R; S 0) for R m x n and S n x m.
Matrix block_bipartite(Matrix const& r, Matrix const& s);

// The block matrix (A 0; 0 B) for square A and B.
Matrix block_diagonal(Matrix const& a, Matrix const& b);

}  // namespace shiftequiv

#endif  // SHIFTEQUIV_MATRIX_HPP_
