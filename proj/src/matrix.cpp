#include "shiftequiv/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace shiftequiv {

Entry checked_add(Entry a, Entry b) {
  Entry out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in addition");
  }
  return out;
}

Entry checked_mul(Entry a, Entry b) {
  Entry out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in multiplication");
  }
  return out;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("matrix has " + std::to_string(entries_.size())
                         + " entries, expected "
                         + std::to_string(rows_ * cols_));
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Entry>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
  entries_.reserve(rows_ * cols_);
  for (auto const& r : rows) {
    if (r.size() != cols_) {
      throw DimensionError("ragged matrix literal");
    }
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols, std::vector<Entry>(rows * cols, 0));
}

Matrix Matrix::identity(std::size_t n) {
  std::vector<Entry> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    e[i * n + i] = 1;
  }
  return Matrix(n, n, std::move(e));
}

Entry Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw std::out_of_range("matrix index (" + std::to_string(i) + ","
                            + std::to_string(j) + ") out of range for "
                            + shape_string());
  }
  return (*this)(i, j);
}

Matrix Matrix::transpose() const {
  std::vector<Entry> e(entries_.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      e[j * rows_ + i] = (*this)(i, j);
    }
  }
  return Matrix(cols_, rows_, std::move(e));
}

Entry Matrix::sum() const {
  return std::accumulate(entries_.begin(), entries_.end(), Entry{0},
                         checked_add);
}

Entry Matrix::max_entry() const {
  return *std::max_element(entries_.begin(), entries_.end());
}

Entry Matrix::trace() const {
  if (!is_square()) {
    throw DimensionError("trace of non-square " + shape_string() + " matrix");
  }
  Entry t = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    t = checked_add(t, (*this)(i, i));
  }
  return t;
}

std::vector<Entry> Matrix::row_sums() const {
  std::vector<Entry> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto r = row(i);
    out.push_back(std::accumulate(r.begin(), r.end(), Entry{0}, checked_add));
  }
  return out;
}

std::string Matrix::shape_string() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

std::ostream& operator<<(std::ostream& os, Matrix const& m) {
  os << '(';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i != 0) {
      os << "; ";
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != 0) {
        os << ' ';
      }
      os << m(i, j);
    }
  }
  return os << ')';
}

Matrix multiply(Matrix const& a, Matrix const& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("cannot multiply " + a.shape_string() + " by "
                         + b.shape_string());
  }
  std::vector<Entry> e(a.rows() * b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Entry const aik = a(i, k);
      if (aik == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        Entry& dst = e[i * b.cols() + j];
        dst = checked_add(dst, checked_mul(aik, b(k, j)));
      }
    }
  }
  return Matrix(a.rows(), b.cols(), std::move(e));
}

Matrix power(Matrix const& a, std::size_t k) {
  if (!a.is_square()) {
    throw DimensionError("power of non-square " + a.shape_string()
                         + " matrix");
  }
  Matrix result = Matrix::identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) {
    result = multiply(result, a);
  }
  return result;
}

std::vector<Entry> trace_powers(Matrix const& a, std::size_t kmax) {
  if (!a.is_square()) {
    throw DimensionError("trace_powers needs a square matrix, got "
                         + a.shape_string());
  }
  if (kmax == 0) {
    throw std::invalid_argument("trace_powers needs kmax >= 1");
  }
  std::vector<Entry> out;
  out.reserve(kmax);
  Matrix p = a;
  out.push_back(p.trace());
  for (std::size_t k = 2; k <= kmax; ++k) {
    p = multiply(p, a);
    out.push_back(p.trace());
  }
  return out;
}

Matrix block_bipartite(Matrix const& r, Matrix const& s) {
  if (r.rows() != s.cols() || r.cols() != s.rows()) {
    throw DimensionError("block_bipartite needs R m x n and S n x m, got R "
                         + r.shape_string() + " and S " + s.shape_string());
  }
  std::size_t const m = r.rows();
  std::size_t const n = r.cols();
  std::size_t const size = m + n;
  std::vector<Entry> e(size * size, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      e[i * size + (m + j)] = r(i, j);
      e[(m + j) * size + i] = s(j, i);
    }
  }
  return Matrix(size, size, std::move(e));
}

Matrix block_diagonal(Matrix const& a, Matrix const& b) {
  if (!a.is_square() || !b.is_square()) {
    throw DimensionError("block_diagonal needs square blocks");
  }
  std::size_t const m = a.rows();
  std::size_t const size = m + b.rows();
  std::vector<Entry> e(size * size, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      e[i * size + j] = a(i, j);
    }
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      e[(m + i) * size + (m + j)] = b(i, j);
    }
  }
  return Matrix(size, size, std::move(e));
}

}  // namespace shiftequiv
