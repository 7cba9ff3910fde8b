#pragma once

#include <optional>
#include <vector>

#include "hilbkit/ring.hpp"

namespace hilbkit {

using RationalVector = std::vector<Rational>;

/// Dense exact matrix over Q, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const RationalVector& row);

  // Rank by fraction-free (Bareiss) elimination on the row-scaled integer
  // matrix. Pivots are chosen by largest absolute value in the column.
  std::size_t rank() const;

  // Basis of {v : A v = 0}, from the reduced row echelon form.
  std::vector<RationalVector> nullspace() const;

  // Unique solution of A v = b, or nullopt when the system is inconsistent or
  // underdetermined.
  std::optional<RationalVector> solve_unique(const RationalVector& b) const;

  Rational determinant() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;

  // Gauss-Jordan in place; returns pivot columns.
  static std::vector<std::size_t> rref(std::vector<RationalVector>& m, std::size_t cols);
  std::vector<RationalVector> as_rows() const;
};

// Incremental row echelon basis: answers "is v in the span of what was added?"
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}
  // Returns true when v was independent (and therefore added).
  bool add(RationalVector v);
  bool contains(RationalVector v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
  void reduce(RationalVector& v) const;
};

}  // namespace hilbkit
