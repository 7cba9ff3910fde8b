#include "hilbkit/linalg.hpp"

#include <algorithm>

#include "hilbkit/error.hpp"

namespace hilbkit {

void RationalMatrix::append_row(const RationalVector& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw DomainError("row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<RationalVector> RationalMatrix::as_rows() const {
  std::vector<RationalVector> m(rows_, RationalVector(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m[r][c] = (*this)(r, c);
  return m;
}

std::size_t RationalMatrix::rank() const {
  // Clear denominators row by row, then Bareiss.
  std::vector<std::vector<Integer>> a(rows_, std::vector<Integer>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& q = (*this)(r, c);
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& q = (*this)(r, c);
      a[r][c] = q.get_num() * (l / q.get_den());
    }
  }
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t best = rows_;
    for (std::size_t r = rank; r < rows_; ++r) {
      if (a[r][col] == 0) continue;
      if (best == rows_ || abs(a[r][col]) > abs(a[best][col])) best = r;
    }
    if (best == rows_) continue;
    std::swap(a[rank], a[best]);
    const Integer& p = a[rank][col];
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (a[r][col] == 0) {
        // Still has to be scaled to keep Bareiss divisibility exact.
        for (std::size_t c = col + 1; c < cols_; ++c) {
          a[r][c] = a[r][c] * p;
          mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (std::size_t c = col + 1; c < cols_; ++c) {
        a[r][c] = a[r][c] * p - a[rank][c] * a[r][col];
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> RationalMatrix::rref(std::vector<RationalVector>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t best = m.size();
    for (std::size_t r = row; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      if (best == m.size() || abs(m[r][col].get_num()) > abs(m[best][col].get_num())) best = r;
    }
    if (best == m.size()) continue;
    std::swap(m[row], m[best]);
    Rational inv = 1 / m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<RationalVector> RationalMatrix::nullspace() const {
  auto m = as_rows();
  auto pivots = rref(m, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols_);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> RationalMatrix::solve_unique(const RationalVector& b) const {
  if (b.size() != rows_) throw DomainError("right-hand side length mismatch");
  auto m = as_rows();
  for (std::size_t r = 0; r < rows_; ++r) m[r].push_back(b[r]);
  auto pivots = rref(m, cols_ + 1);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
  if (pivots.size() != cols_) return std::nullopt;                       // free variables
  RationalVector x(cols_);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][cols_];
  return x;
}

Rational RationalMatrix::determinant() const {
  if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
  auto m = as_rows();
  Rational det = 1;
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t piv = col;
    while (piv < rows_ && m[piv][col] == 0) ++piv;
    if (piv == rows_) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < rows_; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < cols_; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

void SpanBuilder::reduce(RationalVector& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    auto p = pivots_[i];
    if (v[p] == 0) continue;
    Rational f = v[p];
    for (std::size_t c = p; c < dim_; ++c) v[c] -= f * rows_[i][c];
  }
}

bool SpanBuilder::add(RationalVector v) {
  if (v.size() != dim_) throw DomainError("vector length mismatch");
  reduce(v);
  auto it = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
  if (it == v.end()) return false;
  auto p = static_cast<std::size_t>(it - v.begin());
  Rational inv = 1 / v[p];
  for (std::size_t c = p; c < dim_; ++c) v[c] *= inv;
  // Keep rows fully reduced against the new pivot so reduce() stays one pass.
  for (auto& row : rows_) {
    if (row[p] == 0) continue;
    Rational f = row[p];
    for (std::size_t c = p; c < dim_; ++c) row[c] -= f * v[c];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool SpanBuilder::contains(RationalVector v) const {
  if (v.size() != dim_) throw DomainError("vector length mismatch");
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

}  // namespace hilbkit
