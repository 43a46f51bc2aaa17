#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "octlie/rational.hpp"

namespace octlie {

// Dense matrix of exact rationals. Dimensions are fixed at construction.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static RatMatrix identity(int n);
  static RatMatrix zero(int rows, int cols) { return RatMatrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  RatMatrix operator-() const;
  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  RatMatrix& scale(const Rational& c);

  friend bool operator==(const RatMatrix& a, const RatMatrix& b);
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

  RatMatrix transpose() const;
  Rational trace() const;

  // Kronecker product, row-major pairing: (this ⊗ o)[(i·p+k),(j·q+l)] = a[i,j]·o[k,l].
  RatMatrix kron(const RatMatrix& o) const;

  // Partial traces of a square matrix acting on a (d1·d2)-dimensional space
  // with row-major index pairing. ptrace_second traces out the second factor
  // and returns a d1×d1 matrix; ptrace_first the other way round.
  RatMatrix ptrace_second(int d1, int d2) const;
  RatMatrix ptrace_first(int d1, int d2) const;

  std::vector<Rational> flatten() const { return a_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

// Commutator ab - ba of square matrices of equal dimension.
RatMatrix mat_commutator(const RatMatrix& a, const RatMatrix& b);

// Sparse row-major matrix; entries within a row sorted by column.
struct SparseVec {
  std::vector<std::pair<int, Rational>> nz;

  void add(int idx, const Rational& v);  // accumulate, keeps sorted, drops zeros
  const Rational* find(int idx) const;
  bool empty() const { return nz.empty(); }
};

class SparseRatMatrix {
 public:
  SparseRatMatrix() = default;
  SparseRatMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows) {}

  static SparseRatMatrix from_dense(const RatMatrix& m);
  RatMatrix to_dense() const;

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  SparseVec& row(int i) { return row_[i]; }
  const SparseVec& row(int i) const { return row_[i]; }
  std::size_t nnz() const;

  void add(int i, int j, const Rational& v) { row_[i].add(j, v); }

  friend SparseRatMatrix operator*(const SparseRatMatrix& a, const SparseRatMatrix& b);
  friend bool operator==(const SparseRatMatrix& a, const SparseRatMatrix& b);
  friend bool operator!=(const SparseRatMatrix& a, const SparseRatMatrix& b) { return !(a == b); }

  SparseRatMatrix commutator_with(const SparseRatMatrix& o) const;  // [this, o]

  // trace(this · o), both square of equal dimension.
  Rational trace_product(const SparseRatMatrix& o) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<SparseVec> row_;
};

}  // namespace octlie
