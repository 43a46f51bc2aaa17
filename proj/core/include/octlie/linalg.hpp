#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "octlie/rat_matrix.hpp"

namespace octlie {

// Exact membership solver for a fixed independent spanning set.
//
// Construction reduces the basis once; solve() then answers "is v in the
// span, and with which exact coordinates" by inverting the pivot block and
// verifying the residual, so a definite not-in-span verdict is possible.
class SpanSolver {
 public:
  SpanSolver() = default;

  // Each basis vector is one flattened coordinate vector of length dim.
  // Throws std::invalid_argument if the vectors are dependent.
  explicit SpanSolver(const std::vector<std::vector<Rational>>& basis);

  int dim() const { return dim_; }
  int size() const { return n_; }

  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& v) const;
  // Same verdict for a sparse right-hand side; avoids materializing large
  // mostly-zero vectors.
  std::optional<std::vector<Rational>> solve_sparse(const SparseVec& v) const;

 private:
  int dim_ = 0;
  int n_ = 0;
  std::vector<int> pivot_cols_;            // n_ ambient positions
  RatMatrix dual_;                         // n_×n_, inverse of basis[:, pivots]
  std::vector<SparseVec> basis_cols_;      // basis vectors, sparse, for residual check
};

// Exact rank by fraction-free elimination with content removal.
int exact_rank(const std::vector<std::vector<Rational>>& rows);
int exact_rank(const RatMatrix& m);

// Exact kernel dimension of a square or rectangular matrix: cols - rank.
int kernel_dimension(const RatMatrix& m);

struct Inertia {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;

  bool operator==(const Inertia&) const = default;
};

// Exact inertia (n+, n-, n0) of a symmetric rational matrix, computed by
// symmetric fraction-free decomposition with diagonal and 2×2 block pivoting.
// Throws std::invalid_argument on asymmetric input.
Inertia inertia(const RatMatrix& symmetric);

}  // namespace octlie
