#include "octlie/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace octlie {

namespace {

// Gauss-Jordan inverse; throws on singular input.
RatMatrix invert(RatMatrix m) {
  int n = m.rows();
  RatMatrix inv = RatMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (!m.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw std::invalid_argument("invert: singular matrix");
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    Rational p = m.at(col, col);
    for (int j = 0; j < n; ++j) {
      m.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Rational f = m.at(r, col);
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        m.at(r, j) -= f * m.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

// Divide a row of integers by its positive content (gcd).
void remove_content(std::vector<Rational>& row) {
  Rational g;
  for (const auto& x : row) {
    if (x.is_zero()) continue;
    g = g.is_zero() ? x.abs() : rational_gcd(g, x);
    if (g.is_one()) return;
  }
  if (g.is_zero() || g.is_one()) return;
  for (auto& x : row) x /= g;
}

// Clear denominators so a row becomes integral, then strip content.
void normalize_row(std::vector<Rational>& row) {
  Rational lcm(1);
  for (const auto& x : row) {
    if (x.is_zero() || x.is_integer()) continue;
    Rational d(x.to_mpq().get_den());
    lcm = lcm * d / rational_gcd(lcm, d);
  }
  if (!lcm.is_one()) {
    for (auto& x : row) x *= lcm;
  }
  remove_content(row);
}

}  // namespace

SpanSolver::SpanSolver(const std::vector<std::vector<Rational>>& basis) {
  n_ = static_cast<int>(basis.size());
  if (n_ == 0) throw std::invalid_argument("SpanSolver: empty basis");
  dim_ = static_cast<int>(basis[0].size());

  basis_cols_.resize(n_);
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(basis[i].size()) != dim_) {
      throw std::invalid_argument("SpanSolver: inconsistent vector lengths");
    }
    for (int j = 0; j < dim_; ++j) {
      if (!basis[i][j].is_zero()) basis_cols_[i].nz.emplace_back(j, basis[i][j]);
    }
  }

  // Row-reduce a working copy to find one pivot column per basis vector.
  std::vector<std::vector<Rational>> work = basis;
  std::vector<bool> used_row(n_, false);
  pivot_cols_.assign(n_, -1);
  int found = 0;
  for (int col = 0; col < dim_ && found < n_; ++col) {
    int piv = -1;
    for (int r = 0; r < n_; ++r) {
      if (!used_row[r] && !work[r][col].is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    used_row[piv] = true;
    pivot_cols_[piv] = col;
    ++found;
    const Rational p = work[piv][col];
    for (int r = 0; r < n_; ++r) {
      if (used_row[r] && r != piv) continue;
      if (r == piv) continue;
      if (work[r][col].is_zero()) continue;
      Rational f = work[r][col] / p;
      for (int j = col; j < dim_; ++j) work[r][j] -= f * work[piv][j];
    }
  }
  if (found < n_) throw std::invalid_argument("SpanSolver: dependent basis vectors");

  // Sort pivot columns ascending, keeping the basis order in the dual block.
  std::vector<int> cols = pivot_cols_;
  std::sort(cols.begin(), cols.end());
  pivot_cols_ = cols;

  RatMatrix block(n_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const Rational* v = basis_cols_[i].find(pivot_cols_[k]);
      if (v) block.at(k, i) = *v;  // column i of block = basis i restricted to pivots
    }
  }
  dual_ = invert(std::move(block));
}

std::optional<std::vector<Rational>> SpanSolver::solve(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != dim_) {
    throw std::invalid_argument("SpanSolver::solve: wrong vector length");
  }
  std::vector<Rational> coords(n_);
  for (int i = 0; i < n_; ++i) {
    Rational s;
    for (int k = 0; k < n_; ++k) {
      const Rational& vk = v[pivot_cols_[k]];
      if (vk.is_zero()) continue;
      s += dual_.at(i, k) * vk;
    }
    coords[i] = s;
  }
  // Residual check certifies membership.
  std::vector<Rational> recon(dim_);
  for (int i = 0; i < n_; ++i) {
    if (coords[i].is_zero()) continue;
    for (const auto& [j, b] : basis_cols_[i].nz) recon[j] += coords[i] * b;
  }
  for (int j = 0; j < dim_; ++j) {
    if (recon[j] != v[j]) return std::nullopt;
  }
  return coords;
}

std::optional<std::vector<Rational>> SpanSolver::solve_sparse(const SparseVec& v) const {
  std::vector<Rational> coords(n_);
  for (int k = 0; k < n_; ++k) {
    const Rational* x = v.find(pivot_cols_[k]);
    if (!x) continue;
    for (int i = 0; i < n_; ++i) {
      if (!dual_.at(i, k).is_zero()) coords[i] += dual_.at(i, k) * *x;
    }
  }
  SparseVec recon;
  for (int i = 0; i < n_; ++i) {
    if (coords[i].is_zero()) continue;
    for (const auto& [j, b] : basis_cols_[i].nz) recon.add(j, coords[i] * b);
  }
  if (recon.nz != v.nz) return std::nullopt;
  return coords;
}

int exact_rank(const std::vector<std::vector<Rational>>& rows_in) {
  std::vector<std::vector<Rational>> rows = rows_in;
  if (rows.empty()) return 0;
  const int cols = static_cast<int>(rows[0].size());
  for (auto& r : rows) normalize_row(r);

  int rank = 0;
  int top = 0;
  for (int col = 0; col < cols && top < static_cast<int>(rows.size()); ++col) {
    // Smallest nonzero pivot by absolute value limits coefficient growth.
    int piv = -1;
    for (int r = top; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col].is_zero()) continue;
      if (piv < 0 || rows[r][col].abs() < rows[piv][col].abs()) piv = r;
    }
    if (piv < 0) continue;
    std::swap(rows[top], rows[piv]);
    const Rational p = rows[top][col];
    for (int r = top + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col].is_zero()) continue;
      const Rational f = rows[r][col];
      for (int j = col; j < cols; ++j) rows[r][j] = rows[r][j] * p - rows[top][j] * f;
      remove_content(rows[r]);
    }
    ++rank;
    ++top;
  }
  return rank;
}

int exact_rank(const RatMatrix& m) {
  std::vector<std::vector<Rational>> rows(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    rows[i].resize(m.cols());
    for (int j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
  }
  return exact_rank(rows);
}

int kernel_dimension(const RatMatrix& m) { return m.cols() - exact_rank(m); }

namespace {

// Positive rescaling (a congruence) keeps the remaining block integral and small.
void strip_block_content(RatMatrix& a, const std::vector<int>& act) {
  Rational g;
  for (int i : act) {
    for (int j : act) {
      const Rational& x = a.at(i, j);
      if (x.is_zero()) continue;
      g = g.is_zero() ? x.abs() : rational_gcd(g, x);
      if (g.is_one()) return;
    }
  }
  if (g.is_zero() || g.is_one()) return;
  for (int i : act) {
    for (int j : act) a.at(i, j) /= g;
  }
}

}  // namespace

Inertia inertia(const RatMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw std::invalid_argument("inertia: asymmetric input");
  const int n = symmetric.rows();
  RatMatrix a = symmetric;

  // Scale the whole matrix to integers (positive scalar, inertia-invariant).
  {
    Rational lcm(1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Rational& x = a.at(i, j);
        if (x.is_zero() || x.is_integer()) continue;
        Rational d(x.to_mpq().get_den());
        lcm = lcm * d / rational_gcd(lcm, d);
      }
    }
    if (!lcm.is_one()) a.scale(lcm);
  }

  Inertia res;
  std::vector<int> act(n);
  for (int i = 0; i < n; ++i) act[i] = i;

  while (!act.empty()) {
    strip_block_content(a, act);

    // Prefer the smallest nonzero diagonal pivot.
    int pk = -1;
    for (size_t t = 0; t < act.size(); ++t) {
      int i = act[t];
      if (a.at(i, i).is_zero()) continue;
      if (pk < 0 || a.at(i, i).abs() < a.at(act[pk], act[pk]).abs()) pk = static_cast<int>(t);
    }

    if (pk >= 0) {
      const int k = act[pk];
      const Rational p = a.at(k, k);
      (p.sign() > 0 ? res.n_plus : res.n_minus) += 1;
      const Rational pa = p.abs();
      const int ps = p.sign();
      std::vector<int> rest;
      rest.reserve(act.size() - 1);
      for (int i : act) {
        if (i != k) rest.push_back(i);
      }
      // Schur complement scaled by |p| (positive), computed on the upper triangle.
      for (size_t x = 0; x < rest.size(); ++x) {
        for (size_t y = x; y < rest.size(); ++y) {
          int i = rest[x], j = rest[y];
          Rational v = a.at(i, j) * pa - a.at(i, k) * a.at(k, j) * Rational(ps);
          a.at(i, j) = v;
          a.at(j, i) = v;
        }
      }
      act = std::move(rest);
      continue;
    }

    // All active diagonal entries vanish: look for an off-diagonal coupling.
    int bi = -1, bj = -1;
    for (size_t x = 0; x < act.size() && bi < 0; ++x) {
      for (size_t y = x + 1; y < act.size(); ++y) {
        if (!a.at(act[x], act[y]).is_zero()) {
          bi = act[x];
          bj = act[y];
          break;
        }
      }
    }
    if (bi < 0) {
      res.n_zero += static_cast<int>(act.size());
      break;
    }

    // 2×2 block [[0,c],[c,0]] contributes one positive and one negative.
    const Rational c = a.at(bi, bj);
    res.n_plus += 1;
    res.n_minus += 1;
    const Rational ca = c.abs();
    const int cs = c.sign();
    std::vector<int> rest;
    for (int i : act) {
      if (i != bi && i != bj) rest.push_back(i);
    }
    for (size_t x = 0; x < rest.size(); ++x) {
      for (size_t y = x; y < rest.size(); ++y) {
        int i = rest[x], j = rest[y];
        Rational v = a.at(i, j) * ca -
                     (a.at(i, bi) * a.at(bj, j) + a.at(i, bj) * a.at(bi, j)) * Rational(cs);
        a.at(i, j) = v;
        a.at(j, i) = v;
      }
    }
    act = std::move(rest);
  }
  return res;
}

}  // namespace octlie
