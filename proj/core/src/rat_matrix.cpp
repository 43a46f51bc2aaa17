#include "octlie/rat_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace octlie {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : a_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = i + 1; j < cols_; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
  return m;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix: shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix: shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix: product shape mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        c.at(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

RatMatrix& RatMatrix::scale(const Rational& c) {
  for (auto& x : a_) x *= c;
  return *this;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (size_t i = 0; i < a.a_.size(); ++i) {
    if (a.a_[i] != b.a_[i]) return false;
  }
  return true;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  }
  return m;
}

Rational RatMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("RatMatrix: trace of non-square");
  Rational t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

RatMatrix RatMatrix::kron(const RatMatrix& o) const {
  RatMatrix m(rows_ * o.rows_, cols_ * o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      const Rational& aij = at(i, j);
      if (aij.is_zero()) continue;
      for (int k = 0; k < o.rows_; ++k) {
        for (int l = 0; l < o.cols_; ++l) {
          if (o.at(k, l).is_zero()) continue;
          m.at(i * o.rows_ + k, j * o.cols_ + l) = aij * o.at(k, l);
        }
      }
    }
  }
  return m;
}

RatMatrix RatMatrix::ptrace_second(int d1, int d2) const {
  if (rows_ != d1 * d2 || cols_ != d1 * d2) throw std::invalid_argument("ptrace: shape mismatch");
  RatMatrix m(d1, d1);
  for (int x = 0; x < d1; ++x) {
    for (int y = 0; y < d1; ++y) {
      Rational s;
      for (int a = 0; a < d2; ++a) s += at(x * d2 + a, y * d2 + a);
      m.at(x, y) = s;
    }
  }
  return m;
}

RatMatrix RatMatrix::ptrace_first(int d1, int d2) const {
  if (rows_ != d1 * d2 || cols_ != d1 * d2) throw std::invalid_argument("ptrace: shape mismatch");
  RatMatrix m(d2, d2);
  for (int a = 0; a < d2; ++a) {
    for (int b = 0; b < d2; ++b) {
      Rational s;
      for (int x = 0; x < d1; ++x) s += at(x * d2 + a, x * d2 + b);
      m.at(a, b) = s;
    }
  }
  return m;
}

RatMatrix mat_commutator(const RatMatrix& a, const RatMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw std::invalid_argument("mat_commutator: square matrices of equal dimension required");
  }
  return a * b - b * a;
}

void SparseVec::add(int idx, const Rational& v) {
  if (v.is_zero()) return;
  auto it = std::lower_bound(nz.begin(), nz.end(), idx,
                             [](const auto& p, int i) { return p.first < i; });
  if (it != nz.end() && it->first == idx) {
    it->second += v;
    if (it->second.is_zero()) nz.erase(it);
  } else {
    nz.insert(it, {idx, v});
  }
}

const Rational* SparseVec::find(int idx) const {
  auto it = std::lower_bound(nz.begin(), nz.end(), idx,
                             [](const auto& p, int i) { return p.first < i; });
  if (it != nz.end() && it->first == idx) return &it->second;
  return nullptr;
}

SparseRatMatrix SparseRatMatrix::from_dense(const RatMatrix& m) {
  SparseRatMatrix s(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_zero()) s.row_[i].nz.emplace_back(j, m.at(i, j));
    }
  }
  return s;
}

RatMatrix SparseRatMatrix::to_dense() const {
  RatMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (const auto& [j, v] : row_[i].nz) m.at(i, j) = v;
  }
  return m;
}

std::size_t SparseRatMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : row_) n += r.nz.size();
  return n;
}

SparseRatMatrix operator*(const SparseRatMatrix& a, const SparseRatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("SparseRatMatrix: product shape mismatch");
  SparseRatMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (const auto& [k, aik] : a.row_[i].nz) {
      for (const auto& [j, bkj] : b.row_[k].nz) c.row_[i].add(j, aik * bkj);
    }
  }
  return c;
}

bool operator==(const SparseRatMatrix& a, const SparseRatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (int i = 0; i < a.rows_; ++i) {
    if (a.row_[i].nz != b.row_[i].nz) return false;
  }
  return true;
}

SparseRatMatrix SparseRatMatrix::commutator_with(const SparseRatMatrix& o) const {
  SparseRatMatrix ab = *this * o;
  SparseRatMatrix ba = o * *this;
  for (int i = 0; i < ab.rows_; ++i) {
    for (const auto& [j, v] : ba.row_[i].nz) ab.row_[i].add(j, -v);
  }
  return ab;
}

Rational SparseRatMatrix::trace_product(const SparseRatMatrix& o) const {
  if (rows_ != o.cols_ || cols_ != o.rows_) {
    throw std::invalid_argument("trace_product: shape mismatch");
  }
  Rational t;
  for (int i = 0; i < rows_; ++i) {
    for (const auto& [k, v] : row_[i].nz) {
      const Rational* w = o.row_[k].find(i);
      if (w) t += v * *w;
    }
  }
  return t;
}

}  // namespace octlie
