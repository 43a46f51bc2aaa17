#include "octlie/wedge.hpp"

#include <stdexcept>

namespace octlie {

WedgeModel::WedgeModel(std::vector<Rational> form_diag) : q_(std::move(form_diag)) {}

RatMatrix WedgeModel::bracket(const RatMatrix& a, const RatMatrix& b) const {
  const int n = this->n();
  if (a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n) {
    throw std::invalid_argument("WedgeModel: grid size mismatch");
  }
  RatMatrix r(n, n);
  auto addw = [&r](int x, int y, const Rational& c) {
    if (x == y || c.is_zero()) return;
    if (x < y) {
      r.at(x, y) += c;
      r.at(y, x) -= c;
    } else {
      r.at(y, x) -= c;
      r.at(x, y) += c;
    }
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Rational& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
          const Rational& bkl = b.at(k, l);
          if (bkl.is_zero()) continue;
          Rational c = aij * bkl * Rational(-2);
          // [i^j, k^l] with diagonal Q.
          if (j == k) addw(i, l, c * q_[j]);
          if (i == k) addw(j, l, -(c * q_[i]));
          if (j == l) addw(i, k, -(c * q_[j]));
          if (i == l) addw(j, k, c * q_[i]);
        }
      }
    }
  }
  return r;
}

}  // namespace octlie
