#pragma once

#include <vector>

#include "octlie/rat_matrix.hpp"

namespace octlie {

// The skew-square model of an orthogonal Lie algebra on n coordinates with
// diagonal quadratic form Q. Elements are antisymmetric n×n coefficient
// grids over elementary wedges; the bracket is bilinear over
//   [a^b, c^d] = -2 ( Q(b,c) a^d - Q(a,c) b^d - Q(b,d) a^c + Q(a,d) b^c ),
// normalized so that [a^b, a^c] = 2 Q(a,a) b^c.
class WedgeModel {
 public:
  explicit WedgeModel(std::vector<Rational> form_diag);

  int n() const { return static_cast<int>(q_.size()); }

  RatMatrix bracket(const RatMatrix& a, const RatMatrix& b) const;

 private:
  std::vector<Rational> q_;
};

}  // namespace octlie
