#pragma once

#include "octlie/engine.hpp"
#include "octlie/linalg.hpp"
#include "octlie/wedge.hpp"

namespace octlie {

// The 2×2 construction: so(9) over the compact octonions, so(5,4) over the
// split ones. Basis order: X_a for the 8 units, then the 28 diagonal labels.
class So9Algebra {
 public:
  explicit So9Algebra(AlgebraKind kind);

  static constexpr int dim = 36;
  AlgebraKind kind() const { return eng_.k_kind(); }
  const Engine& engine() const { return eng_; }

  std::vector<Rational> bracket(const std::vector<Rational>& u,
                                const std::vector<Rational>& v) const {
    return eng_.bracket(u, v);
  }

  // 16×16 matrix of the action on 2-component octonion columns.
  RatMatrix spin_action(const std::vector<Rational>& coords) const {
    return eng_.column_action(coords);
  }

  // Oracle route: the commutator of the spin-action matrices, decomposed in
  // the span of the basis actions.
  std::vector<Rational> bracket_via_action(const std::vector<Rational>& u,
                                           const std::vector<Rational>& v) const;

  // The natural 9-dimensional representation on coordinates
  // [1', 1, i, ..., kl].
  const RatMatrix& natural_matrix(int basis_index) const { return nat_[basis_index]; }
  std::vector<Rational> natural_action(const std::vector<Rational>& e,
                                       const std::vector<Rational>& u9) const;

  // The adjoint (wedge) model: 9×9 antisymmetric coordinate grids.
  RatMatrix wedge_coords(const std::vector<Rational>& coords) const;
  const WedgeModel& wedge_model() const { return wedge_; }

  StructureConstants table() const { return eng_.build_table(); }

 private:
  Engine eng_;
  SpanSolver spin_span_;
  std::vector<RatMatrix> nat_;
  WedgeModel wedge_;
};

}  // namespace octlie
