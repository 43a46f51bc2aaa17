#pragma once

#include "octlie/engine.hpp"
#include "octlie/linalg.hpp"
#include "octlie/wedge.hpp"

namespace octlie {

// The 2×2 construction over a tensor product of two octonion algebras:
// so(16), so(8,8) or so(12,4) by the kinds. Basis order: the 28 K-diagonal
// labels, the 28 L-diagonal labels, then the 64 off-diagonal X_{aA}.
class So16Algebra {
 public:
  So16Algebra(AlgebraKind k_kind, AlgebraKind l_kind);

  static constexpr int dim = 120;
  const Engine& engine() const { return eng_; }

  std::vector<Rational> bracket(const std::vector<Rational>& u,
                                const std::vector<Rational>& v) const {
    return eng_.bracket(u, v);
  }

  // 128×128 action on 2-component columns over the tensor product.
  RatMatrix spin_action(const std::vector<Rational>& coords) const {
    return eng_.column_action(coords);
  }

  std::vector<Rational> bracket_via_action(const std::vector<Rational>& u,
                                           const std::vector<Rational>& v) const;

  // The 16-point wedge model: coordinates [1, i, ..., kl, 1', I, ..., KL].
  RatMatrix wedge_coords(const std::vector<Rational>& coords) const;
  const WedgeModel& wedge_model() const { return wedge_; }

  StructureConstants table() const { return eng_.build_table(); }

 private:
  Engine eng_;
  SpanSolver spin_span_;
  WedgeModel wedge_;
};

}  // namespace octlie
