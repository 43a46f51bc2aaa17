#pragma once

#include "octlie/albert.hpp"
#include "octlie/engine.hpp"
#include "octlie/linalg.hpp"

namespace octlie {

// The 3×3 construction over one octonion algebra: compact f4 or f4(4).
// Basis order: X_a (8), Y_a (8), Z_a (8), then the 28 diagonal labels.
class F4Algebra {
 public:
  explicit F4Algebra(AlgebraKind kind);

  static constexpr int dim = 52;
  AlgebraKind kind() const { return eng_.k_kind(); }
  const Engine& engine() const { return eng_; }

  std::vector<Rational> bracket(const std::vector<Rational>& u,
                                const std::vector<Rational>& v) const {
    return eng_.bracket(u, v);
  }

  // The symbolic 3×3 matrix of an element, in the form that acts on the
  // Albert algebra.
  ActionMat3 realize_action(const std::vector<Rational>& coords) const;

  AlbertElement albert_action(const std::vector<Rational>& g, const AlbertElement& h) const {
    return albert_apply(realize_action(g), h);
  }
  const RatMatrix& albert_matrix26(int basis_index) const { return act26_[basis_index]; }
  const RatMatrix& albert_matrix27(int basis_index) const { return act27_[basis_index]; }

  // Oracle route: commutator of the 26-dimensional action matrices,
  // decomposed in the span of the basis actions.
  std::vector<Rational> bracket_via_action(const std::vector<Rational>& u,
                                           const std::vector<Rational>& v) const;

  StructureConstants table() const { return eng_.build_table(); }

 private:
  Engine eng_;
  std::vector<RatMatrix> act26_, act27_;
  SpanSolver act_span_;
};

}  // namespace octlie
