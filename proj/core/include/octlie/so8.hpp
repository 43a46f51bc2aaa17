#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octlie/linalg.hpp"
#include "octlie/octonion.hpp"
#include "octlie/rat_matrix.hpp"
#include "octlie/structure.hpp"

namespace octlie {

enum class ActionSide { left, right, bi };

// 8×8 matrix of the left action x -> ax (column-vector convention).
RatMatrix left_matrix(const Octonion& a);
RatMatrix left_matrix(AlgebraKind kind, int unit);
// x -> xa.
RatMatrix right_matrix(const Octonion& a);
RatMatrix right_matrix(AlgebraKind kind, int unit);
// left / right / bi = -L - R.
RatMatrix action_operator(ActionSide side, const Octonion& a);

// Label of one so(8) basis operator: L_p for Single{p}, or the nested
// composition L_p followed after L_q (x -> p(qx)) for Pair{p,q} with p<q.
struct So8Label {
  int p = 0;
  int q = -1;  // -1 for single

  bool is_single() const { return q < 0; }
  bool operator==(const So8Label&) const = default;
};

// The 28-dimensional operator algebra so(8) (compact) or so(4,4) (split),
// spanned by the 7 single left multiplications and 21 nested pairs.
//
// Basis order: singles p = 1..7, then pairs (p,q) lexicographic with p<q.
// All downstream diagonal decompositions run through this object.
class So8 {
 public:
  static const So8& get(AlgebraKind kind);

  AlgebraKind kind() const { return kind_; }
  static constexpr int dim = 28;
  static constexpr int n_single = 7;

  const std::vector<So8Label>& labels() const { return labels_; }
  int index_of(const So8Label& l) const;
  std::string label_name(int i, int alphabet = 0) const;

  const RatMatrix& left_op(int i) const { return left_[i]; }
  const RatMatrix& right_op(int i) const { return right_[i]; }

  // Left-form / right-form matrix of a span element given by coordinates.
  RatMatrix left_form(const std::vector<Rational>& coords) const;
  RatMatrix right_form(const std::vector<Rational>& coords) const;
  // Vector-representation matrix of a span element: for an operator that
  // multiplies an entry from both sides, W t - t W collapses to this action
  // (singles give pt + tp, pairs the commutator [L_p L_q, L_t]).
  RatMatrix vec_form(const std::vector<Rational>& coords) const;

  // Exact coordinates of an 8×8 operator in the span, or nullopt.
  std::optional<std::vector<Rational>> decompose(const RatMatrix& op) const;

  // Structure constants: [basis_i, basis_j] as span coordinates.
  std::vector<Rational> bracket(int i, int j) const;

  // Action on unit subscripts (the 8-dimensional vector representation):
  // singles act as L_p + R_p, pairs as [vec(p), vec(q)] / 2.
  const RatMatrix& vector_action(int i) const { return vec_[i]; }

 private:
  explicit So8(AlgebraKind kind);

  AlgebraKind kind_;
  std::vector<So8Label> labels_;
  std::vector<RatMatrix> left_, right_, vec_;
  SpanSolver span_;
};

// Triality conversion: the 8×8 matrix identity expressing one operator
// family in another, discovered by exact solve.
struct TrialityExpansion {
  So8Label source;                 // which operator is expanded
  std::vector<Rational> coords;    // coordinates over the target family basis
};

// Expand the operator of `family` ('L', 'R' or 'B') with the given label in
// terms of the 28 basis words of `target` family. The expansion is verified
// by matrix equality before being returned.
TrialityExpansion triality_expand(AlgebraKind kind, char family, So8Label label, char target);

// Matrix of one basis word of a family: 'L' singles/pairs are the left ops,
// 'R' uses right multiplications (pair (p,q) is x -> (xq)p, i.e. the
// function composition R_p after R_q), 'B' uses b_p = -L_p - R_p with pairs
// [b_p, b_q] / 2.
RatMatrix family_op(AlgebraKind kind, char family, So8Label label);

// Structure constants of the 28-dimensional operator algebra itself,
// labeled L:p and L:p,q.
StructureConstants so8_structure_table(AlgebraKind kind);

}  // namespace octlie
