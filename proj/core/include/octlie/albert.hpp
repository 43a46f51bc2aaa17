#pragma once

#include <array>
#include <vector>

#include "octlie/linalg.hpp"
#include "octlie/octonion.hpp"
#include "octlie/rat_matrix.hpp"
#include "octlie/so8.hpp"

namespace octlie {

// Element of the Albert algebra: a 3×3 octonion-Hermitian matrix
//
//        [ rho    gamma   conj(beta) ]
//    H = [ conj(gamma)  sigma   alpha ]
//        [ beta   conj(alpha)  tau    ]
//
// stored as 27 exact coordinates: 3 real diagonal entries followed by the
// 8 gamma, 8 alpha and 8 beta unit coordinates.
class AlbertElement {
 public:
  static constexpr int dim = 27;

  explicit AlbertElement(AlgebraKind kind) : kind_(kind), c_(dim) {}
  AlbertElement(AlgebraKind kind, std::vector<Rational> coords);

  AlgebraKind kind() const { return kind_; }
  const std::vector<Rational>& coords() const { return c_; }
  Rational& operator[](int i) { return c_[i]; }
  const Rational& operator[](int i) const { return c_[i]; }

  static AlbertElement identity(AlgebraKind kind);
  // Trace-zero generators of the paper's U/V/W spanning set.
  static AlbertElement U0(AlgebraKind kind);  // diag(1,-1,0)
  static AlbertElement V0(AlgebraKind kind);  // diag(0,1,-1)
  static AlbertElement W0(AlgebraKind kind);  // diag(-1,0,1)
  static AlbertElement U(AlgebraKind kind, int unit);  // gamma slot
  static AlbertElement V(AlgebraKind kind, int unit);  // alpha slot
  static AlbertElement W(AlgebraKind kind, int unit);  // beta slot

  Rational trace() const { return c_[0] + c_[1] + c_[2]; }

  AlbertElement operator-() const;
  AlbertElement& operator+=(const AlbertElement& o);
  AlbertElement& operator-=(const AlbertElement& o);
  friend AlbertElement operator+(AlbertElement a, const AlbertElement& b) { return a += b; }
  friend AlbertElement operator-(AlbertElement a, const AlbertElement& b) { return a -= b; }
  AlbertElement& scale(const Rational& r);
  friend bool operator==(const AlbertElement& a, const AlbertElement& b);
  friend bool operator!=(const AlbertElement& a, const AlbertElement& b) { return !(a == b); }

  // Entry (i,j) of the Hermitian matrix as an octonion.
  Octonion matrix_entry(int i, int j) const;

 private:
  AlgebraKind kind_;
  std::vector<Rational> c_;
};

// Symmetrized matrix product (H1 H2 + H2 H1) / 2 with plain octonion entry
// arithmetic; the result is Hermitian again.
AlbertElement jordan_product(const AlbertElement& h1, const AlbertElement& h2);

// An anti-Hermitian 3×3 matrix with operator-valued diagonal: the shape in
// which every f4 generator acts on the Albert algebra. Diagonal slots carry
// so(8)-span coordinates (empty vector = zero slot); off-diagonal slots
// carry octonion values with entry (j,i) = -conj(entry (i,j)).
struct ActionMat3 {
  AlgebraKind kind;
  std::array<std::vector<Rational>, 3> diag;     // so(8) coords per slot
  std::array<std::array<Octonion, 3>, 3> off;    // values; diagonal unused

  explicit ActionMat3(AlgebraKind k);
};

// H -> AH - HA, evaluated entrywise: value*value products are plain octonion
// products. A diagonal operator touching an entry from one side applies its
// left or right form; touching it from both sides, its nested part
// collapses to the vector action. The result is checked Hermitian and
// trace-preserving.
AlbertElement albert_apply(const ActionMat3& a, const AlbertElement& h);

// 27×27 matrix of the action on the full Albert space.
RatMatrix albert_action_matrix27(const ActionMat3& a);

// 26×26 matrix on the trace-0 subspace with basis
//   [U0, V0, U_a (8), V_a (8), W_a (8)]      (W0 = -U0 - V0 is eliminated).
RatMatrix albert_action_matrix26(const ActionMat3& a);

std::vector<Rational> trace0_coords(const AlbertElement& h);     // 26
AlbertElement from_trace0_coords(AlgebraKind kind, const std::vector<Rational>& c);

// Diagonal D/E/F generators as action matrices. The index runs over the 28
// so(8) labels of So8::get(kind).
ActionMat3 diag_D(AlgebraKind kind, int so8_index);
ActionMat3 diag_E(AlgebraKind kind, int so8_index);
ActionMat3 diag_F(AlgebraKind kind, int so8_index);
// Off-diagonal X_a / Y_a / Z_a generators ('X','Y','Z').
ActionMat3 offdiag_gen(AlgebraKind kind, char family, int unit);

// Triality conversion matrices: column i holds the exact D-basis
// coordinates of the E (resp. F) generator with so(8) label i, obtained by
// solving its action on the trace-0 Albert space in the span of the 28
// D-generator actions.
struct TrialityMaps {
  RatMatrix e_to_d;  // 28×28
  RatMatrix f_to_d;
};

const TrialityMaps& triality_maps(AlgebraKind kind);

}  // namespace octlie
