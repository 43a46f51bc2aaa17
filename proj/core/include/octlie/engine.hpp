#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "octlie/rat_matrix.hpp"
#include "octlie/so8.hpp"
#include "octlie/structure.hpp"

namespace octlie {

// Which of the constructed algebras an engine instance realizes.
enum class AlgebraId { so8, so9, so16, f4, e8 };

const char* algebra_name(AlgebraId id);
AlgebraId algebra_from_name(const std::string& s);

// A symbolic n×n matrix over one or two octonion factors. Diagonal slots
// hold so(8)-span coordinates per factor (empty vector = zero slot);
// off-diagonal entries are octonion-tensor values as 8×dl coefficient
// grids (empty matrix = zero). Keeping the diagonal in coordinates is what
// lets a bracket pick the correct evaluation of each nested term: one-sided
// products use the left or right form, a two-sided product W t - t W of one
// nested operator collapses to its vector action, and a two-sided product
// of two *different* nested operators is not defined by the evaluation
// rules at all.
struct Realization {
  int blocks = 2;
  int dl = 1;
  std::array<std::vector<Rational>, 3> dk;   // so(8) coords, K factor
  std::array<std::vector<Rational>, 3> dlg;  // so(8) coords, L factor
  std::array<std::array<RatMatrix, 3>, 3> off;  // 8×dl grids, i != j
};

// The matrix-commutator engine behind the 2×2 and 3×3 constructions.
//
// Elements are exact coordinate vectors over a labeled basis. A bracket
// realizes both elements as symbolic matrices, multiplies them out under
// the evaluation rules (diagonal entries compose as operators,
// operator*entry applies the left form, entry*operator the right form,
// off-diagonal entry products multiply factorwise), checks the raw result
// for anti-Hermitian consistency, and decomposes it back into coordinates,
// converting any E/F-shaped diagonal part to the canonical D form through
// the triality maps. Failure to decompose throws ClosureViolation.
class Engine {
 public:
  Engine(AlgebraId id, AlgebraKind k_kind, std::optional<AlgebraKind> l_kind);

  AlgebraId id() const { return id_; }
  AlgebraKind k_kind() const { return k_kind_; }
  std::optional<AlgebraKind> l_kind() const { return l_kind_; }
  int blocks() const { return blocks_; }
  int dl() const { return dl_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<BasisLabel>& labels() const { return labels_; }
  int index_of(const BasisLabel& l) const;

  std::vector<Rational> bracket(const std::vector<Rational>& u,
                                const std::vector<Rational>& v) const;
  BracketEntry bracket_basis(int i, int j) const;

  Realization realize(const std::vector<Rational>& coords) const;
  // Raw diagonal representative of an E- or F-language generator ('D' gives
  // the canonical shape); factor 0 = K, 1 = L.
  Realization realize_diag_language(char language, int factor, int so8_index) const;
  std::vector<Rational> bracket_realized(const Realization& u, const Realization& v,
                                         const std::string& xl = "?",
                                         const std::string& yl = "?") const;

  // Canonical coordinates of the E/F-language generator (the input alias).
  std::vector<Rational> ef_alias_coords(char language, int factor, int so8_index) const;

  // Action matrix on 2-component columns over the factor tensor product
  // (the spin representation); 2×2 engines only.
  RatMatrix column_action(const std::vector<Rational>& coords) const;

  // Full structure-constant table; pair loop runs in parallel with a
  // deterministic merge.
  StructureConstants build_table() const;

  const RatMatrix& conv_e(int factor) const;  // 28×28 E->D
  const RatMatrix& conv_f(int factor) const;

 private:
  struct Factor {
    const So8* so8 = nullptr;
    AlgebraKind kind;
    std::array<RatMatrix, 8> lmat;
    // Composition permutations: comp[a][b] is the signed permutation of
    // x -> a(bx) on unit indices.
    struct Comp {
      std::array<int, 8> row;
      std::array<int, 8> sign;
    };
    Comp comp[8][8];
    RatMatrix e2d, f2d;  // empty for 2×2 engines
  };

  // The 8×8 matrix realizing "M_i t - t M_j" on one factor of an entry at
  // position (i, j), where ci/cj are the slot coordinates. Throws when the
  // nested parts differ on both sides (undefined by the evaluation rules).
  RatMatrix sandwich_matrix(const Factor& f, const std::vector<Rational>& ci,
                            const std::vector<Rational>& cj, const std::string& xl,
                            const std::string& yl) const;

  void decompose_diag_triple(const Factor& f, std::array<RatMatrix, 3>& g,
                             std::vector<Rational>& d_out, const std::string& xl,
                             const std::string& yl) const;

  AlgebraId id_;
  AlgebraKind k_kind_;
  std::optional<AlgebraKind> l_kind_;
  int blocks_ = 2;
  int dl_ = 1;
  Factor fk_, fl_;
  std::vector<BasisLabel> labels_;
  // Index of the first basis slot of each block, in label order.
  int dk_base_ = -1, dl_base_ = -1, x_base_ = -1, y_base_ = -1, z_base_ = -1;
};

}  // namespace octlie
