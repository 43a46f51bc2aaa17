#pragma once

#include <string>
#include <vector>

#include "octlie/engine.hpp"

namespace octlie {

// The 3×3 construction over a tensor product of two octonion algebras:
// the 248-dimensional algebra in its compact, split or e8(-24) real form.
// Basis order: K diagonal (28), L diagonal (28), X (64), Y (64), Z (64).
class E8Algebra {
 public:
  E8Algebra(AlgebraKind k_kind, AlgebraKind l_kind) : eng_(AlgebraId::e8, k_kind, l_kind) {}

  static constexpr int dim = 248;
  const Engine& engine() const { return eng_; }

  std::vector<Rational> bracket(const std::vector<Rational>& u,
                                const std::vector<Rational>& v) const {
    return eng_.bracket(u, v);
  }

  StructureConstants table() const { return eng_.build_table(); }

 private:
  Engine eng_;
};

struct EmbeddingReport {
  std::string which;
  bool ok = false;
  int sub_dim = 0;
  std::string first_mismatch;  // empty when ok
};

// Coordinate vectors (in the 248-basis) of the images of a subalgebra's
// basis under one of the five distinguished embeddings:
//   f4-K, f4-L     : the two f4 subalgebras with subscripts in one factor
//   so16-X/Y/Z     : the three so(16) copies; Y and Z carry their diagonal
//                    through the E- and F-language triality conversions
std::vector<std::vector<Rational>> embedding_vectors(const Engine& e8, const std::string& which);

// Verifies that all pairwise brackets of the embedded basis, computed
// through the e8 table, match the subalgebra's own table mapped along the
// embedding.
EmbeddingReport verify_embedding(const StructureConstants& e8_table, const Engine& e8,
                                 const StructureConstants& sub_table, const std::string& which);

// dim(span(a) ∩ span(b)) for two sets of coordinate vectors.
int intersection_dimension(const std::vector<std::vector<Rational>>& a,
                           const std::vector<std::vector<Rational>>& b);

}  // namespace octlie
