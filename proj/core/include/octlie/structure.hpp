#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "octlie/octonion.hpp"
#include "octlie/rat_matrix.hpp"

namespace octlie {

// Raised when a bracket fails to decompose in the declared span. By
// construction this must never fire on a correct build; any occurrence is a
// build-breaking bug, so it carries the offending pair.
class ClosureViolation : public std::runtime_error {
 public:
  ClosureViolation(std::string what, std::string x, std::string y)
      : std::runtime_error(std::move(what)), x_label(std::move(x)), y_label(std::move(y)) {}
  std::string x_label, y_label;
};

// Canonical label of one basis element.
//   LK    operator-algebra label (so(8) builds): L:i, L:i,il
//   DK/DL diagonal labels: D:i / D:i,il, or D:k:i and D:l:I,IL with two factors
//   X/Y/Z off-diagonal labels: X:i, or X:i,IL with two factors
struct BasisLabel {
  enum class Family { LK, DK, DL, X, Y, Z };
  Family family = Family::DK;
  int p = 0;
  int q = -1;  // diag: second unit or -1; off-diagonal: L-alphabet unit or -1

  bool operator==(const BasisLabel&) const = default;
};

std::string label_name(const BasisLabel& l, bool two_factors);
BasisLabel label_parse(const std::string& s, bool two_factors);

// One term of a bracket: coefficient on basis element k.
using BracketTerm = std::pair<int, Rational>;
using BracketEntry = std::vector<BracketTerm>;  // sorted by k

// Exact structure-constant table over a labeled basis, stored one-sided
// (i < j); antisymmetry is implicit in the storage.
class StructureConstants {
 public:
  StructureConstants() = default;
  StructureConstants(std::string algebra, AlgebraKind k_kind, std::optional<AlgebraKind> l_kind,
                     std::vector<BasisLabel> labels);

  const std::string& algebra() const { return algebra_; }
  AlgebraKind k_kind() const { return k_kind_; }
  std::optional<AlgebraKind> l_kind() const { return l_kind_; }
  bool two_factors() const { return l_kind_.has_value(); }
  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<BasisLabel>& labels() const { return labels_; }
  std::string name(int i) const { return label_name(labels_[i], two_factors()); }
  int index_of_name(const std::string& s) const;

  void set_entry(int i, int j, BracketEntry terms);  // i < j
  const BracketEntry& entry_upper(int i, int j) const;  // i < j

  // [e_i, e_j] for any i, j (sign handled; empty for i == j).
  BracketEntry bracket_basis(int i, int j) const;

  // Bilinear bracket of coordinate vectors through the table.
  std::vector<Rational> bracket(const std::vector<Rational>& u,
                                const std::vector<Rational>& v) const;

  SparseRatMatrix ad_basis(int i) const;
  SparseRatMatrix ad(const std::vector<Rational>& x) const;

  // K(i,j) = trace(ad e_i ∘ ad e_j), dense symmetric.
  RatMatrix killing_matrix() const;

  std::size_t nonzero_pairs() const;

 private:
  std::size_t tri(int i, int j) const {  // i < j
    return static_cast<std::size_t>(i) * (2 * labels_.size() - i - 1) / 2 + (j - i - 1);
  }

  std::string algebra_;
  AlgebraKind k_kind_ = AlgebraKind::compact;
  std::optional<AlgebraKind> l_kind_;
  std::vector<BasisLabel> labels_;
  std::vector<BracketEntry> bk_;
};

}  // namespace octlie
