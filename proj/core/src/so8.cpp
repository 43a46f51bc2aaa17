#include "octlie/so8.hpp"

#include <stdexcept>

namespace octlie {

RatMatrix left_matrix(const Octonion& a) {
  RatMatrix m(8, 8);
  for (int y = 0; y < 8; ++y) {
    Octonion col = multiply(a, Octonion::unit(a.kind(), y));
    for (int x = 0; x < 8; ++x) m.at(x, y) = col[x];
  }
  return m;
}

RatMatrix left_matrix(AlgebraKind kind, int unit) {
  return left_matrix(Octonion::unit(kind, unit));
}

RatMatrix right_matrix(const Octonion& a) {
  RatMatrix m(8, 8);
  for (int y = 0; y < 8; ++y) {
    Octonion col = multiply(Octonion::unit(a.kind(), y), a);
    for (int x = 0; x < 8; ++x) m.at(x, y) = col[x];
  }
  return m;
}

RatMatrix right_matrix(AlgebraKind kind, int unit) {
  return right_matrix(Octonion::unit(kind, unit));
}

RatMatrix action_operator(ActionSide side, const Octonion& a) {
  switch (side) {
    case ActionSide::left:
      return left_matrix(a);
    case ActionSide::right:
      return right_matrix(a);
    case ActionSide::bi:
      return -(left_matrix(a) + right_matrix(a));
  }
  throw std::logic_error("unreachable");
}

So8::So8(AlgebraKind kind) : kind_(kind) {
  for (int p = 1; p < 8; ++p) labels_.push_back({p, -1});
  for (int p = 1; p < 8; ++p) {
    for (int q = p + 1; q < 8; ++q) labels_.push_back({p, q});
  }

  std::vector<RatMatrix> lmat(8), rmat(8);
  for (int u = 0; u < 8; ++u) {
    lmat[u] = left_matrix(kind, u);
    rmat[u] = right_matrix(kind, u);
  }

  for (const So8Label& l : labels_) {
    if (l.is_single()) {
      left_.push_back(lmat[l.p]);
      right_.push_back(rmat[l.p]);
    } else {
      left_.push_back(lmat[l.p] * lmat[l.q]);       // x -> p(qx)
      right_.push_back(rmat[l.q] * rmat[l.p]);      // x -> (xp)q
    }
  }

  std::vector<std::vector<Rational>> flat;
  flat.reserve(dim);
  for (const auto& m : left_) flat.push_back(m.flatten());
  span_ = SpanSolver(flat);

  std::vector<RatMatrix> vec_single(8);
  for (int u = 1; u < 8; ++u) vec_single[u] = lmat[u] + rmat[u];
  for (const So8Label& l : labels_) {
    if (l.is_single()) {
      vec_.push_back(vec_single[l.p]);
    } else {
      RatMatrix c = mat_commutator(vec_single[l.p], vec_single[l.q]);
      c.scale(Rational(1, 2));
      vec_.push_back(c);
    }
  }
}

const So8& So8::get(AlgebraKind kind) {
  static const So8 compact{AlgebraKind::compact};
  static const So8 split{AlgebraKind::split};
  return kind == AlgebraKind::compact ? compact : split;
}

int So8::index_of(const So8Label& l) const {
  if (l.is_single()) {
    if (l.p < 1 || l.p > 7) throw std::invalid_argument("So8: bad single label");
    return l.p - 1;
  }
  if (l.p < 1 || l.q <= l.p || l.q > 7) throw std::invalid_argument("So8: bad pair label");
  int idx = n_single;
  for (int p = 1; p < l.p; ++p) idx += 7 - p;
  return idx + (l.q - l.p - 1);
}

std::string So8::label_name(int i, int alphabet) const {
  const So8Label& l = labels_[i];
  if (l.is_single()) return unit_name(l.p, alphabet);
  return unit_name(l.p, alphabet) + "," + unit_name(l.q, alphabet);
}

RatMatrix So8::left_form(const std::vector<Rational>& coords) const {
  RatMatrix m(8, 8);
  for (int i = 0; i < dim; ++i) {
    if (coords[i].is_zero()) continue;
    RatMatrix t = left_[i];
    t.scale(coords[i]);
    m += t;
  }
  return m;
}

RatMatrix So8::right_form(const std::vector<Rational>& coords) const {
  RatMatrix m(8, 8);
  for (int i = 0; i < dim; ++i) {
    if (coords[i].is_zero()) continue;
    RatMatrix t = right_[i];
    t.scale(coords[i]);
    m += t;
  }
  return m;
}

RatMatrix So8::vec_form(const std::vector<Rational>& coords) const {
  RatMatrix m(8, 8);
  for (int i = 0; i < dim; ++i) {
    if (coords[i].is_zero()) continue;
    RatMatrix t = vec_[i];
    t.scale(coords[i]);
    m += t;
  }
  return m;
}

std::optional<std::vector<Rational>> So8::decompose(const RatMatrix& op) const {
  return span_.solve(op.flatten());
}

std::vector<Rational> So8::bracket(int i, int j) const {
  auto c = decompose(mat_commutator(left_[i], left_[j]));
  if (!c) throw std::logic_error("So8: bracket left the 28-span");
  return *c;
}

RatMatrix family_op(AlgebraKind kind, char family, So8Label label) {
  auto single = [&](int p) -> RatMatrix {
    switch (family) {
      case 'L':
        return left_matrix(kind, p);
      case 'R':
        return right_matrix(kind, p);
      case 'B':
        return -(left_matrix(kind, p) + right_matrix(kind, p));
      default:
        throw std::invalid_argument("family_op: family must be L, R or B");
    }
  };
  if (label.is_single()) return single(label.p);
  if (family == 'B') {
    RatMatrix c = mat_commutator(single(label.p), single(label.q));
    c.scale(Rational(1, 2));
    return c;
  }
  // L pair: x -> p(qx); R pair with the function-composition convention:
  // R_p R_q means R_q first, i.e. x -> (xq)p.
  return single(label.p) * single(label.q);
}

StructureConstants so8_structure_table(AlgebraKind kind) {
  const So8& so8 = So8::get(kind);
  std::vector<BasisLabel> labels;
  labels.reserve(So8::dim);
  for (const So8Label& l : so8.labels()) labels.push_back({BasisLabel::Family::LK, l.p, l.q});
  StructureConstants t("so8", kind, std::nullopt, std::move(labels));
  for (int i = 0; i < So8::dim; ++i) {
    for (int j = i + 1; j < So8::dim; ++j) {
      auto coords = so8.bracket(i, j);
      BracketEntry e;
      for (int k = 0; k < So8::dim; ++k) {
        if (!coords[k].is_zero()) e.emplace_back(k, coords[k]);
      }
      t.set_entry(i, j, std::move(e));
    }
  }
  return t;
}

TrialityExpansion triality_expand(AlgebraKind kind, char family, So8Label label, char target) {
  if (family == target) throw std::invalid_argument("triality_expand: distinct families required");
  const So8& so8 = So8::get(kind);

  std::vector<std::vector<Rational>> basis;
  basis.reserve(So8::dim);
  std::vector<RatMatrix> mats;
  for (const So8Label& l : so8.labels()) {
    mats.push_back(family_op(kind, target, l));
    basis.push_back(mats.back().flatten());
  }
  SpanSolver solver(basis);

  RatMatrix src = family_op(kind, family, label);
  auto coords = solver.solve(src.flatten());
  if (!coords) throw std::logic_error("triality_expand: operator not in target span");

  // Verify by matrix equality.
  RatMatrix recon(8, 8);
  for (int i = 0; i < So8::dim; ++i) {
    if ((*coords)[i].is_zero()) continue;
    RatMatrix t = mats[i];
    t.scale((*coords)[i]);
    recon += t;
  }
  if (recon != src) throw std::logic_error("triality_expand: verification failed");

  return {label, *coords};
}

}  // namespace octlie
