#include "octlie/f4.hpp"

namespace octlie {

F4Algebra::F4Algebra(AlgebraKind kind) : eng_(AlgebraId::f4, kind, std::nullopt) {
  act26_.reserve(dim);
  act27_.reserve(dim);
  std::vector<std::vector<Rational>> flat;
  flat.reserve(dim);
  for (int b = 0; b < dim; ++b) {
    std::vector<Rational> e(dim);
    e[b] = 1;
    ActionMat3 a = realize_action(e);
    act26_.push_back(albert_action_matrix26(a));
    act27_.push_back(albert_action_matrix27(a));
    flat.push_back(act26_.back().flatten());
  }
  act_span_ = SpanSolver(flat);
}

ActionMat3 F4Algebra::realize_action(const std::vector<Rational>& coords) const {
  if (static_cast<int>(coords.size()) != dim) {
    throw std::invalid_argument("realize_action: 52 coordinates required");
  }
  ActionMat3 a(kind());
  const So8& so8 = So8::get(kind());
  using F = BasisLabel::Family;
  for (int b = 0; b < dim; ++b) {
    const Rational& c = coords[b];
    if (c.is_zero()) continue;
    const BasisLabel& l = eng_.labels()[b];
    switch (l.family) {
      case F::X:
        a.off[0][1][l.p] += c;
        a.off[1][0][l.p] += l.p == 0 ? -c : c;  // -conj
        break;
      case F::Y:
        a.off[1][2][l.p] += c;
        a.off[2][1][l.p] += l.p == 0 ? -c : c;
        break;
      case F::Z:
        a.off[2][0][l.p] += c;
        a.off[0][2][l.p] += l.p == 0 ? -c : c;
        break;
      case F::DK: {
        int idx = so8.index_of({l.p, l.q});
        if (a.diag[0].empty()) a.diag[0].assign(So8::dim, Rational(0));
        if (a.diag[1].empty()) a.diag[1].assign(So8::dim, Rational(0));
        a.diag[0][idx] += c;
        a.diag[1][idx] += l.q < 0 ? -c : c;
        break;
      }
      default:
        throw std::logic_error("f4: unexpected label family");
    }
  }
  return a;
}

std::vector<Rational> F4Algebra::bracket_via_action(const std::vector<Rational>& u,
                                                    const std::vector<Rational>& v) const {
  RatMatrix mu(26, 26), mv(26, 26);
  for (int b = 0; b < dim; ++b) {
    if (!u[b].is_zero()) {
      RatMatrix t = act26_[b];
      t.scale(u[b]);
      mu += t;
    }
    if (!v[b].is_zero()) {
      RatMatrix t = act26_[b];
      t.scale(v[b]);
      mv += t;
    }
  }
  auto coords = act_span_.solve(mat_commutator(mu, mv).flatten());
  if (!coords) {
    throw ClosureViolation("f4: action commutator left the 52-span", "?", "?");
  }
  return *coords;
}

}  // namespace octlie
