#include "octlie/so16.hpp"

namespace octlie {

namespace {

WedgeModel make_wedge16(AlgebraKind k_kind, AlgebraKind l_kind) {
  std::vector<Rational> q(16);
  const MultiplicationTable& tk = MultiplicationTable::get(k_kind);
  const MultiplicationTable& tl = MultiplicationTable::get(l_kind);
  for (int u = 0; u < 8; ++u) {
    q[u] = tk.unit_norm(u);
    q[8 + u] = tl.unit_norm(u);
  }
  return WedgeModel(std::move(q));
}

}  // namespace

So16Algebra::So16Algebra(AlgebraKind k_kind, AlgebraKind l_kind)
    : eng_(AlgebraId::so16, k_kind, l_kind), wedge_(make_wedge16(k_kind, l_kind)) {
  std::vector<std::vector<Rational>> flat;
  flat.reserve(dim);
  for (int b = 0; b < dim; ++b) {
    std::vector<Rational> e(dim);
    e[b] = 1;
    flat.push_back(eng_.column_action(e).flatten());
  }
  spin_span_ = SpanSolver(flat);
}

std::vector<Rational> So16Algebra::bracket_via_action(const std::vector<Rational>& u,
                                                      const std::vector<Rational>& v) const {
  RatMatrix c = mat_commutator(eng_.column_action(u), eng_.column_action(v));
  auto coords = spin_span_.solve(c.flatten());
  if (!coords) {
    throw ClosureViolation("so16: spin-action commutator left the 120-span", "?", "?");
  }
  return *coords;
}

RatMatrix So16Algebra::wedge_coords(const std::vector<Rational>& coords) const {
  RatMatrix g(16, 16);
  auto add = [&g](int x, int y, const Rational& c) {
    g.at(x, y) += c;
    g.at(y, x) -= c;
  };
  for (int b = 0; b < dim; ++b) {
    if (coords[b].is_zero()) continue;
    const BasisLabel& l = eng_.labels()[b];
    switch (l.family) {
      case BasisLabel::Family::DK:
        if (l.q < 0) {
          add(0, l.p, coords[b]);  // 1 ^ p
        } else {
          add(l.p, l.q, coords[b]);
        }
        break;
      case BasisLabel::Family::DL:
        if (l.q < 0) {
          add(8, 8 + l.p, coords[b]);  // 1' ^ P
        } else {
          add(8 + l.p, 8 + l.q, coords[b]);
        }
        break;
      case BasisLabel::Family::X:
        add(l.p, 8 + l.q, coords[b]);  // a ^ A
        break;
      default:
        throw std::logic_error("so16: unexpected label family");
    }
  }
  return g;
}

}  // namespace octlie
