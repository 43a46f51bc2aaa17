#include "octlie/so9.hpp"

#include <stdexcept>

namespace octlie {

namespace {

WedgeModel make_wedge9(AlgebraKind kind) {
  const MultiplicationTable& t = MultiplicationTable::get(kind);
  std::vector<Rational> q(9);
  q[0] = 1;  // the 1' coordinate
  for (int u = 0; u < 8; ++u) q[1 + u] = t.unit_norm(u);
  return WedgeModel(std::move(q));
}

}  // namespace

So9Algebra::So9Algebra(AlgebraKind kind)
    : eng_(AlgebraId::so9, kind, std::nullopt), wedge_(make_wedge9(kind)) {
  std::vector<std::vector<Rational>> flat;
  flat.reserve(dim);
  for (int b = 0; b < dim; ++b) {
    std::vector<Rational> e(dim);
    e[b] = 1;
    flat.push_back(eng_.column_action(e).flatten());
  }
  spin_span_ = SpanSolver(flat);

  const So8& so8 = So8::get(kind);
  const MultiplicationTable& t = MultiplicationTable::get(kind);
  nat_.reserve(dim);
  for (int b = 0; b < dim; ++b) {
    RatMatrix m(9, 9);
    const BasisLabel& l = eng_.labels()[b];
    if (l.family == BasisLabel::Family::X) {
      // U_1' -> -2 U_b ; U_a -> 2 <a,b> U_1'.
      m.at(1 + l.p, 0) = -2;
      m.at(0, 1 + l.p) = Rational(2 * t.unit_norm(l.p));
    } else {
      const RatMatrix& v = so8.vector_action(so8.index_of({l.p, l.q}));
      for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) m.at(1 + r, 1 + c) = v.at(r, c);
      }
    }
    nat_.push_back(std::move(m));
  }
}

std::vector<Rational> So9Algebra::bracket_via_action(const std::vector<Rational>& u,
                                                     const std::vector<Rational>& v) const {
  RatMatrix c = mat_commutator(eng_.column_action(u), eng_.column_action(v));
  auto coords = spin_span_.solve(c.flatten());
  if (!coords) {
    throw ClosureViolation("so9: spin-action commutator left the 36-span", "?", "?");
  }
  return *coords;
}

std::vector<Rational> So9Algebra::natural_action(const std::vector<Rational>& e,
                                                 const std::vector<Rational>& u9) const {
  if (e.size() != dim || u9.size() != 9) {
    throw std::invalid_argument("natural_action: bad coordinate sizes");
  }
  std::vector<Rational> out(9);
  for (int b = 0; b < dim; ++b) {
    if (e[b].is_zero()) continue;
    const RatMatrix& m = nat_[b];
    for (int r = 0; r < 9; ++r) {
      for (int c = 0; c < 9; ++c) {
        if (m.at(r, c).is_zero() || u9[c].is_zero()) continue;
        out[r] += e[b] * m.at(r, c) * u9[c];
      }
    }
  }
  return out;
}

RatMatrix So9Algebra::wedge_coords(const std::vector<Rational>& coords) const {
  RatMatrix g(9, 9);
  auto add = [&g](int x, int y, const Rational& c) {
    g.at(x, y) += c;
    g.at(y, x) -= c;
  };
  for (int b = 0; b < dim; ++b) {
    if (coords[b].is_zero()) continue;
    const BasisLabel& l = eng_.labels()[b];
    if (l.family == BasisLabel::Family::X) {
      add(0, 1 + l.p, coords[b]);  // X_a -> 1' ^ a
    } else if (l.q < 0) {
      add(1, 1 + l.p, coords[b]);  // D_p -> 1 ^ p
    } else {
      add(1 + l.p, 1 + l.q, coords[b]);  // D_{p,q} -> p ^ q
    }
  }
  return g;
}

}  // namespace octlie
