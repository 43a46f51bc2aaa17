#include "octlie/albert.hpp"

#include <stdexcept>

namespace octlie {

AlbertElement::AlbertElement(AlgebraKind kind, std::vector<Rational> coords)
    : kind_(kind), c_(std::move(coords)) {
  if (c_.size() != dim) throw std::invalid_argument("AlbertElement: 27 coordinates required");
}

AlbertElement AlbertElement::identity(AlgebraKind kind) {
  AlbertElement h(kind);
  h.c_[0] = h.c_[1] = h.c_[2] = 1;
  return h;
}

AlbertElement AlbertElement::U0(AlgebraKind kind) {
  AlbertElement h(kind);
  h.c_[0] = 1;
  h.c_[1] = -1;
  return h;
}

AlbertElement AlbertElement::V0(AlgebraKind kind) {
  AlbertElement h(kind);
  h.c_[1] = 1;
  h.c_[2] = -1;
  return h;
}

AlbertElement AlbertElement::W0(AlgebraKind kind) {
  AlbertElement h(kind);
  h.c_[0] = -1;
  h.c_[2] = 1;
  return h;
}

AlbertElement AlbertElement::U(AlgebraKind kind, int unit) {
  AlbertElement h(kind);
  h.c_[3 + unit] = 1;
  return h;
}

AlbertElement AlbertElement::V(AlgebraKind kind, int unit) {
  AlbertElement h(kind);
  h.c_[11 + unit] = 1;
  return h;
}

AlbertElement AlbertElement::W(AlgebraKind kind, int unit) {
  AlbertElement h(kind);
  h.c_[19 + unit] = 1;
  return h;
}

AlbertElement AlbertElement::operator-() const {
  AlbertElement r(kind_);
  for (int i = 0; i < dim; ++i) r.c_[i] = -c_[i];
  return r;
}

AlbertElement& AlbertElement::operator+=(const AlbertElement& o) {
  if (kind_ != o.kind_) throw std::invalid_argument("AlbertElement: kind mismatch");
  for (int i = 0; i < dim; ++i) c_[i] += o.c_[i];
  return *this;
}

AlbertElement& AlbertElement::operator-=(const AlbertElement& o) {
  if (kind_ != o.kind_) throw std::invalid_argument("AlbertElement: kind mismatch");
  for (int i = 0; i < dim; ++i) c_[i] -= o.c_[i];
  return *this;
}

AlbertElement& AlbertElement::scale(const Rational& r) {
  for (auto& x : c_) x *= r;
  return *this;
}

bool operator==(const AlbertElement& a, const AlbertElement& b) {
  return a.kind_ == b.kind_ && a.c_ == b.c_;
}

Octonion AlbertElement::matrix_entry(int i, int j) const {
  Octonion v(kind_);
  if (i == j) {
    v[0] = c_[i];
    return v;
  }
  // gamma at (0,1), alpha at (1,2), beta at (2,0); mirrors conjugated.
  auto slot = [&](int base, bool conj) {
    Octonion x(kind_);
    for (int u = 0; u < 8; ++u) x[u] = c_[base + u];
    return conj ? conjugate(x) : x;
  };
  if (i == 0 && j == 1) return slot(3, false);
  if (i == 1 && j == 0) return slot(3, true);
  if (i == 1 && j == 2) return slot(11, false);
  if (i == 2 && j == 1) return slot(11, true);
  if (i == 2 && j == 0) return slot(19, false);
  if (i == 0 && j == 2) return slot(19, true);
  throw std::invalid_argument("matrix_entry: bad indices");
}

namespace {

// Rebuild 27 coordinates from a Hermitian 3×3 octonion matrix; asserts
// Hermitian shape exactly.
AlbertElement from_matrix(AlgebraKind kind, const std::array<std::array<Octonion, 3>, 3>& m) {
  AlbertElement h(kind);
  for (int i = 0; i < 3; ++i) {
    for (int u = 1; u < 8; ++u) {
      if (!m[i][i][u].is_zero()) throw std::logic_error("albert: diagonal entry not real");
    }
    h[i] = m[i][i][0];
  }
  auto put = [&](int base, const Octonion& v, const Octonion& mirror) {
    if (conjugate(v) != mirror) throw std::logic_error("albert: result not Hermitian");
    for (int u = 0; u < 8; ++u) h[base + u] = v[u];
  };
  put(3, m[0][1], m[1][0]);
  put(11, m[1][2], m[2][1]);
  put(19, m[2][0], m[0][2]);
  return h;
}

std::array<std::array<Octonion, 3>, 3> to_matrix(const AlbertElement& h) {
  std::array<std::array<Octonion, 3>, 3> m{{{Octonion(h.kind()), Octonion(h.kind()), Octonion(h.kind())},
                                            {Octonion(h.kind()), Octonion(h.kind()), Octonion(h.kind())},
                                            {Octonion(h.kind()), Octonion(h.kind()), Octonion(h.kind())}}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] = h.matrix_entry(i, j);
  }
  return m;
}

}  // namespace

AlbertElement jordan_product(const AlbertElement& h1, const AlbertElement& h2) {
  if (h1.kind() != h2.kind()) throw std::invalid_argument("jordan_product: kind mismatch");
  auto a = to_matrix(h1);
  auto b = to_matrix(h2);
  std::array<std::array<Octonion, 3>, 3> r{{{Octonion(h1.kind()), Octonion(h1.kind()), Octonion(h1.kind())},
                                            {Octonion(h1.kind()), Octonion(h1.kind()), Octonion(h1.kind())},
                                            {Octonion(h1.kind()), Octonion(h1.kind()), Octonion(h1.kind())}}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Octonion s(h1.kind());
      for (int m = 0; m < 3; ++m) {
        s += multiply(a[i][m], b[m][j]);
        s += multiply(b[i][m], a[m][j]);
      }
      s.scale(Rational(1, 2));
      r[i][j] = s;
    }
  }
  return from_matrix(h1.kind(), r);
}

ActionMat3::ActionMat3(AlgebraKind k)
    : kind(k),
      off{{{Octonion(k), Octonion(k), Octonion(k)},
           {Octonion(k), Octonion(k), Octonion(k)},
           {Octonion(k), Octonion(k), Octonion(k)}}} {}

namespace {

// "M_i t - t M_j" on an octonion entry at position (i, j) of the action:
// singles multiply out plainly; a nested part present on both sides must be
// the same operator and collapses to its vector action; one-sided nested
// contact applies the left or right form.
RatMatrix sandwich_matrix8(const So8& so8, const std::vector<Rational>& ci,
                           const std::vector<Rational>& cj) {
  const int ns = So8::n_single;
  std::vector<Rational> zero(So8::dim);
  const std::vector<Rational>& a = ci.empty() ? zero : ci;
  const std::vector<Rational>& b = cj.empty() ? zero : cj;

  std::vector<Rational> left_part(So8::dim), right_part(So8::dim), vec_part(So8::dim);
  for (int t = 0; t < ns; ++t) {
    left_part[t] = a[t];
    right_part[t] = b[t];
  }
  bool wi_zero = true, wj_zero = true, equal = true;
  for (int t = ns; t < So8::dim; ++t) {
    if (!a[t].is_zero()) wi_zero = false;
    if (!b[t].is_zero()) wj_zero = false;
    if (a[t] != b[t]) equal = false;
  }
  if (equal) {
    for (int t = ns; t < So8::dim; ++t) vec_part[t] = a[t];
  } else if (wj_zero) {
    for (int t = ns; t < So8::dim; ++t) left_part[t] = a[t];
  } else if (wi_zero) {
    for (int t = ns; t < So8::dim; ++t) right_part[t] = b[t];
  } else {
    throw std::logic_error("albert_apply: undefined two-sided nested product");
  }

  RatMatrix m = so8.left_form(left_part);
  m -= so8.right_form(right_part);
  m += so8.vec_form(vec_part);
  return m;
}

Octonion apply_matrix(AlgebraKind kind, const RatMatrix& op, const Octonion& x) {
  Octonion r(kind);
  for (int col = 0; col < 8; ++col) {
    if (x[col].is_zero()) continue;
    for (int row = 0; row < 8; ++row) {
      if (op.at(row, col).is_zero()) continue;
      r[row] += op.at(row, col) * x[col];
    }
  }
  return r;
}

}  // namespace

AlbertElement albert_apply(const ActionMat3& a, const AlbertElement& h) {
  if (a.kind != h.kind()) throw std::invalid_argument("albert_apply: kind mismatch");
  const AlgebraKind kind = a.kind;
  const So8& so8 = So8::get(kind);
  auto hm = to_matrix(h);
  const bool any_diag = !a.diag[0].empty() || !a.diag[1].empty() || !a.diag[2].empty();

  std::array<std::array<Octonion, 3>, 3> r{{{Octonion(kind), Octonion(kind), Octonion(kind)},
                                            {Octonion(kind), Octonion(kind), Octonion(kind)},
                                            {Octonion(kind), Octonion(kind), Octonion(kind)}}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Octonion s(kind);
      // Diagonal sandwich A(i,i) H(i,j) - H(i,j) A(j,j).
      if (any_diag && !hm[i][j].is_zero()) {
        s += apply_matrix(kind, sandwich_matrix8(so8, a.diag[i], a.diag[j]), hm[i][j]);
      }
      // Off-diagonal products of A against H.
      for (int m = 0; m < 3; ++m) {
        if (m != i) s += multiply(a.off[i][m], hm[m][j]);
        if (m != j) s -= multiply(hm[i][m], a.off[m][j]);
      }
      r[i][j] = s;
    }
  }
  AlbertElement out = from_matrix(kind, r);
  if (!(out[0] + out[1] + out[2]).is_zero()) {
    throw std::logic_error("albert_apply: action does not preserve the trace");
  }
  return out;
}

RatMatrix albert_action_matrix27(const ActionMat3& a) {
  RatMatrix m(27, 27);
  for (int b = 0; b < 27; ++b) {
    AlbertElement h(a.kind);
    h[b] = 1;
    AlbertElement img = albert_apply(a, h);
    for (int r = 0; r < 27; ++r) m.at(r, b) = img[r];
  }
  return m;
}

std::vector<Rational> trace0_coords(const AlbertElement& h) {
  if (!h.trace().is_zero()) throw std::invalid_argument("trace0_coords: nonzero trace");
  std::vector<Rational> c(26);
  c[0] = h[0];        // U0
  c[1] = -h[2];       // V0
  for (int u = 0; u < 8; ++u) {
    c[2 + u] = h[3 + u];
    c[10 + u] = h[11 + u];
    c[18 + u] = h[19 + u];
  }
  return c;
}

AlbertElement from_trace0_coords(AlgebraKind kind, const std::vector<Rational>& c) {
  if (c.size() != 26) throw std::invalid_argument("from_trace0_coords: 26 coordinates required");
  AlbertElement h(kind);
  h[0] = c[0];
  h[1] = c[1] - c[0];
  h[2] = -c[1];
  for (int u = 0; u < 8; ++u) {
    h[3 + u] = c[2 + u];
    h[11 + u] = c[10 + u];
    h[19 + u] = c[18 + u];
  }
  return h;
}

RatMatrix albert_action_matrix26(const ActionMat3& a) {
  RatMatrix m(26, 26);
  for (int b = 0; b < 26; ++b) {
    std::vector<Rational> e(26);
    e[b] = 1;
    AlbertElement img = albert_apply(a, from_trace0_coords(a.kind, e));
    auto c = trace0_coords(img);
    for (int r = 0; r < 26; ++r) m.at(r, b) = c[r];
  }
  return m;
}

namespace {

// Diagonal generator with slot pattern (+1,-1,0) for singles, (+1,+1,0) for
// pairs, rotated by rot places for the E and F languages.
ActionMat3 diag_from_pattern(AlgebraKind kind, int so8_index, int rot) {
  const So8& so8 = So8::get(kind);
  const So8Label& l = so8.labels()[so8_index];
  int s[3];
  if (l.is_single()) {
    s[0] = 1;
    s[1] = -1;
    s[2] = 0;
  } else {
    s[0] = 1;
    s[1] = 1;
    s[2] = 0;
  }
  ActionMat3 a(kind);
  for (int slot = 0; slot < 3; ++slot) {
    int sign = s[(slot - rot + 3) % 3];
    if (sign == 0) continue;
    a.diag[slot].assign(So8::dim, Rational(0));
    a.diag[slot][so8_index] = sign;
  }
  return a;
}

}  // namespace

ActionMat3 diag_D(AlgebraKind kind, int so8_index) { return diag_from_pattern(kind, so8_index, 0); }
ActionMat3 diag_E(AlgebraKind kind, int so8_index) { return diag_from_pattern(kind, so8_index, 1); }
ActionMat3 diag_F(AlgebraKind kind, int so8_index) { return diag_from_pattern(kind, so8_index, 2); }

ActionMat3 offdiag_gen(AlgebraKind kind, char family, int unit) {
  ActionMat3 a(kind);
  Octonion v = Octonion::unit(kind, unit);
  Octonion nc = -conjugate(v);
  switch (family) {
    case 'X':
      a.off[0][1] = v;
      a.off[1][0] = nc;
      break;
    case 'Y':
      a.off[1][2] = v;
      a.off[2][1] = nc;
      break;
    case 'Z':
      a.off[2][0] = v;
      a.off[0][2] = nc;
      break;
    default:
      throw std::invalid_argument("offdiag_gen: family must be X, Y or Z");
  }
  return a;
}

const TrialityMaps& triality_maps(AlgebraKind kind) {
  static TrialityMaps cache[2];
  static bool ready[2] = {false, false};
  const int idx = kind == AlgebraKind::compact ? 0 : 1;
  if (!ready[idx]) {
    std::vector<std::vector<Rational>> dspan;
    dspan.reserve(So8::dim);
    for (int i = 0; i < So8::dim; ++i) {
      dspan.push_back(albert_action_matrix26(diag_D(kind, i)).flatten());
    }
    SpanSolver solver(dspan);
    RatMatrix e2d(So8::dim, So8::dim), f2d(So8::dim, So8::dim);
    for (int i = 0; i < So8::dim; ++i) {
      auto ce = solver.solve(albert_action_matrix26(diag_E(kind, i)).flatten());
      auto cf = solver.solve(albert_action_matrix26(diag_F(kind, i)).flatten());
      if (!ce || !cf) {
        throw std::logic_error("triality_maps: E/F action not in the D span (table convention bug)");
      }
      for (int r = 0; r < So8::dim; ++r) {
        e2d.at(r, i) = (*ce)[r];
        f2d.at(r, i) = (*cf)[r];
      }
    }
    cache[idx] = {std::move(e2d), std::move(f2d)};
    ready[idx] = true;
  }
  return cache[idx];
}

}  // namespace octlie
