#include "octlie/engine.hpp"

#include <stdexcept>

#include "octlie/albert.hpp"
#include "octlie/parallel.hpp"

namespace octlie {

const char* algebra_name(AlgebraId id) {
  switch (id) {
    case AlgebraId::so8:
      return "so8";
    case AlgebraId::so9:
      return "so9";
    case AlgebraId::so16:
      return "so16";
    case AlgebraId::f4:
      return "f4";
    case AlgebraId::e8:
      return "e8";
  }
  throw std::logic_error("unreachable");
}

AlgebraId algebra_from_name(const std::string& s) {
  if (s == "so8") return AlgebraId::so8;
  if (s == "so9") return AlgebraId::so9;
  if (s == "so16") return AlgebraId::so16;
  if (s == "f4") return AlgebraId::f4;
  if (s == "e8") return AlgebraId::e8;
  throw std::invalid_argument("unknown algebra '" + s + "'");
}

namespace {

inline int conj_sign(int unit) { return unit == 0 ? 1 : -1; }

void add_scaled(RatMatrix& dst, const RatMatrix& src, const Rational& c, int rows, int cols) {
  if (dst.rows() == 0) dst = RatMatrix(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const Rational& v = src.at(i, j);
      if (!v.is_zero()) dst.at(i, j) += c * v;
    }
  }
}

}  // namespace

Engine::Engine(AlgebraId id, AlgebraKind k_kind, std::optional<AlgebraKind> l_kind)
    : id_(id), k_kind_(k_kind), l_kind_(l_kind) {
  switch (id) {
    case AlgebraId::so9:
      blocks_ = 2;
      if (l_kind_) throw std::invalid_argument("so9 takes a single octonion factor");
      break;
    case AlgebraId::so16:
      blocks_ = 2;
      if (!l_kind_) throw std::invalid_argument("so16 needs two octonion factors");
      break;
    case AlgebraId::f4:
      blocks_ = 3;
      if (l_kind_) throw std::invalid_argument("f4 takes a single octonion factor");
      break;
    case AlgebraId::e8:
      blocks_ = 3;
      if (!l_kind_) throw std::invalid_argument("e8 needs two octonion factors");
      break;
    default:
      throw std::invalid_argument("engine does not realize so8");
  }
  dl_ = l_kind_ ? 8 : 1;

  auto init_factor = [&](Factor& f, AlgebraKind kind) {
    f.so8 = &So8::get(kind);
    f.kind = kind;
    const MultiplicationTable& t = MultiplicationTable::get(kind);
    for (int u = 0; u < 8; ++u) f.lmat[u] = left_matrix(kind, u);
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        for (int x = 0; x < 8; ++x) {
          SignedUnit bx = t.product(b, x);
          SignedUnit abx = t.product(a, bx.unit);
          f.comp[a][b].row[x] = abx.unit;
          f.comp[a][b].sign[x] = abx.sign * bx.sign;
        }
      }
    }
    if (blocks_ == 3) {
      const TrialityMaps& tm = triality_maps(kind);
      f.e2d = tm.e_to_d;
      f.f2d = tm.f_to_d;
    }
  };
  init_factor(fk_, k_kind_);
  if (l_kind_) init_factor(fl_, *l_kind_);

  // Basis label order per algebra.
  auto push_dk = [&] {
    dk_base_ = static_cast<int>(labels_.size());
    for (const So8Label& l : fk_.so8->labels()) labels_.push_back({BasisLabel::Family::DK, l.p, l.q});
  };
  auto push_dl = [&] {
    dl_base_ = static_cast<int>(labels_.size());
    for (const So8Label& l : fl_.so8->labels()) labels_.push_back({BasisLabel::Family::DL, l.p, l.q});
  };
  auto push_off = [&](BasisLabel::Family fam, int& base) {
    base = static_cast<int>(labels_.size());
    for (int a = 0; a < 8; ++a) {
      if (dl_ == 1) {
        labels_.push_back({fam, a, -1});
      } else {
        for (int A = 0; A < 8; ++A) labels_.push_back({fam, a, A});
      }
    }
  };

  switch (id_) {
    case AlgebraId::so9:
      push_off(BasisLabel::Family::X, x_base_);
      push_dk();
      break;
    case AlgebraId::so16:
      push_dk();
      push_dl();
      push_off(BasisLabel::Family::X, x_base_);
      break;
    case AlgebraId::f4:
      push_off(BasisLabel::Family::X, x_base_);
      push_off(BasisLabel::Family::Y, y_base_);
      push_off(BasisLabel::Family::Z, z_base_);
      push_dk();
      break;
    case AlgebraId::e8:
      push_dk();
      push_dl();
      push_off(BasisLabel::Family::X, x_base_);
      push_off(BasisLabel::Family::Y, y_base_);
      push_off(BasisLabel::Family::Z, z_base_);
      break;
    default:
      break;
  }
}

int Engine::index_of(const BasisLabel& l) const {
  using F = BasisLabel::Family;
  switch (l.family) {
    case F::DK:
      return dk_base_ + fk_.so8->index_of({l.p, l.q});
    case F::DL:
      if (dl_base_ < 0) throw std::invalid_argument("no L-diagonal block in this algebra");
      return dl_base_ + fl_.so8->index_of({l.p, l.q});
    case F::X:
    case F::Y:
    case F::Z: {
      int base = l.family == F::X ? x_base_ : (l.family == F::Y ? y_base_ : z_base_);
      if (base < 0) throw std::invalid_argument("label family absent from this algebra");
      return base + (dl_ == 1 ? l.p : l.p * 8 + l.q);
    }
    default:
      throw std::invalid_argument("label family absent from this algebra");
  }
}

namespace {

void add_coord(std::vector<Rational>& slot, int idx, const Rational& c) {
  if (slot.empty()) slot.assign(So8::dim, Rational(0));
  slot[idx] += c;
}

}  // namespace

Realization Engine::realize(const std::vector<Rational>& coords) const {
  if (static_cast<int>(coords.size()) != dim()) {
    throw std::invalid_argument("realize: coordinate size mismatch");
  }
  Realization r;
  r.blocks = blocks_;
  r.dl = dl_;
  using F = BasisLabel::Family;
  for (int b = 0; b < dim(); ++b) {
    const Rational& c = coords[b];
    if (c.is_zero()) continue;
    const BasisLabel& l = labels_[b];
    switch (l.family) {
      case F::DK: {
        int idx = fk_.so8->index_of({l.p, l.q});
        const bool single = l.q < 0;
        add_coord(r.dk[0], idx, c);
        add_coord(r.dk[1], idx, single ? -c : c);
        break;
      }
      case F::DL: {
        int idx = fl_.so8->index_of({l.p, l.q});
        const bool single = l.q < 0;
        add_coord(r.dlg[0], idx, c);
        add_coord(r.dlg[1], idx, single ? -c : c);
        break;
      }
      case F::X:
      case F::Y:
      case F::Z: {
        int i, j;
        if (l.family == F::X) {
          i = 0;
          j = 1;
        } else if (l.family == F::Y) {
          i = 1;
          j = 2;
        } else {
          i = 2;
          j = 0;
        }
        const int a = l.p;
        const int A = dl_ == 1 ? 0 : l.q;
        if (r.off[i][j].rows() == 0) r.off[i][j] = RatMatrix(8, dl_);
        if (r.off[j][i].rows() == 0) r.off[j][i] = RatMatrix(8, dl_);
        r.off[i][j].at(a, A) += c;
        Rational m = -c;
        if (conj_sign(a) * (dl_ == 1 ? 1 : conj_sign(A)) < 0) m = c;
        r.off[j][i].at(a, A) += m;
        break;
      }
      default:
        throw std::invalid_argument("realize: label family absent from this algebra");
    }
  }
  return r;
}

Realization Engine::realize_diag_language(char language, int factor, int so8_index) const {
  if (blocks_ != 3 && language != 'D') {
    throw std::invalid_argument("E/F languages exist only in the 3×3 engines");
  }
  const Factor& f = factor == 0 ? fk_ : fl_;
  if (factor == 1 && dl_ == 1) throw std::invalid_argument("no second factor in this algebra");
  const So8Label& l = f.so8->labels()[so8_index];
  int pat[3];
  if (l.is_single()) {
    pat[0] = 1;
    pat[1] = -1;
    pat[2] = 0;
  } else {
    pat[0] = 1;
    pat[1] = 1;
    pat[2] = 0;
  }
  int rot = language == 'D' ? 0 : (language == 'E' ? 1 : 2);

  Realization r;
  r.blocks = blocks_;
  r.dl = dl_;
  for (int slot = 0; slot < blocks_; ++slot) {
    int sign = pat[(slot - rot + 3) % 3];
    if (sign == 0) continue;
    if (factor == 0) {
      add_coord(r.dk[slot], so8_index, Rational(sign));
    } else {
      add_coord(r.dlg[slot], so8_index, Rational(sign));
    }
  }
  return r;
}

std::vector<Rational> Engine::ef_alias_coords(char language, int factor, int so8_index) const {
  std::vector<Rational> out(dim());
  const Factor& f = factor == 0 ? fk_ : fl_;
  const int base = factor == 0 ? dk_base_ : dl_base_;
  if (base < 0) throw std::invalid_argument("no such diagonal block");
  if (language == 'D') {
    out[base + so8_index] = 1;
    return out;
  }
  const RatMatrix& conv = language == 'E' ? f.e2d : f.f2d;
  if (conv.rows() == 0) throw std::invalid_argument("E/F aliases exist only in the 3×3 engines");
  for (int r = 0; r < So8::dim; ++r) out[base + r] = conv.at(r, so8_index);
  return out;
}

namespace {

bool grid_zero(const RatMatrix& g) { return g.rows() == 0 || g.is_zero(); }

bool coords_zero(const std::vector<Rational>& c) {
  for (const auto& x : c) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace

RatMatrix Engine::sandwich_matrix(const Factor& f, const std::vector<Rational>& ci,
                                  const std::vector<Rational>& cj, const std::string& xl,
                                  const std::string& yl) const {
  const int ns = So8::n_single;
  std::vector<Rational> zero(So8::dim);
  const std::vector<Rational>& a = ci.empty() ? zero : ci;
  const std::vector<Rational>& b = cj.empty() ? zero : cj;

  // Single-index parts multiply out as plain octonions on either side.
  std::vector<Rational> left_part(So8::dim), right_part(So8::dim), vec_part(So8::dim);
  for (int t = 0; t < ns; ++t) {
    left_part[t] = a[t];
    right_part[t] = b[t];
  }
  // Nested parts: equal on both sides collapses to the vector action;
  // one-sided contact applies the left or right form; two different nested
  // operators on the two sides have no defined product.
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
    throw std::logic_error("bracket: undefined two-sided nested product for [" + xl + ", " + yl +
                           "]");
  }

  RatMatrix m = f.so8->left_form(left_part);
  m -= f.so8->right_form(right_part);
  m += f.so8->vec_form(vec_part);
  return m;
}

std::vector<Rational> Engine::bracket_realized(const Realization& u, const Realization& v,
                                               const std::string& xl,
                                               const std::string& yl) const {
  const int n = blocks_;
  // Off-diagonal entries of [u, v].
  std::array<std::array<RatMatrix, 3>, 3> p;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      RatMatrix acc(8, dl_);

      // Diagonal of one element sandwiching the off-entry of the other:
      // u(i,i) v(i,j) - v(i,j) u(j,j), and the same with roles swapped.
      auto sandwich_terms = [&](const Realization& d, const Realization& o, int sgn) {
        const RatMatrix& t = o.off[i][j];
        if (grid_zero(t)) return;
        bool hask = !d.dk[i].empty() || !d.dk[j].empty();
        bool hasl = dl_ > 1 && (!d.dlg[i].empty() || !d.dlg[j].empty());
        if (hask) {
          RatMatrix sk = sandwich_matrix(fk_, d.dk[i], d.dk[j], xl, yl) * t;
          if (sgn > 0)
            acc += sk;
          else
            acc -= sk;
        }
        if (hasl) {
          RatMatrix sl = t * sandwich_matrix(fl_, d.dlg[i], d.dlg[j], xl, yl).transpose();
          if (sgn > 0)
            acc += sl;
          else
            acc -= sl;
        }
      };
      sandwich_terms(u, v, +1);
      sandwich_terms(v, u, -1);

      // Middle products u(i,m) v(m,j) - v(i,m) u(m,j) for m distinct from
      // both: plain factorwise octonion products.
      for (int m = 0; m < n; ++m) {
        if (m == i || m == j) continue;
        auto middle = [&](const Realization& a, const Realization& b, int sgn) {
          if (grid_zero(a.off[i][m]) || grid_zero(b.off[m][j])) return;
          const RatMatrix& ta = a.off[i][m];
          const RatMatrix& tb = b.off[m][j];
          for (int x = 0; x < 8; ++x) {
            for (int X = 0; X < dl_; ++X) {
              const Rational& ca = ta.at(x, X);
              if (ca.is_zero()) continue;
              for (int y = 0; y < 8; ++y) {
                for (int Y = 0; Y < dl_; ++Y) {
                  const Rational& cb = tb.at(y, Y);
                  if (cb.is_zero()) continue;
                  SignedUnit ku = MultiplicationTable::get(fk_.kind).product(x, y);
                  int lsign = 1, lunit = 0;
                  if (dl_ > 1) {
                    SignedUnit lu = MultiplicationTable::get(fl_.kind).product(X, Y);
                    lsign = lu.sign;
                    lunit = lu.unit;
                  }
                  Rational c = ca * cb;
                  if (sgn < 0) c = -c;
                  if (ku.sign * lsign < 0) c = -c;
                  acc.at(ku.unit, lunit) += c;
                }
              }
            }
          }
        };
        middle(u, v, +1);
        middle(v, u, -1);
      }
      p[i][j] = std::move(acc);
    }
  }

  // Anti-Hermitian consistency of the raw off-diagonal part.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int a = 0; a < 8; ++a) {
        for (int A = 0; A < dl_; ++A) {
          Rational expect = -p[i][j].at(a, A);
          if (conj_sign(a) * (dl_ == 1 ? 1 : conj_sign(A)) < 0) expect = -expect;
          if (p[j][i].at(a, A) != expect) {
            throw std::logic_error("bracket: raw commutator not anti-Hermitian for [" + xl +
                                   ", " + yl + "]");
          }
        }
      }
    }
  }

  // Diagonal slots: operator pair commutators plus off*off accumulations.
  // Diagonal entries compose as left multiplications, so the slot-level
  // commutator is the commutator of the left forms.
  std::array<RatMatrix, 3> gk, gl;
  const int dtot = 8 * dl_;
  for (int i = 0; i < n; ++i) {
    if (!u.dk[i].empty() && !v.dk[i].empty() && !coords_zero(u.dk[i]) && !coords_zero(v.dk[i])) {
      gk[i] = mat_commutator(fk_.so8->left_form(u.dk[i]), fk_.so8->left_form(v.dk[i]));
    }
    if (dl_ > 1 && !u.dlg[i].empty() && !v.dlg[i].empty() && !coords_zero(u.dlg[i]) &&
        !coords_zero(v.dlg[i])) {
      gl[i] = mat_commutator(fl_.so8->left_form(u.dlg[i]), fl_.so8->left_form(v.dlg[i]));
    }

    RatMatrix m;  // dtot × dtot accumulator for off*off terms
    auto add_kron = [&](const RatMatrix& t, const RatMatrix& s, int outer_sign) {
      if (grid_zero(t) || grid_zero(s)) return;
      if (m.rows() == 0) m = RatMatrix(dtot, dtot);
      for (int a = 0; a < 8; ++a) {
        for (int A = 0; A < dl_; ++A) {
          const Rational& ca = t.at(a, A);
          if (ca.is_zero()) continue;
          for (int b = 0; b < 8; ++b) {
            for (int B = 0; B < dl_; ++B) {
              const Rational& cb = s.at(b, B);
              if (cb.is_zero()) continue;
              Rational c = ca * cb;
              if (outer_sign < 0) c = -c;
              const auto& ck = fk_.comp[a][b];
              if (dl_ == 1) {
                for (int x = 0; x < 8; ++x) {
                  Rational w = c;
                  if (ck.sign[x] < 0) w = -w;
                  m.at(ck.row[x], x) += w;
                }
              } else {
                const auto& cl = fl_.comp[A][B];
                for (int x = 0; x < 8; ++x) {
                  for (int X = 0; X < 8; ++X) {
                    Rational w = c;
                    if (ck.sign[x] * cl.sign[X] < 0) w = -w;
                    m.at(ck.row[x] * 8 + cl.row[X], x * 8 + X) += w;
                  }
                }
              }
            }
          }
        }
      }
    };
    for (int mm = 0; mm < n; ++mm) {
      if (mm == i) continue;
      add_kron(u.off[i][mm], v.off[mm][i], +1);
      add_kron(v.off[i][mm], u.off[mm][i], -1);
    }

    if (m.rows() != 0) {
      if (!m.trace().is_zero()) {
        throw ClosureViolation("bracket: diagonal trace component", xl, yl);
      }
      if (dl_ == 1) {
        add_scaled(gk[i], m, Rational(1), 8, 8);
      } else {
        RatMatrix kpart = m.ptrace_second(8, 8);
        kpart.scale(Rational(1, 8));
        RatMatrix lpart = m.ptrace_first(8, 8);
        lpart.scale(Rational(1, 8));
        // Pair-form verification: m must equal kpart ⊗ I + I ⊗ lpart.
        for (int x = 0; x < 8; ++x) {
          for (int X = 0; X < 8; ++X) {
            for (int y = 0; y < 8; ++y) {
              for (int Y = 0; Y < 8; ++Y) {
                Rational expect;
                if (X == Y) expect += kpart.at(x, y);
                if (x == y) expect += lpart.at(X, Y);
                if (m.at(x * 8 + X, y * 8 + Y) != expect) {
                  throw ClosureViolation("bracket: diagonal entry not an operator pair", xl, yl);
                }
              }
            }
          }
        }
        if (!kpart.is_zero()) add_scaled(gk[i], kpart, Rational(1), 8, 8);
        if (!lpart.is_zero()) add_scaled(gl[i], lpart, Rational(1), 8, 8);
      }
    }
  }

  // Assemble output coordinates.
  std::vector<Rational> out(dim());

  decompose_diag_triple(fk_, gk, out, xl, yl);
  if (dl_ > 1) decompose_diag_triple(fl_, gl, out, xl, yl);

  auto read_off = [&](int i, int j, int base) {
    if (base < 0) return;
    const RatMatrix& g = p[i][j];
    for (int a = 0; a < 8; ++a) {
      for (int A = 0; A < dl_; ++A) {
        const Rational& c = g.at(a, A);
        if (!c.is_zero()) out[base + (dl_ == 1 ? a : a * 8 + A)] = c;
      }
    }
  };
  read_off(0, 1, x_base_);
  if (blocks_ == 3) {
    read_off(1, 2, y_base_);
    read_off(2, 0, z_base_);
  }
  return out;
}

void Engine::decompose_diag_triple(const Factor& f, std::array<RatMatrix, 3>& g,
                                   std::vector<Rational>& out, const std::string& xl,
                                   const std::string& yl) const {
  const int base = (&f == &fk_) ? dk_base_ : dl_base_;
  bool any = false;
  for (int i = 0; i < blocks_; ++i) any = any || g[i].rows() != 0;
  if (!any) return;

  std::array<std::vector<Rational>, 3> coords;
  for (int i = 0; i < blocks_; ++i) {
    if (g[i].rows() == 0 || g[i].is_zero()) {
      coords[i].assign(So8::dim, Rational(0));
      continue;
    }
    auto c = f.so8->decompose(g[i]);
    if (!c) throw ClosureViolation("bracket: diagonal slot left the operator span", xl, yl);
    coords[i] = std::move(*c);
  }

  const int ns = So8::n_single;
  std::vector<Rational> d(So8::dim);
  if (blocks_ == 2) {
    // Pure D shape: slot0 = S + W, slot1 = -S + W.
    for (int t = 0; t < So8::dim; ++t) {
      bool single = t < ns;
      Rational expect = single ? -coords[0][t] : coords[0][t];
      if (coords[1][t] != expect) {
        throw ClosureViolation("bracket: diagonal not of D shape", xl, yl);
      }
      d[t] = coords[0][t];
    }
  } else {
    // Gauge: no single-index F component.
    std::vector<Rational> e(So8::dim), ff(So8::dim);
    for (int t = 0; t < ns; ++t) {
      Rational sum = coords[0][t] + coords[1][t] + coords[2][t];
      if (!sum.is_zero()) {
        throw ClosureViolation("bracket: single-grade diagonal triple unbalanced", xl, yl);
      }
      d[t] = coords[0][t];
      e[t] = coords[0][t] + coords[1][t];
    }
    for (int t = ns; t < So8::dim; ++t) {
      Rational dw = (coords[0][t] + coords[1][t] - coords[2][t]) / Rational(2);
      d[t] = dw;
      e[t] = coords[1][t] - dw;
      ff[t] = coords[0][t] - dw;
    }
    // Canonicalize: d += E2D e + F2D f.
    for (int col = 0; col < So8::dim; ++col) {
      if (!e[col].is_zero()) {
        for (int r = 0; r < So8::dim; ++r) d[r] += f.e2d.at(r, col) * e[col];
      }
      if (!ff[col].is_zero()) {
        for (int r = 0; r < So8::dim; ++r) d[r] += f.f2d.at(r, col) * ff[col];
      }
    }
  }
  for (int t = 0; t < So8::dim; ++t) {
    if (!d[t].is_zero()) out[base + t] += d[t];
  }
}

std::vector<Rational> Engine::bracket(const std::vector<Rational>& u,
                                      const std::vector<Rational>& v) const {
  return bracket_realized(realize(u), realize(v));
}

BracketEntry Engine::bracket_basis(int i, int j) const {
  std::vector<Rational> u(dim()), v(dim());
  u[i] = 1;
  v[j] = 1;
  auto coords = bracket_realized(realize(u), realize(v), label_name(labels_[i], dl_ > 1),
                                 label_name(labels_[j], dl_ > 1));
  BracketEntry e;
  for (int k = 0; k < dim(); ++k) {
    if (!coords[k].is_zero()) e.emplace_back(k, coords[k]);
  }
  return e;
}

RatMatrix Engine::column_action(const std::vector<Rational>& coords) const {
  if (blocks_ != 2) throw std::invalid_argument("column_action: 2×2 engines only");
  Realization r = realize(coords);
  const int d = 8 * dl_;
  RatMatrix m(2 * d, 2 * d);
  auto put_block = [&](int bi, int bj, const RatMatrix& blk) {
    for (int x = 0; x < d; ++x) {
      for (int y = 0; y < d; ++y) {
        const Rational& v = blk.at(x, y);
        if (!v.is_zero()) m.at(bi * d + x, bj * d + y) += v;
      }
    }
  };
  RatMatrix id8 = RatMatrix::identity(8);
  for (int i = 0; i < 2; ++i) {
    if (!r.dk[i].empty()) {
      RatMatrix kl = fk_.so8->left_form(r.dk[i]);
      put_block(i, i, dl_ == 1 ? kl : kl.kron(RatMatrix::identity(dl_)));
    }
    if (dl_ > 1 && !r.dlg[i].empty()) put_block(i, i, id8.kron(fl_.so8->left_form(r.dlg[i])));
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (i == j || grid_zero(r.off[i][j])) continue;
      RatMatrix blk(d, d);
      for (int a = 0; a < 8; ++a) {
        for (int A = 0; A < dl_; ++A) {
          const Rational& c = r.off[i][j].at(a, A);
          if (c.is_zero()) continue;
          if (dl_ == 1) {
            add_scaled(blk, fk_.lmat[a], c, 8, 8);
          } else {
            RatMatrix t = fk_.lmat[a].kron(fl_.lmat[A]);
            add_scaled(blk, t, c, d, d);
          }
        }
      }
      put_block(i, j, blk);
    }
  }
  return m;
}

StructureConstants Engine::build_table() const {
  StructureConstants table(algebra_name(id_), k_kind_, l_kind_, labels_);
  const int n = dim();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<BracketEntry> results(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t t) {
    results[t] = bracket_basis(pairs[t].first, pairs[t].second);
  });
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    table.set_entry(pairs[t].first, pairs[t].second, std::move(results[t]));
  }
  return table;
}

const RatMatrix& Engine::conv_e(int factor) const { return factor == 0 ? fk_.e2d : fl_.e2d; }
const RatMatrix& Engine::conv_f(int factor) const { return factor == 0 ? fk_.f2d : fl_.f2d; }

}  // namespace octlie
