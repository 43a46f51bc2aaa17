#include "octlie/octonion.hpp"

#include <map>
#include <stdexcept>

namespace octlie {

const char* kind_name(AlgebraKind k) { return k == AlgebraKind::compact ? "compact" : "split"; }

AlgebraKind kind_from_name(const std::string& s) {
  if (s == "compact") return AlgebraKind::compact;
  if (s == "split") return AlgebraKind::split;
  throw std::invalid_argument("unknown algebra kind '" + s + "'");
}

std::string unit_name(int unit, int alphabet) {
  static const char* lower[8] = {"1", "i", "j", "k", "l", "il", "jl", "kl"};
  static const char* upper[8] = {"1", "I", "J", "K", "L", "IL", "JL", "KL"};
  if (unit < 0 || unit > 7) throw std::invalid_argument("unit index out of range");
  return alphabet == 0 ? lower[unit] : upper[unit];
}

int unit_from_name(const std::string& s, int alphabet) {
  for (int u = 0; u < 8; ++u) {
    if (s == unit_name(u, alphabet)) return u;
  }
  throw std::invalid_argument("unknown unit name '" + s + "'");
}

namespace {

// Quaternion basis 1,i,j,k with ij=k, jk=i, ki=j.
struct QUnit {
  int unit;
  int sign;
};

QUnit qmul(QUnit a, QUnit b) {
  static const int tab[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  return {tab[a.unit][b.unit], sgn[a.unit][b.unit] * a.sign * b.sign};
}

QUnit qconj(QUnit a) { return {a.unit, a.unit == 0 ? a.sign : -a.sign}; }

// One Cayley-Dickson doubling convention for (a + b*l)(c + d*l); the variants
// differ in where the conjugations land.
struct Doubling {
  // Returns the two halves of the product of basis elements x=(x1,x2), y=(y1,y2)
  // where exactly one member of each pair is a (signed) quaternion unit and the
  // other is absent.
  int variant;
};

// Product of octonion basis units under doubling variant v with l*l = mu.
// Units 0..3 are quaternions, units 4..7 are (unit-4)*l.
SignedUnit doubled_product(int v, int mu, int a, int b) {
  const bool ah = a >= 4, bh = b >= 4;
  QUnit x{ah ? a - 4 : a, 1};
  QUnit y{bh ? b - 4 : b, 1};
  QUnit r{0, 0};
  bool rh = false;
  switch (v) {
    case 0:
      // (a1)(c1)=ac ; (a1)(d l)=(da) l ; (b l)(c1)=(b conj(c)) l ; (b l)(d l)=mu conj(d) b
      if (!ah && !bh) {
        r = qmul(x, y);
      } else if (!ah && bh) {
        r = qmul(y, x);
        rh = true;
      } else if (ah && !bh) {
        r = qmul(x, qconj(y));
        rh = true;
      } else {
        r = qmul(qconj(y), x);
        r.sign *= mu;
      }
      break;
    case 1:
      // (a1)(d l)=(ad) l ; (b l)(c1)=(cb)... transposed placement
      if (!ah && !bh) {
        r = qmul(x, y);
      } else if (!ah && bh) {
        r = qmul(x, y);
        rh = true;
      } else if (ah && !bh) {
        r = qmul(qconj(y), x);
        rh = true;
      } else {
        r = qmul(y, qconj(x));
        r.sign *= mu;
      }
      break;
    default:
      throw std::logic_error("unknown doubling variant");
  }
  return {r.unit + (rh ? 4 : 0), r.sign};
}

bool validate_table(const SignedUnit prod[8][8], AlgebraKind kind) {
  // Unit 0 is a two-sided identity.
  for (int a = 0; a < 8; ++a) {
    if (!(prod[0][a] == SignedUnit{a, 1}) || !(prod[a][0] == SignedUnit{a, 1})) return false;
  }
  // Unit squares.
  for (int a = 1; a < 8; ++a) {
    int expect = (kind == AlgebraKind::compact) ? -1 : (a >= 4 ? 1 : -1);
    if (!(prod[a][a] == SignedUnit{0, expect})) return false;
  }
  // Imaginary units anti-commute pairwise.
  for (int a = 1; a < 8; ++a) {
    for (int b = 1; b < 8; ++b) {
      if (a == b) continue;
      SignedUnit ab = prod[a][b];
      SignedUnit ba = prod[b][a];
      if (ab.unit != ba.unit || ab.sign != -ba.sign) return false;
    }
  }
  // ij = k.
  if (!(prod[1][2] == SignedUnit{3, 1})) return false;
  // (ij)l = -i(jl):   k*l vs i*(jl).
  {
    SignedUnit lhs = prod[3][4];
    SignedUnit rhs = prod[1][6];
    if (lhs.unit != rhs.unit || lhs.sign != -rhs.sign) return false;
  }
  // Alternativity on the basis: (xx)y = x(xy) and (xy)y = x(yy).
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      SignedUnit xx = prod[x][x];
      SignedUnit xy = prod[x][y];
      SignedUnit lhs{prod[xx.unit][y].unit, prod[xx.unit][y].sign * xx.sign};
      SignedUnit rhs{prod[x][xy.unit].unit, prod[x][xy.unit].sign * xy.sign};
      if (!(lhs == rhs)) return false;
      SignedUnit yy = prod[y][y];
      SignedUnit l2{prod[xy.unit][y].unit, prod[xy.unit][y].sign * xy.sign};
      SignedUnit r2{prod[x][yy.unit].unit, prod[x][yy.unit].sign * yy.sign};
      if (!(l2 == r2)) return false;
    }
  }
  if (kind == AlgebraKind::compact) {
    // The 7-cycle (i,j,l,k,jl,-kl,il) must be an automorphism.
    SignedUnit cyc[8];
    cyc[0] = {0, 1};
    cyc[1] = {2, 1};   // i -> j
    cyc[2] = {4, 1};   // j -> l
    cyc[4] = {3, 1};   // l -> k
    cyc[3] = {6, 1};   // k -> jl
    cyc[6] = {7, -1};  // jl -> -kl
    cyc[7] = {5, -1};  // kl -> -il
    cyc[5] = {1, 1};   // il -> i
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        SignedUnit ab = prod[a][b];
        SignedUnit lhs{cyc[ab.unit].unit, cyc[ab.unit].sign * ab.sign};
        SignedUnit pa = cyc[a], pb = cyc[b];
        SignedUnit rhs = prod[pa.unit][pb.unit];
        rhs.sign *= pa.sign * pb.sign;
        if (!(lhs == rhs)) return false;
      }
    }
  }
  return true;
}

}  // namespace

MultiplicationTable::MultiplicationTable(AlgebraKind kind) : kind_(kind) {
  const int mu = (kind == AlgebraKind::compact) ? -1 : 1;
  for (int v = 0; v < 2; ++v) {
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) prod_[a][b] = doubled_product(v, mu, a, b);
    }
    if (validate_table(prod_, kind)) return;
  }
  throw std::logic_error("no doubling convention satisfies the pinning identities");
}

const MultiplicationTable& MultiplicationTable::get(AlgebraKind kind) {
  static const MultiplicationTable compact{AlgebraKind::compact};
  static const MultiplicationTable split{AlgebraKind::split};
  return kind == AlgebraKind::compact ? compact : split;
}

SignedUnit seven_cycle(SignedUnit u, AlgebraKind kind) {
  if (kind != AlgebraKind::compact) {
    throw std::invalid_argument("seven_cycle: defined for the compact octonions only");
  }
  if (u.unit == 0) throw std::invalid_argument("seven_cycle: imaginary units only");
  static const SignedUnit cyc[8] = {
      {0, 1}, {2, 1}, {4, 1}, {6, 1}, {3, 1}, {1, 1}, {7, -1}, {5, -1},
  };
  SignedUnit r = cyc[u.unit];
  r.sign *= u.sign;
  return r;
}

Octonion Octonion::unit(AlgebraKind kind, int u, const Rational& c) {
  Octonion x(kind);
  x.c_[u] = c;
  return x;
}

Octonion Octonion::unit(AlgebraKind kind, SignedUnit u) {
  return unit(kind, u.unit, Rational(u.sign));
}

bool Octonion::is_zero() const {
  for (const auto& x : c_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Octonion Octonion::operator-() const {
  Octonion r(kind_);
  for (int i = 0; i < 8; ++i) r.c_[i] = -c_[i];
  return r;
}

Octonion& Octonion::operator+=(const Octonion& o) {
  if (kind_ != o.kind_) throw std::invalid_argument("Octonion: kind mismatch");
  for (int i = 0; i < 8; ++i) c_[i] += o.c_[i];
  return *this;
}

Octonion& Octonion::operator-=(const Octonion& o) {
  if (kind_ != o.kind_) throw std::invalid_argument("Octonion: kind mismatch");
  for (int i = 0; i < 8; ++i) c_[i] -= o.c_[i];
  return *this;
}

Octonion& Octonion::scale(const Rational& r) {
  for (auto& x : c_) x *= r;
  return *this;
}

bool operator==(const Octonion& a, const Octonion& b) {
  if (a.kind_ != b.kind_) return false;
  for (int i = 0; i < 8; ++i) {
    if (a.c_[i] != b.c_[i]) return false;
  }
  return true;
}

std::string Octonion::to_string(int alphabet) const {
  std::string s;
  for (int i = 0; i < 8; ++i) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += c_[i].to_string();
    if (i > 0) s += "*" + unit_name(i, alphabet);
  }
  return s.empty() ? "0" : s;
}

Octonion multiply(const Octonion& x, const Octonion& y) {
  if (x.kind() != y.kind()) throw std::invalid_argument("multiply: kind mismatch");
  const MultiplicationTable& t = MultiplicationTable::get(x.kind());
  Octonion r(x.kind());
  for (int a = 0; a < 8; ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < 8; ++b) {
      if (y[b].is_zero()) continue;
      SignedUnit p = t.product(a, b);
      Rational term = x[a] * y[b];
      if (p.sign < 0) term = -term;
      r[p.unit] += term;
    }
  }
  return r;
}

Octonion conjugate(const Octonion& x) {
  Octonion r = x;
  for (int i = 1; i < 8; ++i) r[i] = -r[i];
  return r;
}

Rational norm(const Octonion& x) {
  Octonion p = multiply(x, conjugate(x));
  for (int i = 1; i < 8; ++i) {
    if (!p[i].is_zero()) throw std::logic_error("norm: x*conj(x) not scalar");
  }
  return p[0];
}

Rational inner(const Octonion& x, const Octonion& y) {
  Octonion s = x;
  s += y;
  Rational v = norm(s) - norm(x) - norm(y);
  return v / Rational(2);
}

}  // namespace octlie
