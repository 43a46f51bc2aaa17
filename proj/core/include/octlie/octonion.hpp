#pragma once

#include <array>
#include <string>

#include "octlie/rational.hpp"

namespace octlie {

// Which octonion algebra a value lives in. In the compact algebra all seven
// imaginary units square to -1; in the split algebra the four units carrying
// the doubling unit (indices 4..7) square to +1 instead.
enum class AlgebraKind { compact, split };

const char* kind_name(AlgebraKind k);
AlgebraKind kind_from_name(const std::string& s);

// Basis order is fixed once and for all: 1, i, j, k, l, il, jl, kl.
inline constexpr int kOctonionDim = 8;

// Unit names; alphabet 0 prints lower-case (i, il, ...), alphabet 1 prints
// upper-case (I, IL, ...) for the second tensor factor.
std::string unit_name(int unit, int alphabet = 0);
int unit_from_name(const std::string& s, int alphabet = 0);

// A basis unit with a sign, e.g. -kl.
struct SignedUnit {
  int unit = 0;
  int sign = 1;

  SignedUnit negated() const { return {unit, -sign}; }
  bool operator==(const SignedUnit&) const = default;
};

// Signed-index multiplication table for one algebra kind. Generated by a
// Cayley-Dickson doubling of the quaternions and validated against the
// pinning identities ij=k, (ij)l=-i(jl), the 7-cycle closure (compact) and
// the unit squares (split); generation fails loudly if no doubling
// convention satisfies all of them.
class MultiplicationTable {
 public:
  static const MultiplicationTable& get(AlgebraKind kind);

  AlgebraKind kind() const { return kind_; }
  SignedUnit product(int a, int b) const { return prod_[a][b]; }
  SignedUnit product(SignedUnit a, SignedUnit b) const {
    SignedUnit p = prod_[a.unit][b.unit];
    return {p.unit, p.sign * a.sign * b.sign};
  }
  // Square of a basis unit as +-1 (unit 0 squares to +1).
  int unit_square(int a) const {
    SignedUnit p = prod_[a][a];
    return p.sign;
  }
  // Norm of a basis unit, a * conj(a), as +-1.
  int unit_norm(int a) const { return a == 0 ? 1 : -unit_square(a); }

 private:
  explicit MultiplicationTable(AlgebraKind kind);

  AlgebraKind kind_;
  SignedUnit prod_[8][8];
};

// The 7-fold symmetry (i, j, l, k, jl, -kl, il) of the compact octonions,
// applied to one signed unit. Throws for the split kind, which does not
// have this symmetry, and for unit 0.
SignedUnit seven_cycle(SignedUnit u, AlgebraKind kind);

// Exact octonion with 8 rational coordinates over [1,i,j,k,l,il,jl,kl].
class Octonion {
 public:
  explicit Octonion(AlgebraKind kind) : kind_(kind) {}
  static Octonion unit(AlgebraKind kind, int u, const Rational& c = Rational(1));
  static Octonion unit(AlgebraKind kind, SignedUnit u);

  AlgebraKind kind() const { return kind_; }
  Rational& operator[](int i) { return c_[i]; }
  const Rational& operator[](int i) const { return c_[i]; }

  bool is_zero() const;
  Rational scalar_part() const { return c_[0]; }

  Octonion operator-() const;
  Octonion& operator+=(const Octonion& o);
  Octonion& operator-=(const Octonion& o);
  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  Octonion& scale(const Rational& r);

  friend bool operator==(const Octonion& a, const Octonion& b);
  friend bool operator!=(const Octonion& a, const Octonion& b) { return !(a == b); }

  std::string to_string(int alphabet = 0) const;

 private:
  AlgebraKind kind_;
  std::array<Rational, 8> c_;
};

// Bilinear extension of the multiplication table; kinds must match.
Octonion multiply(const Octonion& x, const Octonion& y);

// The standard involution: fixes the real part, negates coordinates 1..7.
Octonion conjugate(const Octonion& x);

// N(x) = x * conj(x); asserts the imaginary part of the product vanishes.
Rational norm(const Octonion& x);

// Polarized norm <x,y> = (N(x+y) - N(x) - N(y)) / 2.
Rational inner(const Octonion& x, const Octonion& y);

}  // namespace octlie
