#include <doctest.h>

#include "octlie/so9.hpp"
#include "octlie/verify.hpp"

using namespace octlie;

namespace {

const AlgebraKind kBoth[] = {AlgebraKind::compact, AlgebraKind::split};

std::vector<Rational> indicator(int i) {
  std::vector<Rational> c(So9Algebra::dim);
  c[i] = 1;
  return c;
}

int x_index(int a) { return a; }

int d_index(const Engine& eng, int p, int q) {
  return eng.index_of({BasisLabel::Family::DK, p, q});
}

std::vector<Rational> signed_x(const SignedUnit& u) {
  std::vector<Rational> c(So9Algebra::dim);
  c[x_index(u.unit)] = u.sign;
  return c;
}

}  // namespace

TEST_CASE("spin action of X_1 swaps the column halves with a sign") {
  So9Algebra so9(AlgebraKind::compact);
  RatMatrix m = so9.spin_action(indicator(x_index(0)));
  // (x, y) -> (y, -x)
  RatMatrix want(16, 16);
  for (int i = 0; i < 8; ++i) {
    want.at(i, 8 + i) = 1;
    want.at(8 + i, i) = -1;
  }
  CHECK(m == want);
}

TEST_CASE("the D labels are commutators of X labels in the spin representation") {
  for (AlgebraKind k : kBoth) {
    So9Algebra so9(k);
    const Engine& eng = so9.engine();
    for (int p = 1; p < 8; ++p) {
      RatMatrix lhs = mat_commutator(so9.spin_action(indicator(x_index(0))),
                                     so9.spin_action(indicator(x_index(p))));
      lhs.scale(Rational(1, 2));
      CHECK(lhs == so9.spin_action(indicator(d_index(eng, p, -1))));
      for (int q = p + 1; q < 8; ++q) {
        RatMatrix lhs2 = mat_commutator(so9.spin_action(indicator(x_index(p))),
                                        so9.spin_action(indicator(x_index(q))));
        lhs2.scale(Rational(1, 2));
        CHECK(lhs2 == so9.spin_action(indicator(d_index(eng, p, q))));
      }
    }
  }
}

TEST_CASE("the six commutator rules of the 2x2 construction") {
  for (AlgebraKind k : kBoth) {
    So9Algebra so9(k);
    const Engine& eng = so9.engine();
    const auto& t = MultiplicationTable::get(k);
    for (int p = 1; p < 8; ++p) {
      // [X_1, D_p] = -2 X_p
      auto r = so9.bracket(indicator(x_index(0)), indicator(d_index(eng, p, -1)));
      std::vector<Rational> want(So9Algebra::dim);
      want[x_index(p)] = -2;
      CHECK(r == want);
      // [X_p, D_p] = -2 p^2 X_1
      r = so9.bracket(indicator(x_index(p)), indicator(d_index(eng, p, -1)));
      want = std::vector<Rational>(So9Algebra::dim);
      want[x_index(0)] = -2 * t.unit_square(p);
      CHECK(r == want);
      for (int q = 1; q < 8; ++q) {
        if (q == p) continue;
        // [X_q, D_p] = 0
        r = so9.bracket(indicator(x_index(q)), indicator(d_index(eng, p, -1)));
        CHECK(r == std::vector<Rational>(So9Algebra::dim));
        if (q < p) continue;
        // [X_1, D_{p,q}] = 0
        r = so9.bracket(indicator(x_index(0)), indicator(d_index(eng, p, q)));
        CHECK(r == std::vector<Rational>(So9Algebra::dim));
        // [X_p, D_{p,q}] = 2 p^2 X_q
        r = so9.bracket(indicator(x_index(p)), indicator(d_index(eng, p, q)));
        want = std::vector<Rational>(So9Algebra::dim);
        want[x_index(q)] = 2 * t.unit_square(p);
        CHECK(r == want);
        // [X_r, D_{p,q}] = 0 for r orthogonal to p, q
        for (int s = 1; s < 8; ++s) {
          if (s == p || s == q) continue;
          r = so9.bracket(indicator(x_index(s)), indicator(d_index(eng, p, q)));
          CHECK(r == std::vector<Rational>(So9Algebra::dim));
        }
      }
    }
  }
}

TEST_CASE("[D_p, X_a] = X_{ap + pa} for every unit a and imaginary p") {
  for (AlgebraKind k : kBoth) {
    So9Algebra so9(k);
    const Engine& eng = so9.engine();
    for (int p = 1; p < 8; ++p) {
      for (int a = 0; a < 8; ++a) {
        auto r = so9.bracket(indicator(d_index(eng, p, -1)), indicator(x_index(a)));
        Octonion ap = multiply(Octonion::unit(k, a), Octonion::unit(k, p));
        Octonion pa = multiply(Octonion::unit(k, p), Octonion::unit(k, a));
        Octonion sum = ap + pa;
        std::vector<Rational> want(So9Algebra::dim);
        for (int u = 0; u < 8; ++u) want[x_index(u)] = sum[u];
        CHECK(r == want);
      }
    }
  }
}

TEST_CASE("symbolic bracket equals the spin-action bracket on all pairs") {
  for (AlgebraKind k : kBoth) {
    So9Algebra so9(k);
    for (int i = 0; i < So9Algebra::dim; ++i) {
      for (int j = i + 1; j < So9Algebra::dim; ++j) {
        CHECK(so9.bracket(indicator(i), indicator(j)) ==
              so9.bracket_via_action(indicator(i), indicator(j)));
      }
    }
  }
}

TEST_CASE("natural representation values") {
  for (AlgebraKind k : kBoth) {
    So9Algebra so9(k);
    const Engine& eng = so9.engine();
    std::vector<Rational> u1p(9);
    u1p[0] = 1;
    // (X_i, U_1') -> -2 U_i
    auto r = so9.natural_action(indicator(x_index(1)), u1p);
    std::vector<Rational> want(9);
    want[1 + 1] = -2;
    CHECK(r == want);
    // X_b maps U_b to 2 N(b) U_1'
    const auto& t = MultiplicationTable::get(k);
    for (int b = 0; b < 8; ++b) {
      std::vector<Rational> ub(9);
      ub[1 + b] = 1;
      r = so9.natural_action(indicator(x_index(b)), ub);
      want = std::vector<Rational>(9);
      want[0] = 2 * t.unit_norm(b);
      CHECK(r == want);
    }
    for (int p = 1; p < 8; ++p) {
      for (int q = p + 1; q < 8; ++q) {
        // (D_{p,q}, U_p) -> 2 q^2 ... evaluated from the operator commutator:
        // compact: 2 U_q; in general [L_pL_q, L_p] = -2 p^2 L_q.
        std::vector<Rational> up(9);
        up[1 + p] = 1;
        r = so9.natural_action(indicator(d_index(eng, p, q)), up);
        want = std::vector<Rational>(9);
        want[1 + q] = -2 * t.unit_square(p);
        CHECK(r == want);
        // (D_{p,q}, U_q) -> -2 U_p up to the unit square
        std::vector<Rational> uq(9);
        uq[1 + q] = 1;
        r = so9.natural_action(indicator(d_index(eng, p, q)), uq);
        want = std::vector<Rational>(9);
        want[1 + p] = 2 * t.unit_square(q);
        CHECK(r == want);
        // (D_{p,q}, U_1) -> 0
        std::vector<Rational> u1(9);
        u1[1] = 1;
        r = so9.natural_action(indicator(d_index(eng, p, q)), u1);
        CHECK(r == std::vector<Rational>(9));
        // and U_1' -> 0
        r = so9.natural_action(indicator(d_index(eng, p, q)), u1p);
        CHECK(r == std::vector<Rational>(9));
      }
    }
  }
}

TEST_CASE("compact natural-representation values match the stated 2q and -2p") {
  So9Algebra so9(AlgebraKind::compact);
  const Engine& eng = so9.engine();
  std::vector<Rational> up(9), uq(9);
  up[1 + 1] = 1;  // U_i
  uq[1 + 2] = 1;  // U_j
  auto r = so9.natural_action(indicator(d_index(eng, 1, 2)), up);
  std::vector<Rational> want(9);
  want[1 + 2] = 2;
  CHECK(r == want);  // 2 U_j
  r = so9.natural_action(indicator(d_index(eng, 1, 2)), uq);
  want = std::vector<Rational>(9);
  want[1 + 1] = -2;
  CHECK(r == want);  // -2 U_i
}

TEST_CASE("the natural representation is a homomorphism") {
  for (AlgebraKind k : kBoth) {
    So9Algebra so9(k);
    for (int i = 0; i < So9Algebra::dim; ++i) {
      for (int j = i + 1; j < So9Algebra::dim; ++j) {
        auto br = so9.bracket(indicator(i), indicator(j));
        RatMatrix lhs(9, 9);
        for (int b = 0; b < So9Algebra::dim; ++b) {
          if (br[b].is_zero()) continue;
          RatMatrix t = so9.natural_matrix(b);
          t.scale(br[b]);
          lhs += t;
        }
        CHECK(lhs == mat_commutator(so9.natural_matrix(i), so9.natural_matrix(j)));
      }
    }
  }
}

TEST_CASE("wedge coordinates and the adjoint model") {
  for (AlgebraKind k : kBoth) {
    So9Algebra so9(k);
    const Engine& eng = so9.engine();
    // X_1 -> 1' ^ 1 and D_i -> 1 ^ i
    RatMatrix wx = so9.wedge_coords(indicator(x_index(0)));
    CHECK(wx.at(0, 1) == Rational(1));
    RatMatrix wd = so9.wedge_coords(indicator(d_index(eng, 1, -1)));
    CHECK(wd.at(1, 2) == Rational(1));
    for (int i = 0; i < So9Algebra::dim; ++i) {
      for (int j = i + 1; j < So9Algebra::dim; ++j) {
        RatMatrix lhs = so9.wedge_coords(so9.bracket(indicator(i), indicator(j)));
        RatMatrix rhs = so9.wedge_model().bracket(so9.wedge_coords(indicator(i)),
                                                  so9.wedge_coords(indicator(j)));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("bracket throws on non-basis evaluation errors rather than closing silently") {
  So9Algebra so9(AlgebraKind::compact);
  // degenerate inputs: general elements bracket by bilinearity
  std::vector<Rational> u(So9Algebra::dim), v(So9Algebra::dim);
  u[x_index(0)] = Rational(1, 2);
  u[x_index(3)] = -2;
  v[d_index(so9.engine(), 2, 5)] = 3;
  auto direct = so9.bracket(u, v);
  // bilinear expansion over basis pairs must agree
  std::vector<Rational> acc(So9Algebra::dim);
  for (int i = 0; i < So9Algebra::dim; ++i) {
    for (int j = 0; j < So9Algebra::dim; ++j) {
      if (u[i].is_zero() || v[j].is_zero()) continue;
      auto term = so9.bracket(indicator(i), indicator(j));
      for (int t = 0; t < So9Algebra::dim; ++t) acc[t] += u[i] * v[j] * term[t];
    }
  }
  CHECK(direct == acc);
}

TEST_CASE("Jacobi identity on all triples and the Killing signatures") {
  for (AlgebraKind k : kBoth) {
    So9Algebra so9(k);
    StructureConstants table = so9.table();
    CHECK(check_jacobi(table).pass);
    CHECK(check_jacobi_triples(table).pass);
    KillingResult kr = killing(table);
    if (k == AlgebraKind::compact) {
      CHECK(kr.in == Inertia{0, 36, 0});
      CHECK(kr.form_name == "so(9)");
      // trace(ad x ∘ ad x) < 0 spot checks on basis elements
      for (int i : {0, 5, 20}) CHECK(kr.matrix.at(i, i).sign() < 0);
    } else {
      CHECK(kr.in == Inertia{20, 16, 0});
      CHECK(kr.form_name == "so(5,4)");
    }
  }
}

TEST_CASE("signed natural-unit sanity: bracket of signed X elements") {
  So9Algebra so9(AlgebraKind::compact);
  // [X_i, X_j] = 2 D_{i,j}; linear in signs
  auto r = so9.bracket(signed_x({1, -1}), signed_x({2, 1}));
  std::vector<Rational> want(So9Algebra::dim);
  want[d_index(so9.engine(), 1, 2)] = -2;
  CHECK(r == want);
}
