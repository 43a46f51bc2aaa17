#include <doctest.h>

#include "octlie/e8.hpp"
#include "octlie/f4.hpp"
#include "octlie/so16.hpp"
#include "octlie/verify.hpp"

using namespace octlie;

namespace {

std::vector<Rational> indicator(int i) {
  std::vector<Rational> c(E8Algebra::dim);
  c[i] = 1;
  return c;
}

int dk(const Engine& e, int p, int q) { return e.index_of({BasisLabel::Family::DK, p, q}); }
int dl(const Engine& e, int p, int q) { return e.index_of({BasisLabel::Family::DL, p, q}); }
int off(const Engine& e, BasisLabel::Family f, int a, int A) { return e.index_of({f, a, A}); }

}  // namespace

TEST_CASE("[X_aA, Y_bB] = -Z_{conj(ab) conj(AB)} on all 64 x 64 subscript pairs") {
  E8Algebra e8(AlgebraKind::compact, AlgebraKind::compact);
  const Engine& e = e8.engine();
  StructureConstants table = e8.table();
  const auto& t = MultiplicationTable::get(AlgebraKind::compact);
  using F = BasisLabel::Family;
  for (int a = 0; a < 8; ++a) {
    for (int A = 0; A < 8; ++A) {
      for (int b = 0; b < 8; ++b) {
        for (int B = 0; B < 8; ++B) {
          SignedUnit ab = t.product(a, b);
          SignedUnit AB = t.product(A, B);
          int csa = ab.unit == 0 ? 1 : -1;  // conjugation signs
          int csA = AB.unit == 0 ? 1 : -1;
          int coeff = -ab.sign * AB.sign * csa * csA;
          auto got = table.bracket_basis(off(e, F::X, a, A), off(e, F::Y, b, B));
          REQUIRE(got.size() == 1);
          CHECK(got[0].first == off(e, F::Z, ab.unit, AB.unit));
          CHECK(got[0].second == Rational(coeff));
        }
      }
    }
  }
}

TEST_CASE("the two diagonal alphabets commute and [D_p, X_aA] carries both subscripts") {
  E8Algebra e8(AlgebraKind::compact, AlgebraKind::split);
  const Engine& e = e8.engine();
  using F = BasisLabel::Family;
  for (int i = 0; i < So8::dim; ++i) {
    for (int j = 0; j < So8::dim; ++j) {
      CHECK(e8.bracket(indicator(i), indicator(So8::dim + j)) ==
            std::vector<Rational>(E8Algebra::dim));
    }
  }
  const auto& tk = MultiplicationTable::get(AlgebraKind::compact);
  for (int p = 1; p < 8; ++p) {
    for (int a = 0; a < 8; ++a) {
      auto r = e8.bracket(indicator(dk(e, p, -1)), indicator(off(e, F::X, a, 6)));
      SignedUnit ap = tk.product(a, p), pa = tk.product(p, a);
      std::vector<Rational> want(E8Algebra::dim);
      want[off(e, F::X, ap.unit, 6)] += ap.sign;
      want[off(e, F::X, pa.unit, 6)] += pa.sign;
      CHECK(r == want);
    }
  }
}

TEST_CASE("[X_aA, X_aB] = 2 a conj(a) D_{A,B} inside the X copy") {
  E8Algebra e8(AlgebraKind::split, AlgebraKind::compact);
  const Engine& e = e8.engine();
  const auto& tk = MultiplicationTable::get(AlgebraKind::split);
  using F = BasisLabel::Family;
  for (int a = 0; a < 8; ++a) {
    for (int A = 1; A < 8; ++A) {
      for (int B = A + 1; B < 8; ++B) {
        auto r = e8.bracket(indicator(off(e, F::X, a, A)), indicator(off(e, F::X, a, B)));
        std::vector<Rational> want(E8Algebra::dim);
        want[dl(e, A, B)] = 2 * tk.unit_norm(a);
        CHECK(r == want);
      }
    }
  }
}

TEST_CASE("subalgebra embeddings against the independently built tables") {
  E8Algebra e8(AlgebraKind::compact, AlgebraKind::compact);
  StructureConstants table = e8.table();
  F4Algebra f4(AlgebraKind::compact);
  StructureConstants f4t = f4.table();
  So16Algebra s16(AlgebraKind::compact, AlgebraKind::compact);
  StructureConstants s16t = s16.table();

  for (const char* w : {"f4-K", "f4-L"}) {
    EmbeddingReport rep = verify_embedding(table, e8.engine(), f4t, w);
    CHECK(rep.ok);
    CHECK(rep.first_mismatch.empty());
  }
  for (const char* w : {"so16-X", "so16-Y", "so16-Z"}) {
    EmbeddingReport rep = verify_embedding(table, e8.engine(), s16t, w);
    CHECK(rep.ok);
  }
}

TEST_CASE("f4-K embedding is label for label") {
  E8Algebra e8(AlgebraKind::compact, AlgebraKind::compact);
  auto vecs = embedding_vectors(e8.engine(), "f4-K");
  F4Algebra f4(AlgebraKind::compact);
  for (int i = 0; i < F4Algebra::dim; ++i) {
    int nonzero = 0, image = -1;
    for (int t = 0; t < E8Algebra::dim; ++t) {
      if (!vecs[i][t].is_zero()) {
        ++nonzero;
        image = t;
      }
    }
    CHECK(nonzero == 1);
    // X:a maps to X:a,1 and D labels map to the K diagonal block
    BasisLabel sub = f4.engine().labels()[i];
    BasisLabel img = e8.engine().labels()[image];
    CHECK(sub.family == (img.family == BasisLabel::Family::DK ? sub.family : img.family));
    if (img.family != BasisLabel::Family::DK) {
      CHECK(img.p == sub.p);
      CHECK(img.q == 0);  // unit 1 in the L alphabet
    } else {
      CHECK(img.p == sub.p);
      CHECK(img.q == sub.q);
    }
  }
}

TEST_CASE("pairwise intersections of the three so(16) copies have dimension 56") {
  E8Algebra e8(AlgebraKind::compact, AlgebraKind::compact);
  auto vx = embedding_vectors(e8.engine(), "so16-X");
  auto vy = embedding_vectors(e8.engine(), "so16-Y");
  auto vz = embedding_vectors(e8.engine(), "so16-Z");
  CHECK(exact_rank(vx) == 120);
  CHECK(exact_rank(vy) == 120);
  CHECK(exact_rank(vz) == 120);
  CHECK(intersection_dimension(vx, vy) == 56);
  CHECK(intersection_dimension(vy, vz) == 56);
  CHECK(intersection_dimension(vx, vz) == 56);
}

TEST_CASE("the 2+1 block decomposition: ad of the X copy acts on Y+Z as the spinor") {
  E8Algebra e8(AlgebraKind::compact, AlgebraKind::compact);
  const Engine& e = e8.engine();
  StructureConstants table = e8.table();
  So16Algebra s16(AlgebraKind::compact, AlgebraKind::compact);
  using F = BasisLabel::Family;

  // Column vector of the third block: Z contributes -conj(b) x conj(B) to
  // the first slot, Y contributes b x B to the second.
  auto spinor_coords = [&](const std::vector<Rational>& e8_coords) {
    std::vector<Rational> w(128);
    for (int b = 0; b < 8; ++b) {
      for (int B = 0; B < 8; ++B) {
        const Rational& zc = e8_coords[off(e, F::Z, b, B)];
        if (!zc.is_zero()) {
          int cs = (b == 0 ? 1 : -1) * (B == 0 ? 1 : -1);
          w[b * 8 + B] += Rational(-cs) * zc;
        }
        const Rational& yc = e8_coords[off(e, F::Y, b, B)];
        if (!yc.is_zero()) w[64 + b * 8 + B] += yc;
      }
    }
    return w;
  };

  for (int g = 0; g < So16Algebra::dim; ++g) {
    // so16 basis index g corresponds to e8 basis index g (X copy, same order)
    RatMatrix spin = s16.spin_action([&] {
      std::vector<Rational> c(So16Algebra::dim);
      c[g] = 1;
      return c;
    }());
    for (int s = 0; s < 128; ++s) {
      int basis = off(e, s < 64 ? F::Z : F::Y, (s % 64) / 8, s % 8);
      auto br = table.bracket_basis(g, basis);
      std::vector<Rational> coords(E8Algebra::dim);
      for (const auto& [k, c] : br) coords[k] = c;
      // the X copy must keep the spinor block inside Y + Z
      for (int t = 0; t < E8Algebra::dim; ++t) {
        if (!coords[t].is_zero()) {
          auto fam = e.labels()[t].family;
          CHECK((fam == F::Y || fam == F::Z));
        }
      }
      std::vector<Rational> lhs = spinor_coords(coords);
      // spin action applied to the spinor coordinates of the basis element
      // (a single column of the spin matrix, scaled)
      std::vector<Rational> unit(E8Algebra::dim);
      unit[basis] = 1;
      std::vector<Rational> w = spinor_coords(unit);
      int cidx = -1;
      for (int c = 0; c < 128; ++c) {
        if (!w[c].is_zero()) cidx = c;
      }
      REQUIRE(cidx >= 0);
      std::vector<Rational> rhs(128);
      for (int r = 0; r < 128; ++r) rhs[r] = spin.at(r, cidx) * w[cidx];
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("well-definedness of the bracket across language representatives") {
  E8Algebra e8(AlgebraKind::compact, AlgebraKind::split);
  const Engine& e = e8.engine();
  for (int factor : {0, 1}) {
    for (int idx : {2, 10, 20}) {
      for (char lang : {'E', 'F'}) {
        Realization raw = e.realize_diag_language(lang, factor, idx);
        auto canon = e.ef_alias_coords(lang, factor, idx);
        for (int b : {56, 70, 120 + 9, 184 + 33}) {  // X, Y, Z samples
          auto via_raw = e.bracket_realized(raw, e.realize(indicator(b)));
          auto via_canon = e.bracket(canon, indicator(b));
          CHECK(via_raw == via_canon);
        }
      }
    }
  }
}

TEST_CASE("Jacobi via the adjoint homomorphism and the compact Killing form") {
  E8Algebra e8(AlgebraKind::compact, AlgebraKind::compact);
  StructureConstants table = e8.table();
  CHECK(table.dim() == 248);
  CHECK(check_jacobi(table).pass);
  KillingResult kr = killing(table);
  CHECK(kr.in == Inertia{0, 248, 0});
  CHECK(kr.form_name == "e8 (compact)");
  CHECK(check_invariance(table, kr.matrix).pass);
}

TEST_CASE("a generic adjoint kernel has dimension 8") {
  E8Algebra e8(AlgebraKind::compact, AlgebraKind::compact);
  StructureConstants table = e8.table();
  CHECK(rank_probe(table, 1, 20240809) == 8);
}
