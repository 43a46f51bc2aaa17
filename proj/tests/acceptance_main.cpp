// Acceptance suite: runs every exit criterion at zero tolerance (exact
// equality throughout) and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <vector>

#include "octlie/albert.hpp"
#include "octlie/e8.hpp"
#include "octlie/engine.hpp"
#include "octlie/f4.hpp"
#include "octlie/linalg.hpp"
#include "octlie/so16.hpp"
#include "octlie/so8.hpp"
#include "octlie/so9.hpp"
#include "octlie/table_io.hpp"
#include "octlie/verify.hpp"

using namespace octlie;
using Clock = std::chrono::steady_clock;
using AK = AlgebraKind;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what, double seconds) {
  std::ostringstream os;
  os << "CRITERION " << criterion << " " << (pass ? "PASS" : "FAIL") << " [" << what << "] ("
     << seconds << "s)";
  std::cout << os.str() << std::endl;
  if (!pass) ++g_failures;
}

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Build {
  std::string name;
  StructureConstants table;
};

std::vector<Rational> indicator(int dim, int i) {
  std::vector<Rational> v(dim);
  v[i] = 1;
  return v;
}

// Exact rank of a family of matrices via their Gram matrix (entries are
// rational, so rank(G) = rank of the family).
int gram_rank(const std::vector<RatMatrix>& mats) {
  const int n = static_cast<int>(mats.size());
  std::vector<SparseRatMatrix> sp;
  sp.reserve(n);
  for (const auto& m : mats) sp.push_back(SparseRatMatrix::from_dense(m.transpose()));
  RatMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    SparseRatMatrix si = SparseRatMatrix::from_dense(mats[i]);
    for (int j = i; j < n; ++j) {
      Rational t = si.trace_product(sp[j]);
      g.at(i, j) = t;
      g.at(j, i) = t;
    }
  }
  return exact_rank(g);
}

}  // namespace

// ---------------------------------------------------------------------------
// Criterion 1: dimension ladder with independence by exact rank.
static void criterion1() {
  auto t0 = Clock::now();
  bool pass = true;
  std::string what = "dims";

  {  // so(8): 28 operators on 8-space
    const So8& so8 = So8::get(AK::compact);
    std::vector<RatMatrix> ops;
    for (int i = 0; i < So8::dim; ++i) ops.push_back(so8.left_op(i));
    pass = pass && gram_rank(ops) == 28;
    what += " so8=28";
  }
  {  // so(9): 36 spin matrices
    So9Algebra so9(AK::compact);
    std::vector<RatMatrix> mats;
    for (int b = 0; b < 36; ++b) mats.push_back(so9.spin_action(indicator(36, b)));
    pass = pass && gram_rank(mats) == 36;
    what += " so9=36";
  }
  {  // so(16): 120 spin matrices
    So16Algebra s(AK::compact, AK::compact);
    std::vector<RatMatrix> mats;
    for (int b = 0; b < 120; ++b) mats.push_back(s.spin_action(indicator(120, b)));
    pass = pass && gram_rank(mats) == 120;
    what += " so16=120";
  }
  {  // f4: 52 Albert actions
    F4Algebra f4(AK::compact);
    std::vector<RatMatrix> mats;
    for (int b = 0; b < 52; ++b) mats.push_back(f4.albert_matrix26(b));
    pass = pass && gram_rank(mats) == 52;
    what += " f4=52";
  }
  {  // e8: 248 adjoint matrices from the built table
    E8Algebra e8(AK::compact, AK::compact);
    StructureConstants t = e8.table();
    std::vector<RatMatrix> mats;
    for (int b = 0; b < 248; ++b) mats.push_back(t.ad_basis(b).to_dense());
    pass = pass && gram_rank(mats) == 248;
    what += " e8=248";
  }
  report(1, pass, what, since(t0));
}

// ---------------------------------------------------------------------------
// Criteria 2 and 3: closure of every build and the Jacobi identity.
static std::vector<Build> criterion2_builds() {
  auto t0 = Clock::now();
  std::vector<Build> builds;
  bool pass = true;
  std::string what;
  try {
    builds.push_back({"so8/compact", so8_structure_table(AK::compact)});
    builds.push_back({"so8/split", so8_structure_table(AK::split)});
    for (AK k : {AK::compact, AK::split}) {
      builds.push_back({std::string("so9/") + kind_name(k),
                        Engine(AlgebraId::so9, k, std::nullopt).build_table()});
      builds.push_back({std::string("f4/") + kind_name(k),
                        Engine(AlgebraId::f4, k, std::nullopt).build_table()});
    }
    for (AK k : {AK::compact, AK::split}) {
      for (AK l : {AK::compact, AK::split}) {
        builds.push_back({std::string("so16/") + kind_name(k) + "/" + kind_name(l),
                          Engine(AlgebraId::so16, k, l).build_table()});
        builds.push_back({std::string("e8/") + kind_name(k) + "/" + kind_name(l),
                          Engine(AlgebraId::e8, k, l).build_table()});
      }
    }
    what = std::to_string(builds.size()) + " builds, zero closure violations";
  } catch (const ClosureViolation& e) {
    pass = false;
    what = std::string("closure violation: ") + e.what();
  }
  report(2, pass, what, since(t0));
  return builds;
}

static void criterion3(const std::vector<Build>& builds) {
  auto t0 = Clock::now();
  bool pass = true;
  std::string what = "ad-homomorphism on";
  for (const auto& b : builds) {
    CheckResult c = check_jacobi(b.table);
    if (!c.pass) {
      pass = false;
      what += " FAIL:" + b.name + "@" + c.witness;
      break;
    }
    what += " " + b.name;
  }
  what += "; triple loop on dim<=52";
  for (const auto& b : builds) {
    if (b.table.dim() > 52) continue;
    CheckResult c = check_jacobi_triples(b.table);
    if (!c.pass) {
      pass = false;
      what += " FAIL:" + b.name;
    }
  }
  report(3, pass, what, since(t0));
}

// ---------------------------------------------------------------------------
// Criterion 4: the paper identity suite. Each item is checked exactly; the
// heavy per-pair agreements run over every pair.
static void criterion4() {
  auto t0 = Clock::now();
  bool pass = true;
  std::string what;
  auto item = [&](const char* name, bool ok) {
    what += std::string(" ") + name + (ok ? "=ok" : "=FAIL");
    pass = pass && ok;
  };

  {  // ij = k and (ij)l = -i(jl)
    const auto& t = MultiplicationTable::get(AK::compact);
    bool ok = t.product(1, 2) == SignedUnit{3, 1};
    SignedUnit lhs = t.product(t.product(1, 2).unit, 4);
    SignedUnit rhs = t.product(1, t.product(2, 4).unit);
    ok = ok && lhs.unit == rhs.unit && lhs.sign == -rhs.sign;
    item("units", ok);
  }
  {  // L-to-R expansions for all 7 units (compact) and split L_I
    bool ok = true;
    const So8& so8 = So8::get(AK::compact);
    for (int p = 1; p < 8; ++p) {
      try {
        triality_expand(AK::compact, 'L', {p, -1}, 'R');
      } catch (...) {
        ok = false;
      }
    }
    auto e = triality_expand(AK::split, 'L', {1, -1}, 'R');
    const So8& s8s = So8::get(AK::split);
    std::vector<Rational> want(So8::dim);
    want[s8s.index_of({1, -1})] = Rational(-1, 2);
    want[s8s.index_of({4, 5})] = Rational(1, 2);
    want[s8s.index_of({2, 3})] = Rational(-1, 2);
    want[s8s.index_of({6, 7})] = Rational(-1, 2);
    ok = ok && e.coords == want;
    (void)so8;
    item("triality-LR", ok);
  }
  {  // five so(8) bracket rules
    bool ok = true;
    for (AK k : {AK::compact, AK::split}) {
      const So8& so8 = So8::get(k);
      const auto& t = MultiplicationTable::get(k);
      for (int p = 1; p < 8 && ok; ++p) {
        for (int q = 1; q < 8 && ok; ++q) {
          if (p == q) continue;
          int lo = std::min(p, q), hi = std::max(p, q);
          int sg = p < q ? 1 : -1;
          auto br = so8.bracket(so8.index_of({p, -1}), so8.index_of({q, -1}));
          ok = ok && br[so8.index_of({lo, hi})] == Rational(2 * sg);
          auto br2 = so8.bracket(so8.index_of({p, -1}), so8.index_of({lo, hi}));
          ok = ok && br2[so8.index_of({q, -1})] == Rational(2 * sg * t.unit_square(p));
          for (int r = 1; r < 8 && ok; ++r) {
            if (r == p || r == q) continue;
            auto br3 = so8.bracket(so8.index_of({r, -1}), so8.index_of({lo, hi}));
            for (const auto& c : br3) ok = ok && c.is_zero();
          }
        }
      }
    }
    item("so8-rules", ok);
  }
  {  // six so(9) rules and the natural representation values
    bool ok = true;
    So9Algebra so9(AK::compact);
    const Engine& eng = so9.engine();
    auto d = [&](int p, int q) { return eng.index_of({BasisLabel::Family::DK, p, q}); };
    auto bra = [&](int i, int j) { return so9.bracket(indicator(36, i), indicator(36, j)); };
    for (int p = 1; p < 8 && ok; ++p) {
      auto r = bra(0, d(p, -1));
      ok = ok && r[p] == Rational(-2);  // [X_1, D_p] = -2 X_p
      r = bra(p, d(p, -1));
      ok = ok && r[0] == Rational(2);  // [X_p, D_p] = -2p^2 X_1 (compact)
      for (int q = p + 1; q < 8 && ok; ++q) {
        r = bra(p, d(p, q));
        ok = ok && r[q] == Rational(-2);  // [X_p, D_{p,q}] = 2p^2 X_q
        r = bra(0, d(p, q));
        for (const auto& c : r) ok = ok && c.is_zero();
      }
    }
    // natural representation: U_1' -> -2 U_b, U_b -> 2 U_1', 2q and -2p
    std::vector<Rational> u1p(9);
    u1p[0] = 1;
    auto nat = so9.natural_action(indicator(36, 2), u1p);  // X_j
    ok = ok && nat[1 + 2] == Rational(-2);
    std::vector<Rational> uj(9);
    uj[1 + 2] = 1;
    nat = so9.natural_action(indicator(36, 2), uj);
    ok = ok && nat[0] == Rational(2);
    std::vector<Rational> ui(9);
    ui[1 + 1] = 1;
    nat = so9.natural_action(indicator(36, d(1, 2)), ui);
    ok = ok && nat[1 + 2] == Rational(2);
    std::vector<Rational> uq(9);
    uq[1 + 2] = 1;
    nat = so9.natural_action(indicator(36, d(1, 2)), uq);
    ok = ok && nat[1 + 1] == Rational(-2);
    item("so9-rules", ok);
  }
  {  // symbolic vs action brackets on all pairs, so9 both kinds
    bool ok = true;
    for (AK k : {AK::compact, AK::split}) {
      So9Algebra so9(k);
      for (int i = 0; i < 36 && ok; ++i) {
        for (int j = i + 1; j < 36 && ok; ++j) {
          ok = so9.bracket(indicator(36, i), indicator(36, j)) ==
               so9.bracket_via_action(indicator(36, i), indicator(36, j));
        }
      }
    }
    item("so9-agreement", ok);
  }
  {  // symbolic vs action brackets on all pairs, so16 all kind pairs
    bool ok = true;
    for (auto [k, l] : {std::pair{AK::compact, AK::compact},
                        std::pair{AK::split, AK::split},
                        std::pair{AK::compact, AK::split},
                        std::pair{AK::split, AK::compact}}) {
      So16Algebra s(k, l);
      std::vector<SparseRatMatrix> spin;
      std::vector<std::vector<Rational>> flat;
      for (int b = 0; b < 120; ++b) {
        RatMatrix m = s.spin_action(indicator(120, b));
        spin.push_back(SparseRatMatrix::from_dense(m));
        flat.push_back(m.flatten());
      }
      SpanSolver span(flat);
      for (int i = 0; i < 120 && ok; ++i) {
        for (int j = i + 1; j < 120 && ok; ++j) {
          SparseRatMatrix comm = spin[i].commutator_with(spin[j]);
          SparseVec v;
          for (int r = 0; r < 128; ++r) {
            for (const auto& [c, val] : comm.row(r).nz) v.nz.emplace_back(r * 128 + c, val);
          }
          auto coords = span.solve_sparse(v);
          ok = coords.has_value() &&
               *coords == s.bracket(indicator(120, i), indicator(120, j));
        }
      }
    }
    item("so16-agreement", ok);
  }
  {  // f4 triality relations, the Y/Z lemma, and the section-5 identities
    bool ok = true;
    F4Algebra f4(AK::compact);
    const Engine& eng = f4.engine();
    const So8& so8 = So8::get(AK::compact);
    const TrialityMaps& tm = triality_maps(AK::compact);
    const Rational h(1, 2), mh(-1, 2);
    auto colv = [&](const RatMatrix& m, int c) {
      std::vector<Rational> v(So8::dim);
      for (int r = 0; r < So8::dim; ++r) v[r] = m.at(r, c);
      return v;
    };
    {
      std::vector<Rational> want(So8::dim);
      want[so8.index_of({4, -1})] = mh;
      want[so8.index_of({1, 5})] = mh;
      want[so8.index_of({2, 6})] = mh;
      want[so8.index_of({3, 7})] = mh;
      ok = ok && colv(tm.e_to_d, so8.index_of({4, -1})) == want;
      want[so8.index_of({1, 5})] = h;
      want[so8.index_of({2, 6})] = h;
      want[so8.index_of({3, 7})] = h;
      ok = ok && colv(tm.f_to_d, so8.index_of({4, -1})) == want;
    }
    // [Y_b, Z_c] = -X_{conj(bc)} on all 64 pairs
    for (int b = 0; b < 8 && ok; ++b) {
      for (int c = 0; c < 8 && ok; ++c) {
        auto r = f4.bracket(indicator(52, 8 + b), indicator(52, 16 + c));
        Octonion w = conjugate(multiply(Octonion::unit(AK::compact, b),
                                        Octonion::unit(AK::compact, c)));
        std::vector<Rational> want(52);
        for (int u = 0; u < 8; ++u) want[u] = -w[u];
        ok = r == want;
      }
    }
    // [E_l, X_i] = -X_{il}
    auto el = eng.ef_alias_coords('E', 0, so8.index_of({4, -1}));
    auto r = f4.bracket(el, indicator(52, 1));
    ok = ok && r[5] == Rational(-1);
    // [E_l, D_i] = D_{i,l} + E_{i,l} - F_{i,l}
    auto lhs = f4.bracket(el, indicator(52, eng.index_of({BasisLabel::Family::DK, 1, -1})));
    std::vector<Rational> rhs(52);
    rhs[eng.index_of({BasisLabel::Family::DK, 1, 4})] += 1;
    auto eil = eng.ef_alias_coords('E', 0, so8.index_of({1, 4}));
    auto fil = eng.ef_alias_coords('F', 0, so8.index_of({1, 4}));
    for (int t = 0; t < 52; ++t) rhs[t] += eil[t] - fil[t];
    ok = ok && lhs == rhs;
    // E_{p,q} - E_{pq} = F_{p,q} + F_{pq}
    const auto& mt = MultiplicationTable::get(AK::compact);
    for (int p = 1; p < 8 && ok; ++p) {
      for (int q = p + 1; q < 8 && ok; ++q) {
        SignedUnit pq = mt.product(p, q);
        auto epq = eng.ef_alias_coords('E', 0, so8.index_of({p, q}));
        auto es = eng.ef_alias_coords('E', 0, so8.index_of({pq.unit, -1}));
        auto fpq = eng.ef_alias_coords('F', 0, so8.index_of({p, q}));
        auto fs = eng.ef_alias_coords('F', 0, so8.index_of({pq.unit, -1}));
        for (int t = 0; t < 52 && ok; ++t) {
          ok = epq[t] - Rational(pq.sign) * es[t] == fpq[t] + Rational(pq.sign) * fs[t];
        }
      }
    }
    // f4 symbolic vs Albert-action brackets on all pairs
    for (int i = 0; i < 52 && ok; ++i) {
      for (int j = i + 1; j < 52 && ok; ++j) {
        ok = f4.bracket(indicator(52, i), indicator(52, j)) ==
             f4.bracket_via_action(indicator(52, i), indicator(52, j));
      }
    }
    item("f4-identities", ok);
  }
  {  // section-6 lemma on all 64 x 64 subscript pairs
    bool ok = true;
    E8Algebra e8(AK::compact, AK::compact);
    StructureConstants tab = e8.table();
    const Engine& eng = e8.engine();
    const auto& t = MultiplicationTable::get(AK::compact);
    using F = BasisLabel::Family;
    for (int a = 0; a < 8 && ok; ++a) {
      for (int A = 0; A < 8 && ok; ++A) {
        for (int b = 0; b < 8 && ok; ++b) {
          for (int B = 0; B < 8 && ok; ++B) {
            SignedUnit ab = t.product(a, b), AB = t.product(A, B);
            int cs = (ab.unit == 0 ? 1 : -1) * (AB.unit == 0 ? 1 : -1);
            auto got = tab.bracket_basis(eng.index_of({F::X, a, A}), eng.index_of({F::Y, b, B}));
            ok = got.size() == 1 && got[0].first == eng.index_of({F::Z, ab.unit, AB.unit}) &&
                 got[0].second == Rational(-ab.sign * AB.sign * cs);
          }
        }
      }
    }
    item("e8-lemma", ok);
  }
  report(4, pass, what, since(t0));
}

// ---------------------------------------------------------------------------
// Criterion 5: cross-module oracles inside e8.
static void criterion5() {
  auto t0 = Clock::now();
  bool pass = true;
  std::string what;
  for (auto [k, l] : {std::pair{AK::compact, AK::compact},
                      std::pair{AK::split, AK::split},
                      std::pair{AK::compact, AK::split},
                      std::pair{AK::split, AK::compact}}) {
    E8Algebra e8(k, l);
    StructureConstants tab = e8.table();
    StructureConstants f4k = Engine(AlgebraId::f4, k, std::nullopt).build_table();
    StructureConstants f4l = Engine(AlgebraId::f4, l, std::nullopt).build_table();
    StructureConstants s16 = Engine(AlgebraId::so16, k, l).build_table();
    bool ok = verify_embedding(tab, e8.engine(), f4k, "f4-K").ok;
    ok = ok && verify_embedding(tab, e8.engine(), f4l, "f4-L").ok;
    for (const char* w : {"so16-X", "so16-Y", "so16-Z"}) {
      ok = ok && verify_embedding(tab, e8.engine(), s16, w).ok;
    }
    auto vx = embedding_vectors(e8.engine(), "so16-X");
    auto vy = embedding_vectors(e8.engine(), "so16-Y");
    auto vz = embedding_vectors(e8.engine(), "so16-Z");
    ok = ok && intersection_dimension(vx, vy) == 56 && intersection_dimension(vy, vz) == 56 &&
         intersection_dimension(vx, vz) == 56;
    what += std::string(" ") + kind_name(k) + "/" + kind_name(l) + (ok ? "=ok" : "=FAIL");
    pass = pass && ok;
  }
  report(5, pass, what, since(t0));
}

// ---------------------------------------------------------------------------
// Criterion 6: exact Killing inertias of every form.
static void criterion6(const std::vector<Build>& builds) {
  auto t0 = Clock::now();
  struct Want {
    const char* name;
    Inertia in;
  };
  const std::vector<Want> wants = {
      {"so9/compact", {0, 36, 0}},      {"so9/split", {20, 16, 0}},
      {"so16/compact/compact", {0, 120, 0}}, {"so16/split/split", {64, 56, 0}},
      {"so16/compact/split", {48, 72, 0}},   {"so16/split/compact", {48, 72, 0}},
      {"f4/compact", {0, 52, 0}},       {"f4/split", {28, 24, 0}},
      {"e8/compact/compact", {0, 248, 0}},   {"e8/split/split", {128, 120, 0}},
      {"e8/compact/split", {112, 136, 0}},   {"e8/split/compact", {112, 136, 0}},
  };
  bool pass = true;
  std::string what;
  for (const auto& w : wants) {
    const Build* b = nullptr;
    for (const auto& cand : builds) {
      if (cand.name == w.name) b = &cand;
    }
    if (!b) {
      pass = false;
      what += std::string(" missing:") + w.name;
      continue;
    }
    KillingResult kr = killing(b->table);
    bool ok = kr.in == w.in && kr.in.n_zero == 0;
    what += std::string(" ") + w.name + (ok ? "=ok" : "=FAIL");
    pass = pass && ok;
  }
  report(6, pass, what, since(t0));
}

// ---------------------------------------------------------------------------
// Criterion 7: all 52 basis actions derive the Jordan product, all pairs.
static void criterion7() {
  auto t0 = Clock::now();
  bool pass = true;
  for (AK k : {AK::compact, AK::split}) {
    F4Algebra f4(k);
    std::vector<AlbertElement> basis;
    for (int b = 0; b < 27; ++b) {
      AlbertElement h(k);
      h[b] = 1;
      basis.push_back(h);
    }
    // Precompute the Jordan products of all basis pairs.
    std::vector<std::vector<AlbertElement>> jp(27, std::vector<AlbertElement>(27, AlbertElement(k)));
    for (int i = 0; i < 27; ++i) {
      for (int j = 0; j < 27; ++j) jp[i][j] = jordan_product(basis[i], basis[j]);
    }
    for (int g = 0; g < 52 && pass; ++g) {
      std::vector<Rational> e(52);
      e[g] = 1;
      ActionMat3 act = f4.realize_action(e);
      std::vector<AlbertElement> img;
      for (int b = 0; b < 27; ++b) img.push_back(albert_apply(act, basis[b]));
      for (int i = 0; i < 27 && pass; ++i) {
        for (int j = 0; j < 27 && pass; ++j) {
          AlbertElement lhs = albert_apply(act, jp[i][j]);
          AlbertElement rhs = jordan_product(img[i], basis[j]) + jordan_product(basis[i], img[j]);
          pass = lhs == rhs;
        }
      }
    }
  }
  report(7, pass, "52 x 27 x 27 derivation sweep, both kinds", since(t0));
}

// ---------------------------------------------------------------------------
// Criterion 8: builds are byte-identical across thread counts.
static void criterion8() {
  auto t0 = Clock::now();
  auto build_with = [&](const char* threads) {
    setenv("OCTLIE_THREADS", threads, 1);
    std::string so9 = table_to_json(Engine(AlgebraId::so9, AK::compact, std::nullopt).build_table());
    std::string e8 = table_to_json(Engine(AlgebraId::e8, AK::compact, AK::compact).build_table());
    return so9 + e8;
  };
  std::string one = build_with("1");
  std::string four = build_with("4");
  unsetenv("OCTLIE_THREADS");
  report(8, one == four, "so9 and e8 exports identical for 1 and 4 threads", since(t0));
}

int main() {
  auto t0 = Clock::now();
  criterion1();
  std::vector<Build> builds = criterion2_builds();
  criterion3(builds);
  criterion4();
  criterion5();
  criterion6(builds);
  criterion7();
  criterion8();
  std::cout << (g_failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT") << " (total "
            << since(t0) << "s)" << std::endl;
  return g_failures == 0 ? 0 : 1;
}
