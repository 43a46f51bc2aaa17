#include <doctest.h>

#include "octlie/engine.hpp"
#include "octlie/f4.hpp"
#include "octlie/so9.hpp"
#include "octlie/verify.hpp"

using namespace octlie;

namespace {

StructureConstants so9_table() {
  return Engine(AlgebraId::so9, AlgebraKind::compact, std::nullopt).build_table();
}

// Perturb one structure constant by +1.
StructureConstants tampered(StructureConstants t) {
  for (int i = 0; i < t.dim(); ++i) {
    for (int j = i + 1; j < t.dim(); ++j) {
      BracketEntry e = t.entry_upper(i, j);
      if (e.empty()) continue;
      e[0].second += 1;
      if (e[0].second.is_zero()) e[0].second += 1;
      t.set_entry(i, j, std::move(e));
      return t;
    }
  }
  return t;
}

}  // namespace

TEST_CASE("check_jacobi passes on a correct table and fails with a witness after tampering") {
  StructureConstants t = so9_table();
  CheckResult ok = check_jacobi(t);
  CHECK(ok.pass);
  CHECK(ok.witness.empty());

  StructureConstants bad = tampered(t);
  CheckResult fail = check_jacobi(bad);
  CHECK(!fail.pass);
  CHECK(!fail.witness.empty());

  CheckResult fail3 = check_jacobi_triples(bad);
  CHECK(!fail3.pass);
  CHECK(!fail3.witness.empty());
}

TEST_CASE("check_invariance detects tampering") {
  StructureConstants t = so9_table();
  RatMatrix k = t.killing_matrix();
  CHECK(check_invariance(t, k).pass);
  StructureConstants bad = tampered(t);
  CheckResult fail = check_invariance(bad, bad.killing_matrix());
  CHECK(!fail.pass);
  CHECK(!fail.witness.empty());
}

TEST_CASE("check_antisym validates the storage invariants") {
  StructureConstants t = so9_table();
  CHECK(check_antisym(t).pass);
  StructureConstants bad = t;
  BracketEntry e;
  e.emplace_back(0, Rational(1, 3));  // outside (1/2)Z
  bad.set_entry(0, 1, std::move(e));
  CHECK(!check_antisym(bad).pass);
}

TEST_CASE("rank probe finds the rank of so(9) and f4") {
  CHECK(rank_probe(so9_table(), 5, 7) == 4);
  F4Algebra f4(AlgebraKind::compact);
  CHECK(rank_probe(f4.table(), 5, 7) == 4);
}

TEST_CASE("reports are reproducible and ordered") {
  StructureConstants t = so9_table();
  VerificationReport a = run_checks(t, {"antisym", "jacobi", "killing", "invariance", "rank"},
                                    /*triples=*/true, 5, 11);
  VerificationReport b = run_checks(t, {"antisym", "jacobi", "killing", "invariance", "rank"},
                                    /*triples=*/true, 5, 11);
  CHECK(a.all_pass());
  // timings differ between runs; compare everything else
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].pass == b.checks[i].pass);
    CHECK(a.checks[i].detail == b.checks[i].detail);
    CHECK(a.checks[i].witness == b.checks[i].witness);
  }
  CHECK(a.checks.size() == 6);  // antisym, jacobi, jacobi-triples, killing, invariance, rank
}

TEST_CASE("dim minus rank parity and the killing detail line") {
  StructureConstants t = so9_table();
  VerificationReport rep = run_checks(t, {"killing", "rank"}, false, 5, 3);
  CHECK(rep.all_pass());
  bool saw_killing = false;
  for (const auto& c : rep.checks) {
    if (c.name == "killing") {
      saw_killing = true;
      CHECK(c.detail.find("inertia=(0,36,0)") != std::string::npos);
      CHECK(c.detail.find("form=so(9)") != std::string::npos);
    }
  }
  CHECK(saw_killing);
}

TEST_CASE("a failing check drives all_pass and carries a witness") {
  StructureConstants bad = tampered(so9_table());
  VerificationReport rep = run_checks(bad, {"jacobi"}, false, 0, 0);
  CHECK(!rep.all_pass());
  REQUIRE(rep.checks.size() == 1);
  CHECK(!rep.checks[0].witness.empty());
}
