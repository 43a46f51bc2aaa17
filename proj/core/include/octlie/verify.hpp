#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "octlie/linalg.hpp"
#include "octlie/structure.hpp"

namespace octlie {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;   // human-readable summary (inertia, counts, ...)
  std::string witness;  // populated on failure
  double seconds = 0.0;
};

struct VerificationReport {
  std::string algebra;
  std::string k_kind;
  std::string l_kind;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::string to_text() const;  // one line per check, canonical order
};

// Structural well-formedness of the stored table: index ranges, sorted
// nonzero terms, reduced coefficients with denominator 1 or 2.
CheckResult check_antisym(const StructureConstants& t);

// ad([e_i, e_j]) = [ad e_i, ad e_j] for all i < j; exact, sparse.
CheckResult check_jacobi(const StructureConstants& t);

// The explicit triple loop [[x,y],z] + [[y,z],x] + [[z,x],y] = 0; intended
// for dimensions <= 52 as an independent cross-validation of check_jacobi.
CheckResult check_jacobi_triples(const StructureConstants& t);

struct KillingResult {
  RatMatrix matrix;
  Inertia in;
  std::string form_name;
  bool nondegenerate = false;
};

// Exact Killing matrix, its inertia, and the real-form name it pins down.
KillingResult killing(const StructureConstants& t);

std::string form_name(const std::string& algebra, const Inertia& in);

// K([x,y],z) + K(y,[x,z]) = 0, as the matrix identity ad(x)^T K + K ad(x) = 0
// over all basis x.
CheckResult check_invariance(const StructureConstants& t, const RatMatrix& killing_matrix);

// Minimum exact kernel dimension of ad(x) over `samples` pseudorandom
// integer-coordinate elements (coordinates in [-9, 9]); deterministic for a
// given seed.
int rank_probe(const StructureConstants& t, int samples, std::uint64_t seed);

// Runs the named checks ("antisym", "jacobi", "killing", "invariance",
// "rank") in canonical order. `triples` additionally runs the triple-loop
// variant after "jacobi".
VerificationReport run_checks(const StructureConstants& t, const std::vector<std::string>& names,
                              bool triples, int rank_samples, std::uint64_t seed);

}  // namespace octlie
