#include "octlie/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <sstream>

#include "octlie/parallel.hpp"

namespace octlie {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

bool VerificationReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "algebra=" << algebra << " k=" << k_kind << " l=" << l_kind << "\n";
  for (const auto& c : checks) {
    os << "check=" << c.name << " status=" << (c.pass ? "pass" : "FAIL");
    if (!c.detail.empty()) os << " " << c.detail;
    if (!c.witness.empty()) os << " witness=" << c.witness;
    os << "\n";
  }
  return os.str();
}

CheckResult check_antisym(const StructureConstants& t) {
  auto t0 = Clock::now();
  CheckResult r{"antisym", true, "", "", 0};
  const int n = t.dim();
  for (int i = 0; i < n && r.pass; ++i) {
    for (int j = i + 1; j < n && r.pass; ++j) {
      int prev = -1;
      for (const auto& [k, c] : t.entry_upper(i, j)) {
        if (k <= prev || k < 0 || k >= n) {
          r.pass = false;
          r.witness = "(" + t.name(i) + "," + t.name(j) + ") bad index order";
          break;
        }
        prev = k;
        if (c.is_zero()) {
          r.pass = false;
          r.witness = "(" + t.name(i) + "," + t.name(j) + ") stored zero";
          break;
        }
        if (!c.fits_int64() || (c.den_int64() != 1 && c.den_int64() != 2)) {
          r.pass = false;
          r.witness = "(" + t.name(i) + "," + t.name(j) + ") coefficient " + c.to_string() +
                      " outside (1/2)Z";
          break;
        }
      }
    }
  }
  r.detail = "pairs=" + std::to_string(n * (n - 1) / 2);
  r.seconds = since(t0);
  return r;
}

CheckResult check_jacobi(const StructureConstants& t) {
  auto t0 = Clock::now();
  CheckResult r{"jacobi", true, "", "", 0};
  const int n = t.dim();
  std::vector<SparseRatMatrix> ads(n);
  parallel_for(n, [&](std::size_t i) { ads[i] = t.ad_basis(static_cast<int>(i)); });

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<unsigned char> bad(pairs.size(), 0);
  parallel_for(pairs.size(), [&](std::size_t p) {
    auto [i, j] = pairs[p];
    SparseRatMatrix lhs(n, n);
    for (const auto& [k, c] : t.entry_upper(i, j)) {
      for (int row = 0; row < n; ++row) {
        for (const auto& [col, v] : ads[k].row(row).nz) lhs.add(row, col, c * v);
      }
    }
    SparseRatMatrix rhs = ads[i].commutator_with(ads[j]);
    if (!(lhs == rhs)) bad[p] = 1;
  });
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (bad[p]) {
      r.pass = false;
      r.witness = "(" + t.name(pairs[p].first) + "," + t.name(pairs[p].second) + ")";
      break;
    }
  }
  r.detail = "pairs=" + std::to_string(pairs.size());
  r.seconds = since(t0);
  return r;
}

CheckResult check_jacobi_triples(const StructureConstants& t) {
  auto t0 = Clock::now();
  CheckResult r{"jacobi-triples", true, "", "", 0};
  const int n = t.dim();
  std::size_t count = 0;
  for (int i = 0; i < n && r.pass; ++i) {
    for (int j = i + 1; j < n && r.pass; ++j) {
      BracketEntry eij = t.entry_upper(i, j);
      for (int k = j + 1; k < n; ++k) {
        ++count;
        std::vector<Rational> acc(n);
        for (const auto& [m, c] : eij) {
          for (const auto& [w, v] : t.bracket_basis(m, k)) acc[w] += c * v;
        }
        for (const auto& [m, c] : t.bracket_basis(j, k)) {
          for (const auto& [w, v] : t.bracket_basis(m, i)) acc[w] += c * v;
        }
        for (const auto& [m, c] : t.bracket_basis(k, i)) {
          for (const auto& [w, v] : t.bracket_basis(m, j)) acc[w] += c * v;
        }
        bool zero = true;
        for (const auto& x : acc) zero = zero && x.is_zero();
        if (!zero) {
          r.pass = false;
          r.witness = "(" + t.name(i) + "," + t.name(j) + "," + t.name(k) + ")";
          break;
        }
      }
    }
  }
  r.detail = "triples=" + std::to_string(count);
  r.seconds = since(t0);
  return r;
}

std::string form_name(const std::string& algebra, const Inertia& in) {
  struct Entry {
    const char* algebra;
    int p, m;
    const char* name;
  };
  static const Entry names[] = {
      {"so8", 0, 28, "so(8)"},       {"so8", 16, 12, "so(4,4)"},
      {"so9", 0, 36, "so(9)"},       {"so9", 20, 16, "so(5,4)"},
      {"so16", 0, 120, "so(16)"},    {"so16", 64, 56, "so(8,8)"},
      {"so16", 48, 72, "so(12,4)"},  {"f4", 0, 52, "f4 (compact)"},
      {"f4", 28, 24, "f4(4)"},       {"e8", 0, 248, "e8 (compact)"},
      {"e8", 128, 120, "e8(8)"},     {"e8", 112, 136, "e8(-24)"},
  };
  if (in.n_zero == 0) {
    for (const auto& e : names) {
      if (algebra == e.algebra && in.n_plus == e.p && in.n_minus == e.m) return e.name;
    }
  }
  return "unrecognized(" + std::to_string(in.n_plus) + "," + std::to_string(in.n_minus) + "," +
         std::to_string(in.n_zero) + ")";
}

KillingResult killing(const StructureConstants& t) {
  KillingResult res;
  res.matrix = t.killing_matrix();
  res.in = inertia(res.matrix);
  res.nondegenerate = res.in.n_zero == 0;
  res.form_name = form_name(t.algebra(), res.in);
  return res;
}

CheckResult check_invariance(const StructureConstants& t, const RatMatrix& k) {
  auto t0 = Clock::now();
  CheckResult r{"invariance", true, "", "", 0};
  const int n = t.dim();
  std::vector<unsigned char> bad(n, 0);
  parallel_for(n, [&](std::size_t xi) {
    SparseRatMatrix ad = t.ad_basis(static_cast<int>(xi));
    // ad(x)^T K + K ad(x): row-sparse accumulation.
    RatMatrix m(n, n);
    for (int row = 0; row < n; ++row) {
      for (const auto& [col, v] : ad.row(row).nz) {
        // (ad^T K)[col][j] += v * K[row][j];  (K ad)[i][col] += K[i][row] * v
        for (int j = 0; j < n; ++j) {
          if (!k.at(row, j).is_zero()) m.at(col, j) += v * k.at(row, j);
        }
        for (int i = 0; i < n; ++i) {
          if (!k.at(i, row).is_zero()) m.at(i, col) += k.at(i, row) * v;
        }
      }
    }
    if (!m.is_zero()) bad[xi] = 1;
  });
  for (int xi = 0; xi < n; ++xi) {
    if (bad[xi]) {
      r.pass = false;
      r.witness = t.name(xi);
      break;
    }
  }
  r.detail = "basis=" + std::to_string(n);
  r.seconds = since(t0);
  return r;
}

int rank_probe(const StructureConstants& t, int samples, std::uint64_t seed) {
  const int n = t.dim();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(-9, 9);
  int best = n;
  for (int s = 0; s < samples; ++s) {
    std::vector<Rational> x(n);
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      int c = pick(rng);
      x[i] = c;
      nonzero = nonzero || c != 0;
    }
    if (!nonzero) x[0] = 1;
    RatMatrix ad = t.ad(x).to_dense();
    int kdim = kernel_dimension(ad);
    best = std::min(best, kdim);
  }
  return best;
}

VerificationReport run_checks(const StructureConstants& t, const std::vector<std::string>& names,
                              bool triples, int rank_samples, std::uint64_t seed) {
  VerificationReport rep;
  rep.algebra = t.algebra();
  rep.k_kind = kind_name(t.k_kind());
  rep.l_kind = t.l_kind() ? kind_name(*t.l_kind()) : "none";

  auto wants = [&](const std::string& s) {
    return std::find(names.begin(), names.end(), s) != names.end();
  };

  if (wants("antisym")) rep.checks.push_back(check_antisym(t));
  if (wants("jacobi")) {
    rep.checks.push_back(check_jacobi(t));
    if (triples) rep.checks.push_back(check_jacobi_triples(t));
  }
  KillingResult kr;
  bool have_killing = false;
  if (wants("killing") || wants("invariance")) {
    auto t0 = Clock::now();
    kr = killing(t);
    have_killing = true;
    if (wants("killing")) {
      CheckResult c{"killing", kr.nondegenerate, "", "", since(t0)};
      c.detail = "inertia=(" + std::to_string(kr.in.n_plus) + "," + std::to_string(kr.in.n_minus) +
                 "," + std::to_string(kr.in.n_zero) + ") form=" + kr.form_name;
      if (!kr.nondegenerate) c.witness = "degenerate Killing form: not semisimple";
      rep.checks.push_back(std::move(c));
    }
  }
  if (wants("invariance")) {
    rep.checks.push_back(check_invariance(t, kr.matrix));
    (void)have_killing;
  }
  if (wants("rank")) {
    auto t0 = Clock::now();
    int rk = rank_probe(t, rank_samples, seed);
    CheckResult c{"rank", true, "", "", since(t0)};
    c.detail = "min-kernel=" + std::to_string(rk) + " samples=" + std::to_string(rank_samples) +
               " seed=" + std::to_string(seed);
    if ((t.dim() - rk) % 2 != 0) {
      c.pass = false;
      c.witness = "dim - rank is odd";
    }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

}  // namespace octlie
