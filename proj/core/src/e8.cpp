#include "octlie/e8.hpp"

#include <stdexcept>

#include "octlie/linalg.hpp"

namespace octlie {

namespace {

std::vector<Rational> basis_vector(int dim, int idx) {
  std::vector<Rational> v(dim);
  v[idx] = 1;
  return v;
}

}  // namespace

std::vector<std::vector<Rational>> embedding_vectors(const Engine& e8, const std::string& which) {
  using F = BasisLabel::Family;
  std::vector<std::vector<Rational>> out;
  const int n = e8.dim();

  auto off_vec = [&](F fam, int a, int A) { return basis_vector(n, e8.index_of({fam, a, A})); };

  if (which == "f4-K" || which == "f4-L") {
    const bool on_k = which == "f4-K";
    // f4 basis order: X_a, Y_a, Z_a, then the 28 diagonal labels.
    for (F fam : {F::X, F::Y, F::Z}) {
      for (int a = 0; a < 8; ++a) out.push_back(on_k ? off_vec(fam, a, 0) : off_vec(fam, 0, a));
    }
    const So8& so8 = So8::get(on_k ? e8.k_kind() : *e8.l_kind());
    for (int t = 0; t < So8::dim; ++t) {
      const So8Label& l = so8.labels()[t];
      out.push_back(basis_vector(n, e8.index_of({on_k ? F::DK : F::DL, l.p, l.q})));
    }
    return out;
  }

  if (which == "so16-X" || which == "so16-Y" || which == "so16-Z") {
    char lang = which == "so16-X" ? 'D' : (which == "so16-Y" ? 'E' : 'F');
    F fam = which == "so16-X" ? F::X : (which == "so16-Y" ? F::Y : F::Z);
    // so16 basis order: K diagonal, L diagonal, then X_{aA}.
    for (int factor = 0; factor < 2; ++factor) {
      const So8& so8 = So8::get(factor == 0 ? e8.k_kind() : *e8.l_kind());
      for (int t = 0; t < So8::dim; ++t) {
        if (lang == 'D') {
          const So8Label& l = so8.labels()[t];
          out.push_back(basis_vector(n, e8.index_of({factor == 0 ? F::DK : F::DL, l.p, l.q})));
        } else {
          out.push_back(e8.ef_alias_coords(lang, factor, t));
        }
      }
    }
    for (int a = 0; a < 8; ++a) {
      for (int A = 0; A < 8; ++A) out.push_back(off_vec(fam, a, A));
    }
    return out;
  }

  throw std::invalid_argument("unknown embedding '" + which + "'");
}

EmbeddingReport verify_embedding(const StructureConstants& e8_table, const Engine& e8,
                                 const StructureConstants& sub_table, const std::string& which) {
  EmbeddingReport rep;
  rep.which = which;
  rep.sub_dim = sub_table.dim();

  auto vecs = embedding_vectors(e8, which);
  if (static_cast<int>(vecs.size()) != sub_table.dim()) {
    rep.first_mismatch = "basis size mismatch";
    return rep;
  }

  const int sn = sub_table.dim();
  for (int i = 0; i < sn; ++i) {
    for (int j = i + 1; j < sn; ++j) {
      std::vector<Rational> lhs = e8_table.bracket(vecs[i], vecs[j]);
      // Map the subalgebra bracket along the embedding.
      std::vector<Rational> rhs(e8.dim());
      for (const auto& [k, c] : sub_table.entry_upper(i, j)) {
        for (int t = 0; t < e8.dim(); ++t) {
          if (!vecs[k][t].is_zero()) rhs[t] += c * vecs[k][t];
        }
      }
      if (lhs != rhs) {
        rep.first_mismatch =
            "[" + sub_table.name(i) + ", " + sub_table.name(j) + "] differs after embedding";
        return rep;
      }
    }
  }
  rep.ok = true;
  return rep;
}

int intersection_dimension(const std::vector<std::vector<Rational>>& a,
                           const std::vector<std::vector<Rational>>& b) {
  std::vector<std::vector<Rational>> all = a;
  all.insert(all.end(), b.begin(), b.end());
  int ra = exact_rank(a);
  int rb = exact_rank(b);
  int ru = exact_rank(all);
  return ra + rb - ru;
}

}  // namespace octlie
