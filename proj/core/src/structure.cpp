#include "octlie/structure.hpp"

#include <algorithm>

#include "octlie/parallel.hpp"

namespace octlie {

namespace {

std::string units_part(int p, int q, int alphabet) {
  std::string s = unit_name(p, alphabet);
  if (q >= 0) s += "," + unit_name(q, alphabet);
  return s;
}

}  // namespace

std::string label_name(const BasisLabel& l, bool two_factors) {
  using F = BasisLabel::Family;
  switch (l.family) {
    case F::LK:
      return "L:" + units_part(l.p, l.q, 0);
    case F::DK:
      return two_factors ? "D:k:" + units_part(l.p, l.q, 0) : "D:" + units_part(l.p, l.q, 0);
    case F::DL:
      return "D:l:" + units_part(l.p, l.q, 1);
    case F::X:
    case F::Y:
    case F::Z: {
      std::string fam = l.family == F::X ? "X" : (l.family == F::Y ? "Y" : "Z");
      if (!two_factors) return fam + ":" + unit_name(l.p, 0);
      return fam + ":" + unit_name(l.p, 0) + "," + unit_name(l.q, 1);
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::pair<int, int> parse_units(const std::string& s, int alphabet) {
  auto parts = split(s, ',');
  if (parts.size() == 1) return {unit_from_name(parts[0], alphabet), -1};
  if (parts.size() == 2) {
    return {unit_from_name(parts[0], alphabet), unit_from_name(parts[1], alphabet)};
  }
  throw std::invalid_argument("bad unit list '" + s + "'");
}

}  // namespace

BasisLabel label_parse(const std::string& s, bool two_factors) {
  auto parts = split(s, ':');
  if (parts.size() < 2) throw std::invalid_argument("bad label '" + s + "'");
  const std::string& fam = parts[0];
  using F = BasisLabel::Family;
  if (fam == "L" && parts.size() == 2) {
    auto [p, q] = parse_units(parts[1], 0);
    return {F::LK, p, q};
  }
  if (fam == "D") {
    if (two_factors) {
      if (parts.size() != 3) throw std::invalid_argument("bad diagonal label '" + s + "'");
      if (parts[1] == "k") {
        auto [p, q] = parse_units(parts[2], 0);
        return {F::DK, p, q};
      }
      if (parts[1] == "l") {
        auto [p, q] = parse_units(parts[2], 1);
        return {F::DL, p, q};
      }
      throw std::invalid_argument("bad alphabet tag in '" + s + "'");
    }
    if (parts.size() != 2) throw std::invalid_argument("bad diagonal label '" + s + "'");
    auto [p, q] = parse_units(parts[1], 0);
    return {F::DK, p, q};
  }
  if (fam == "X" || fam == "Y" || fam == "Z") {
    F f = fam == "X" ? F::X : (fam == "Y" ? F::Y : F::Z);
    if (parts.size() != 2) throw std::invalid_argument("bad off-diagonal label '" + s + "'");
    auto units = split(parts[1], ',');
    if (two_factors) {
      if (units.size() != 2) throw std::invalid_argument("two units required in '" + s + "'");
      return {f, unit_from_name(units[0], 0), unit_from_name(units[1], 1)};
    }
    if (units.size() != 1) throw std::invalid_argument("one unit required in '" + s + "'");
    return {f, unit_from_name(units[0], 0), -1};
  }
  throw std::invalid_argument("bad label '" + s + "'");
}

StructureConstants::StructureConstants(std::string algebra, AlgebraKind k_kind,
                                       std::optional<AlgebraKind> l_kind,
                                       std::vector<BasisLabel> labels)
    : algebra_(std::move(algebra)),
      k_kind_(k_kind),
      l_kind_(l_kind),
      labels_(std::move(labels)),
      bk_(labels_.size() * (labels_.size() - 1) / 2) {}

int StructureConstants::index_of_name(const std::string& s) const {
  for (int i = 0; i < dim(); ++i) {
    if (name(i) == s) return i;
  }
  throw std::invalid_argument("no basis element named '" + s + "'");
}

void StructureConstants::set_entry(int i, int j, BracketEntry terms) {
  std::sort(terms.begin(), terms.end(),
            [](const BracketTerm& a, const BracketTerm& b) { return a.first < b.first; });
  bk_[tri(i, j)] = std::move(terms);
}

const BracketEntry& StructureConstants::entry_upper(int i, int j) const { return bk_[tri(i, j)]; }

BracketEntry StructureConstants::bracket_basis(int i, int j) const {
  if (i == j) return {};
  if (i < j) return bk_[tri(i, j)];
  BracketEntry e = bk_[tri(j, i)];
  for (auto& [k, c] : e) c = -c;
  return e;
}

std::vector<Rational> StructureConstants::bracket(const std::vector<Rational>& u,
                                                  const std::vector<Rational>& v) const {
  std::vector<Rational> out(dim());
  for (int i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (v[j].is_zero() || i == j) continue;
      Rational c = u[i] * v[j];
      if (i < j) {
        for (const auto& [k, w] : bk_[tri(i, j)]) out[k] += c * w;
      } else {
        for (const auto& [k, w] : bk_[tri(j, i)]) out[k] -= c * w;
      }
    }
  }
  return out;
}

SparseRatMatrix StructureConstants::ad_basis(int i) const {
  SparseRatMatrix m(dim(), dim());
  for (int j = 0; j < dim(); ++j) {
    if (j == i) continue;
    for (const auto& [k, c] : bracket_basis(i, j)) m.add(k, j, c);
  }
  return m;
}

SparseRatMatrix StructureConstants::ad(const std::vector<Rational>& x) const {
  SparseRatMatrix m(dim(), dim());
  for (int i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (j == i) continue;
      for (const auto& [k, c] : bracket_basis(i, j)) m.add(k, j, x[i] * c);
    }
  }
  return m;
}

RatMatrix StructureConstants::killing_matrix() const {
  const int n = dim();
  std::vector<SparseRatMatrix> ads(n);
  parallel_for(n, [&](std::size_t i) { ads[i] = ad_basis(static_cast<int>(i)); });

  RatMatrix k(n, n);
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = i; j < static_cast<std::size_t>(n); ++j) {
      Rational t = ads[i].trace_product(ads[j]);
      k.at(static_cast<int>(i), static_cast<int>(j)) = t;
      k.at(static_cast<int>(j), static_cast<int>(i)) = t;
    }
  });
  return k;
}

std::size_t StructureConstants::nonzero_pairs() const {
  std::size_t n = 0;
  for (const auto& e : bk_) n += e.empty() ? 0 : 1;
  return n;
}

}  // namespace octlie
