#include "octlie/table_io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

#include <nlohmann/json.hpp>

namespace octlie {

namespace {

using nlohmann::json;

void append_term(std::string& out, int k, const Rational& c) {
  if (!c.fits_int64()) throw std::logic_error("table_to_json: coefficient overflow");
  const std::int64_t num = c.num_int64();
  const std::int64_t den = c.den_int64();
  if (den != 1 && den != 2) {
    throw std::logic_error("table_to_json: coefficient " + c.to_string() + " outside (1/2)Z");
  }
  out += "[" + std::to_string(k) + "," + std::to_string(num) + "," + std::to_string(den) + "]";
}

// The canonical serialization without the checksum field; the final byte
// of the returned string is the newline.
std::string serialize_body(const StructureConstants& t, const std::string& sha) {
  std::string out = "{\"format_version\":1";
  out += ",\"algebra\":\"" + t.algebra() + "\"";
  out += ",\"k_kind\":\"" + std::string(kind_name(t.k_kind())) + "\"";
  out += ",\"l_kind\":\"" + std::string(t.l_kind() ? kind_name(*t.l_kind()) : "none") + "\"";
  out += ",\"dim\":" + std::to_string(t.dim());
  out += ",\"basis\":[";
  for (int i = 0; i < t.dim(); ++i) {
    if (i) out += ",";
    out += "\"" + t.name(i) + "\"";
  }
  out += "],\"brackets\":[";
  bool first = true;
  for (int i = 0; i < t.dim(); ++i) {
    for (int j = i + 1; j < t.dim(); ++j) {
      const BracketEntry& e = t.entry_upper(i, j);
      if (e.empty()) continue;
      if (!first) out += ",";
      first = false;
      out += "[" + std::to_string(i) + "," + std::to_string(j) + ",[";
      for (std::size_t s = 0; s < e.size(); ++s) {
        if (s) out += ",";
        append_term(out, e[s].first, e[s].second);
      }
      out += "]]";
    }
  }
  out += "]";
  if (!sha.empty()) out += ",\"sha256\":\"" + sha + "\"";
  out += "}\n";
  return out;
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx, bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx, digest, &len) != 1) {
    EVP_MD_CTX_free(ctx);
    throw std::runtime_error("sha256 failed");
  }
  EVP_MD_CTX_free(ctx);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string table_to_json(const StructureConstants& t) {
  std::string body = serialize_body(t, "");
  return serialize_body(t, sha256_hex(body));
}

std::string table_to_csv(const StructureConstants& t) {
  std::string out = "i,j,k,num,den\n";
  for (int i = 0; i < t.dim(); ++i) {
    for (int j = i + 1; j < t.dim(); ++j) {
      for (const auto& [k, c] : t.entry_upper(i, j)) {
        out += std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," +
               std::to_string(c.num_int64()) + "," + std::to_string(c.den_int64()) + "\n";
      }
    }
  }
  return out;
}

StructureConstants table_from_json(const std::string& text) {
  json doc = json::parse(text);
  if (!doc.is_object() || doc.value("format_version", 0) != 1) {
    throw std::invalid_argument("table file: unsupported format");
  }
  const std::string algebra = doc.at("algebra").get<std::string>();
  const AlgebraKind kk = kind_from_name(doc.at("k_kind").get<std::string>());
  const std::string lks = doc.at("l_kind").get<std::string>();
  std::optional<AlgebraKind> lk;
  if (lks != "none") lk = kind_from_name(lks);

  const auto& basis = doc.at("basis");
  const int dim = doc.at("dim").get<int>();
  if (!basis.is_array() || static_cast<int>(basis.size()) != dim) {
    throw std::invalid_argument("table file: dim does not match basis size");
  }
  std::vector<BasisLabel> labels;
  labels.reserve(dim);
  for (const auto& s : basis) labels.push_back(label_parse(s.get<std::string>(), lk.has_value()));

  StructureConstants t(algebra, kk, lk, std::move(labels));
  for (const auto& row : doc.at("brackets")) {
    if (!row.is_array() || row.size() != 3) throw std::invalid_argument("table file: bad bracket row");
    const int i = row[0].get<int>();
    const int j = row[1].get<int>();
    if (i < 0 || j <= i || j >= dim) throw std::invalid_argument("table file: bad pair indices");
    BracketEntry e;
    for (const auto& term : row[2]) {
      if (!term.is_array() || term.size() != 3) {
        throw std::invalid_argument("table file: bad bracket term");
      }
      const int k = term[0].get<int>();
      const std::int64_t num = term[1].get<std::int64_t>();
      const std::int64_t den = term[2].get<std::int64_t>();
      if (k < 0 || k >= dim || num == 0 || (den != 1 && den != 2) ||
          (den == 2 && num % 2 == 0)) {
        throw std::invalid_argument("table file: bad coefficient");
      }
      e.emplace_back(k, Rational(num, den));
    }
    t.set_entry(i, j, std::move(e));
  }

  if (doc.contains("sha256")) {
    const std::string want = doc.at("sha256").get<std::string>();
    const std::string got = sha256_hex(serialize_body(t, ""));
    if (want != got) throw std::invalid_argument("table file: checksum mismatch");
  }
  return t;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace octlie
