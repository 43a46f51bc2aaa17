#pragma once

#include <string>

#include "octlie/structure.hpp"

namespace octlie {

// Canonical table file (format_version 1): fixed key order, no insignificant
// whitespace, newline-terminated, with a sha256 of the serialization minus
// the checksum field itself. Round-tripping parse ∘ serialize is the
// identity on the bytes.
std::string table_to_json(const StructureConstants& t);

// One row per nonzero coefficient: "i,j,k,num,den" after a header line.
std::string table_to_csv(const StructureConstants& t);

// Parses and fully validates a canonical table file: schema, label grammar,
// index ranges, reduced half-integer coefficients, checksum.
StructureConstants table_from_json(const std::string& text);

std::string sha256_hex(const std::string& bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace octlie
