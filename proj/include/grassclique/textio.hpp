#pragma once

#include <string>

#include "grassclique/matfq.hpp"

namespace grassclique {

/// Parses the matrix text format: rows separated by ';' or newline, entries
/// whitespace-separated element codes. Rejects ragged rows, codes >= q and
/// empty input.
MatFq parse_matrix(const std::string& text, FieldPtr field);

/// Inverse of parse_matrix: "1 0 1; 0 1 1".
std::string format_matrix(const MatFq& m);

inline std::string format_subspace(const Subspace& s) { return format_matrix(s.basis()); }

std::string format_vector(std::span<const std::uint8_t> v);

}  // namespace grassclique
