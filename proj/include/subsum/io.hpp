#pragma once

// Text formats shared by the CLI and the tests: permutation files,
// decomposition certificates (JSON), and plain file helpers.

#include <string>

#include "subsum/decompose.hpp"
#include "subsum/permutation.hpp"

namespace subsum {

// One line per vertex, "src<TAB>dst" with 1-based ids in canonical order.
// No trailing newline (the file writer adds one).
std::string format_permutation(const VertexPermutation& p);

// Inverse of format_permutation.  Every id in [1, num_vertices] must appear
// exactly once on each side; violations raise parse_error, with the 1-based
// line number when one specific line is at fault.
VertexPermutation parse_permutation(const std::string& text, std::size_t num_vertices);

// Certificate as a JSON object: verified, A (matrix text), s, B, D,
// rejection_stage (null when verified), n, p, m, irreducible (modulus
// coefficients, constant term first).  Fields unknown at the failing stage
// are null.
std::string certificate_json(const DecompositionCertificate& cert, const Field& F, std::size_t n);

std::string read_text_file(const std::string& path);

// Writes content verbatim, appending a final newline when content is
// nonempty and lacks one.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace subsum
