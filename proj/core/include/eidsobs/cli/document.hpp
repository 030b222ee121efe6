#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eidsobs/eids/descriptor.hpp"
#include "eidsobs/obstruction/obstruction.hpp"
#include "eidsobs/poly/parse.hpp"

namespace eidsobs {

/// One `key = value` line with the byte offset of its value.
struct Field {
  std::string key;
  std::string value;
  std::size_t offset = 0;
};

/// Fields between two `[entry]` headers (or the whole text when there are
/// none). `#` starts a comment; blank lines are ignored.
struct FieldBlock {
  std::vector<Field> fields;
  std::size_t offset = 0;

  const Field* find(std::string_view key) const;
  std::vector<const Field*> all(std::string_view key) const;
};

/// Splits text into blocks. Throws SyntaxError on a line without `=`.
std::vector<FieldBlock> parse_blocks(std::string_view text);

/// Matrix entries as text, with their source offsets.
struct MatrixText {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::vector<std::size_t>> offsets;
};

/// `[a, b, c; d, e, f]`; rows separated by `;`, entries by `,`.
MatrixText parse_matrix_text(std::string_view text, std::size_t base_offset);

/// An input document: a determinantal germ plus optional data.
///
///   vars = x, y, z, w
///   t = 2
///   matrix = [x, y, z; y, z, w]
///   params = k=2             (optional template values)
///   projection = w           (optional linear form for m_d)
///   supplied.chi_tilde_slice = 1   (optional supplied invariants)
struct Document {
  std::vector<std::string> vars;
  std::size_t t = 0;
  MatrixText matrix;
  ParamMap params;
  std::optional<std::string> projection;
  std::size_t projection_offset = 0;
  SuppliedInputs supplied;
};

/// Supplied keys: chi_tilde_slice, mu_sigma_slice, nu, md.
Document parse_document(std::string_view text);
/// Reads `path`; Error(Io) when unreadable.
Document load_document(const std::string& path);

/// Parses every entry; SyntaxError positions refer to the document text.
EidsDescriptor build_descriptor(const Document& doc);
/// The projection as a linear form in the document's variables.
std::optional<LinearForm> build_projection(const Document& doc);

/// Maps a supplied key (without the `supplied.` prefix) to its invariant.
std::pair<InvariantName, std::string> supplied_key(std::string_view key);

}  // namespace eidsobs
