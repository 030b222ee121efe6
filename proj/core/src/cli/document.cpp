#include "eidsobs/cli/document.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "eidsobs/error.hpp"

namespace eidsobs {

namespace {

std::size_t skip_space(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

// Trimmed [begin, end) of s within [from, to).
std::pair<std::size_t, std::size_t> trim(std::string_view s, std::size_t from, std::size_t to) {
  while (from < to && std::isspace(static_cast<unsigned char>(s[from]))) ++from;
  while (to > from && std::isspace(static_cast<unsigned char>(s[to - 1]))) --to;
  return {from, to};
}

std::vector<std::pair<std::string, std::size_t>> split_list(std::string_view s, std::size_t base, char sep) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      auto [a, b] = trim(s, start, i);
      out.emplace_back(std::string(s.substr(a, b - a)), base + a);
      start = i + 1;
    }
  }
  return out;
}

std::int64_t parse_int(const std::string& text, std::size_t offset) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw SyntaxError(offset, "expected an integer, got '" + text + "'");
  }
  if (used != text.size()) throw SyntaxError(offset + used, "trailing characters after integer");
  return v;
}

}  // namespace

const Field* FieldBlock::find(std::string_view key) const {
  for (const auto& f : fields)
    if (f.key == key) return &f;
  return nullptr;
}

std::vector<const Field*> FieldBlock::all(std::string_view key) const {
  std::vector<const Field*> out;
  for (const auto& f : fields)
    if (f.key == key) out.push_back(&f);
  return out;
}

std::vector<FieldBlock> parse_blocks(std::string_view text) {
  std::vector<FieldBlock> blocks(1);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::size_t end = text.find('#', pos);
    if (end == std::string_view::npos || end > eol) end = eol;
    auto [a, b] = trim(text, pos, end);
    if (a < b) {
      std::string_view line = text.substr(a, b - a);
      if (line == "[entry]") {
        if (!blocks.back().fields.empty()) blocks.emplace_back();
        blocks.back().offset = a;
      } else {
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw SyntaxError(a, "expected 'key = value'");
        auto [ka, kb] = trim(text, a, a + eq);
        auto [va, vb] = trim(text, a + eq + 1, b);
        if (ka == kb) throw SyntaxError(a, "empty key");
        blocks.back().fields.push_back(
            {std::string(text.substr(ka, kb - ka)), std::string(text.substr(va, vb - va)), va});
      }
    }
    pos = eol + 1;
  }
  if (blocks.size() > 1 && blocks.front().fields.empty()) blocks.erase(blocks.begin());
  return blocks;
}

MatrixText parse_matrix_text(std::string_view text, std::size_t base) {
  std::size_t a = skip_space(text, 0);
  if (a >= text.size() || text[a] != '[') throw SyntaxError(base + a, "matrix must start with '['");
  std::size_t close = text.rfind(']');
  if (close == std::string_view::npos || close < a) throw SyntaxError(base + text.size(), "missing ']'");
  if (skip_space(text, close + 1) != text.size()) throw SyntaxError(base + close + 1, "text after ']'");
  MatrixText m;
  std::string_view body = text.substr(a + 1, close - a - 1);
  for (auto& [row, row_off] : split_list(body, base + a + 1, ';')) {
    std::vector<std::string> entries;
    std::vector<std::size_t> offsets;
    std::string_view rv = row;
    for (auto& [e, off] : split_list(rv, row_off, ',')) {
      if (e.empty()) throw SyntaxError(off, "empty matrix entry");
      entries.push_back(e);
      offsets.push_back(off);
    }
    if (!m.rows.empty() && entries.size() != m.rows.front().size())
      throw SyntaxError(row_off, "matrix rows differ in length");
    m.rows.push_back(std::move(entries));
    m.offsets.push_back(std::move(offsets));
  }
  return m;
}

std::pair<InvariantName, std::string> supplied_key(std::string_view key) {
  if (key == "chi_tilde_slice") return {InvariantName::ChiTilde, "slice"};
  if (key == "mu_sigma_slice") return {InvariantName::Mu, "sigma_slice"};
  if (key == "nu") return {InvariantName::Nu, "X"};
  if (key == "md") return {InvariantName::Md, "X"};
  throw Error(ErrorCode::InvalidArgument, "unknown supplied invariant '" + std::string(key) + "'");
}

Document parse_document(std::string_view text) {
  auto blocks = parse_blocks(text);
  if (blocks.size() != 1) throw SyntaxError(blocks[1].offset, "a document holds a single germ");
  const FieldBlock& b = blocks.front();
  Document doc;
  bool have_vars = false, have_t = false, have_matrix = false;
  for (const auto& f : b.fields) {
    if (f.key == "vars") {
      for (auto& [name, off] : split_list(f.value, f.offset, ',')) {
        if (!is_valid_identifier(name)) throw SyntaxError(off, "invalid variable name '" + name + "'");
        doc.vars.push_back(name);
      }
      have_vars = true;
    } else if (f.key == "t") {
      auto v = parse_int(f.value, f.offset);
      if (v < 1) throw SyntaxError(f.offset, "t must be positive");
      doc.t = static_cast<std::size_t>(v);
      have_t = true;
    } else if (f.key == "matrix") {
      doc.matrix = parse_matrix_text(f.value, f.offset);
      have_matrix = true;
    } else if (f.key == "params") {
      for (auto& [assign, off] : split_list(f.value, f.offset, ',')) {
        std::size_t eq = assign.find('=');
        if (eq == std::string::npos) throw SyntaxError(off, "expected name=value");
        auto [na, nb] = trim(assign, 0, eq);
        auto [va, vb] = trim(assign, eq + 1, assign.size());
        doc.params[assign.substr(na, nb - na)] = parse_int(assign.substr(va, vb - va), off + va);
      }
    } else if (f.key == "projection") {
      doc.projection = f.value;
      doc.projection_offset = f.offset;
    } else if (f.key.rfind("supplied.", 0) == 0) {
      std::pair<InvariantName, std::string> target;
      try {
        target = supplied_key(std::string_view(f.key).substr(9));
      } catch (const Error& e) {
        throw SyntaxError(f.offset, e.what());
      }
      doc.supplied.add(target.first, target.second, parse_int(f.value, f.offset));
    } else {
      throw SyntaxError(f.offset, "unknown field '" + f.key + "'");
    }
  }
  if (!have_vars) throw SyntaxError(text.size(), "missing field 'vars'");
  if (!have_t) throw SyntaxError(text.size(), "missing field 't'");
  if (!have_matrix) throw SyntaxError(text.size(), "missing field 'matrix'");
  return doc;
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

EidsDescriptor build_descriptor(const Document& doc) {
  VarContext ctx(doc.vars);
  std::vector<std::vector<Polynomial>> rows;
  for (std::size_t r = 0; r < doc.matrix.rows.size(); ++r) {
    rows.emplace_back();
    for (std::size_t c = 0; c < doc.matrix.rows[r].size(); ++c) {
      try {
        rows.back().push_back(parse_poly(doc.matrix.rows[r][c], ctx, doc.params));
      } catch (const SyntaxError& e) {
        std::string msg = e.what();
        msg = msg.substr(msg.find(": ") + 2);
        throw SyntaxError(doc.matrix.offsets[r][c] + e.position(), msg);
      }
    }
  }
  return EidsDescriptor(PolyMatrix(ctx, std::move(rows)), doc.t);
}

std::optional<LinearForm> build_projection(const Document& doc) {
  if (!doc.projection) return std::nullopt;
  VarContext ctx(doc.vars);
  try {
    return linear_form_from(parse_poly(*doc.projection, ctx, doc.params));
  } catch (const SyntaxError& e) {
    std::string msg = e.what();
    msg = msg.substr(msg.find(": ") + 2);
    throw SyntaxError(doc.projection_offset + e.position(), msg);
  }
}

}  // namespace eidsobs
