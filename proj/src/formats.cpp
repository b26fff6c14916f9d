#include "asck/formats.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace asck {
namespace {

std::string located(const std::string& source, std::size_t line, const std::string& message) {
  return source + ":" + std::to_string(line) + ": " + message;
}

// Reads the next line that is neither blank nor a comment.
bool next_line(std::istream& in, std::string& line, std::size_t& number) {
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
bool parse_int(std::string_view s, T& value) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::pair<std::size_t, std::size_t> read_header(std::istream& in, const std::string& source,
                                                std::string_view magic, std::size_t& number) {
  std::string line;
  if (!next_line(in, line, number)) throw FormatError(source, 0, "empty input");
  const auto t = tokens(line);
  std::size_t a = 0, b = 0;
  if (t.size() != 3 || t[0] != magic || !parse_int(t[1], a) || !parse_int(t[2], b))
    throw FormatError(source, number,
                      "expected header '" + std::string(magic) + " <int> <int>', got '" + line +
                          "'");
  return {a, b};
}

}  // namespace

FormatError::FormatError(std::string source, std::size_t line, const std::string& message)
    : FormatError(Errc::format_error, std::move(source), line, message) {}

FormatError::FormatError(Errc code, std::string source, std::size_t line,
                         const std::string& message)
    : Error(code, located(source, line, message)), source_(std::move(source)), line_(line) {}

NonContiguousColors::NonContiguousColors(std::string source, NormalizedMatrix normalized)
    : FormatError(Errc::non_contiguous_colors, std::move(source), 0,
                  "color ids are not contiguous from 0; " +
                      std::to_string(normalized.original_ids.size()) + " distinct ids remapped"),
      normalized_(std::move(normalized)) {}

ColorMatrix read_ccm(std::istream& in, const std::string& source) {
  std::size_t number = 0;
  const auto [n, r] = read_header(in, source, "ccm", number);
  const std::size_t header_line = number;
  if (n == 0) throw FormatError(source, number, "point count must be positive");
  std::vector<std::int64_t> raw;
  std::string line;
  for (std::size_t row = 0; row < n; ++row) {
    if (!next_line(in, line, number))
      throw FormatError(source, 0,
                        "expected " + std::to_string(n) + " rows, found " + std::to_string(row));
    const auto t = tokens(line);
    if (t.size() != n)
      throw FormatError(source, number,
                        "expected " + std::to_string(n) + " entries, found " +
                            std::to_string(t.size()));
    for (auto tok : t) {
      std::int64_t v = 0;
      if (!parse_int(tok, v) || v < 0)
        throw FormatError(source, number,
                          "'" + std::string(tok) + "' is not a non-negative integer");
      raw.push_back(v);
    }
  }
  if (next_line(in, line, number)) throw FormatError(source, number, "trailing content");
  NormalizedMatrix norm = normalize_colors(n, raw);
  if (norm.matrix.rank() != r)
    throw FormatError(source, header_line,
                      "header declares " + std::to_string(r) + " colors but the matrix has " +
                          std::to_string(norm.matrix.rank()));
  for (std::size_t i = 0; i < norm.original_ids.size(); ++i)
    if (norm.original_ids[i] != static_cast<std::int64_t>(i))
      throw NonContiguousColors(source, std::move(norm));
  return std::move(norm.matrix);
}

void write_ccm(std::ostream& out, const ColorMatrix& m) { out << to_ccm(m); }

std::string to_ccm(const ColorMatrix& m) {
  std::string s = "ccm " + std::to_string(m.size()) + " " + std::to_string(m.rank()) + "\n";
  for (Point u = 0; u < m.size(); ++u) {
    for (Point v = 0; v < m.size(); ++v) {
      if (v) s += ' ';
      s += std::to_string(m(u, v));
    }
    s += '\n';
  }
  return s;
}

Digraph read_dg(std::istream& in, const std::string& source) {
  std::size_t number = 0;
  const auto [n, m] = read_header(in, source, "dg", number);
  Digraph g(n);
  std::string line;
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_line(in, line, number))
      throw FormatError(source, 0,
                        "expected " + std::to_string(m) + " arcs, found " + std::to_string(i));
    const auto t = tokens(line);
    Vertex u = 0, v = 0;
    if (t.size() != 2 || !parse_int(t[0], u) || !parse_int(t[1], v))
      throw FormatError(source, number, "expected 'u v', got '" + line + "'");
    if (u >= n || v >= n) throw FormatError(source, number, "vertex out of range");
    if (!g.add_arc(u, v))
      throw FormatError(source, number,
                        "duplicate arc " + std::to_string(u) + " " + std::to_string(v));
  }
  if (next_line(in, line, number)) throw FormatError(source, number, "trailing content");
  return g;
}

void write_dg(std::ostream& out, const Digraph& g) {
  out << "dg " << g.size() << " " << g.arc_count() << "\n";
  for (auto [u, v] : g.arcs()) out << u << " " << v << "\n";
}

}  // namespace asck
