#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "asck/color_matrix.hpp"
#include "asck/digraph.hpp"
#include "asck/error.hpp"
#include "asck/scheme.hpp"

namespace asck {

/// Format error with the 1-based line it was detected on (0 if not tied to
/// a line).
class FormatError : public Error {
 public:
  FormatError(std::string source, std::size_t line, const std::string& message);

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 protected:
  FormatError(Errc code, std::string source, std::size_t line, const std::string& message);

 private:
  std::string source_;
  std::size_t line_;
};

/// The matrix parsed fine but its ids are not 0..r-1. normalized() holds
/// the order-preserving remap, so callers may proceed with it.
class NonContiguousColors : public FormatError {
 public:
  NonContiguousColors(std::string source, NormalizedMatrix normalized);
  const NormalizedMatrix& normalized() const noexcept { return normalized_; }

 private:
  NormalizedMatrix normalized_;
};

/**
 * .ccm text format:
 *   ccm <n> <r>
 *   n lines of n space-separated color ids
 * Lines starting with '#' are comments; blank lines are skipped.
 */
ColorMatrix read_ccm(std::istream& in, const std::string& source = "<input>");
void write_ccm(std::ostream& out, const ColorMatrix& m);
std::string to_ccm(const ColorMatrix& m);

/**
 * .dg text format:
 *   dg <n> <m>
 *   m lines "u v" (0-based arcs); loops allowed, duplicates rejected.
 */
Digraph read_dg(std::istream& in, const std::string& source = "<input>");
void write_dg(std::ostream& out, const Digraph& g);

}  // namespace asck
