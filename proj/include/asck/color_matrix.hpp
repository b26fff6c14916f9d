#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "asck/error.hpp"

namespace asck {

/**
 * Dense n x n matrix of color ids. Ids are contiguous: every id in 0..r-1
 * occurs at least once. This is the unvalidated input form of a scheme.
 */
class ColorMatrix {
 public:
  /// Throws Error(not_square) on a size mismatch and
  /// Error(non_contiguous_colors) when some id in 0..max is missing.
  ColorMatrix(std::size_t n, std::vector<Color> entries);

  std::size_t size() const noexcept { return n_; }
  std::size_t rank() const noexcept { return r_; }

  Color operator()(Point u, Point v) const noexcept {
    return entries_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::span<const Color> row(Point u) const noexcept {
    return {entries_.data() + static_cast<std::size_t>(u) * n_, n_};
  }
  const std::vector<Color>& entries() const noexcept { return entries_; }

  bool operator==(const ColorMatrix&) const = default;

 private:
  std::size_t n_;
  std::size_t r_;
  std::vector<Color> entries_;
};

struct NormalizedMatrix {
  ColorMatrix matrix;
  /// original_ids[c] is the input id that was renamed to c.
  std::vector<std::int64_t> original_ids;
};

/// Order-preserving remap of arbitrary ids onto 0..r-1.
NormalizedMatrix normalize_colors(std::size_t n, std::span<const std::int64_t> raw);

/// Recolors with the canonical order: colors containing a diagonal cell
/// first, then by the row-major position of their first cell.
ColorMatrix canonical_recolor(std::size_t n, std::span<const std::uint64_t> raw);
ColorMatrix canonical_recolor(const ColorMatrix& m);

/// Same partition of cells (ids may differ).
bool same_partition(const ColorMatrix& a, const ColorMatrix& b);

/// FNV-1a over n and the entries.
std::uint64_t matrix_hash(const ColorMatrix& m);

}  // namespace asck
