#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "asck/color_matrix.hpp"
#include "asck/error.hpp"

namespace asck {

struct Cell {
  Point row;
  Point col;
  bool operator==(const Cell&) const = default;
};

/**
 * Raised by validate(). cells holds the offending positions:
 *  - not_a_partition_of_diagonal: a diagonal and an off-diagonal cell of
 *    the same color;
 *  - not_transpose_closed: two cells of the same color whose transposes
 *    carry different colors;
 *  - inconsistent_intersection_numbers: two pairs of the same color, with
 *    index = (R, S) and counts the two differing values.
 */
class ValidationError : public Error {
 public:
  ValidationError(Errc code, const std::string& what, std::vector<Cell> cells,
                  std::optional<std::pair<Color, Color>> index = std::nullopt,
                  std::pair<std::size_t, std::size_t> counts = {0, 0})
      : Error(code, what), cells_(std::move(cells)), index_(index), counts_(counts) {}

  const std::vector<Cell>& cells() const noexcept { return cells_; }
  const std::optional<std::pair<Color, Color>>& index() const noexcept { return index_; }
  std::pair<std::size_t, std::size_t> counts() const noexcept { return counts_; }

 private:
  std::vector<Cell> cells_;
  std::optional<std::pair<Color, Color>> index_;
  std::pair<std::size_t, std::size_t> counts_;
};

class Scheme;

/// A basis relation together with the fiber pair (X, Y) that carries it.
struct RelationView {
  const Scheme* scheme;
  Color color;
  std::size_t source_fiber;
  std::size_t target_fiber;
};

/**
 * A validated coherent configuration. Immutable; every accessor is derived
 * from the color matrix at validation time. The full intersection tensor is
 * stored while rank <= kMaxStoredTensorRank and recomputed on demand above.
 */
class Scheme {
 public:
  static constexpr std::size_t kMaxStoredTensorRank = 64;

  const ColorMatrix& matrix() const noexcept { return matrix_; }
  std::size_t size() const noexcept { return matrix_.size(); }
  std::size_t rank() const noexcept { return matrix_.rank(); }
  Color operator()(Point u, Point v) const noexcept { return matrix_(u, v); }

  Color transpose(Color c) const;
  bool is_diagonal(Color c) const;
  const std::vector<Color>& diagonal_colors() const noexcept { return diagonal_colors_; }

  const std::vector<std::vector<Point>>& fibers() const noexcept { return fibers_; }
  std::size_t fiber_of(Point u) const noexcept { return fiber_of_[u]; }
  bool is_homogeneous() const noexcept { return fibers_.size() == 1; }
  /// Diagonal color of fiber f.
  Color fiber_diagonal(std::size_t f) const noexcept { return diagonal_colors_[f]; }

  RelationView relation(Color c) const;

  /// c^T_{R,S}: the number of v with (u,v) in R and (v,w) in S, (u,w) in T.
  std::size_t intersection_number(Color t, Color r, Color s) const;
  bool stores_tensor() const noexcept { return !tensor_.empty(); }
  /// Colors T with c^T_{R,S} > 0, ascending.
  std::vector<Color> product_colors(Color r, Color s) const;

  /// |R(u)| for any u in the source fiber of R.
  std::size_t degree(Color c) const;
  /// Number of cells carrying c.
  std::size_t relation_size(Color c) const;
  /// First cell of c in row-major order.
  Cell first_cell(Color c) const;

  /// Equality is equality of color matrices; everything else is derived.
  bool operator==(const Scheme& other) const { return matrix_ == other.matrix_; }

 private:
  friend Scheme validate(ColorMatrix matrix);
  explicit Scheme(ColorMatrix matrix) : matrix_(std::move(matrix)) {}

  void check_color(Color c) const;

  ColorMatrix matrix_;
  std::vector<Color> transpose_;
  std::vector<char> diagonal_;
  std::vector<Color> diagonal_colors_;
  std::vector<std::vector<Point>> fibers_;
  std::vector<std::size_t> fiber_of_;
  std::vector<std::size_t> source_fiber_;
  std::vector<std::size_t> target_fiber_;
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> degrees_;
  std::vector<Cell> first_cells_;
  std::vector<std::uint32_t> tensor_;  // [t][r][s], empty above the cap
};

/**
 * Checks the coherent-configuration axioms and builds the derived tables.
 * Intersection numbers are checked by collecting, for every ordered pair
 * (u, w), the multiset of (color(u,v), color(v,w)) over all v and comparing
 * it with the multiset of the first pair of the same color.
 */
Scheme validate(ColorMatrix matrix);

}  // namespace asck
