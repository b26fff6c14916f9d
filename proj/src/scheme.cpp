#include "asck/scheme.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <string>

namespace asck {
namespace {

std::string cell_str(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

// Sorted encodings color(u,v) * r + color(v,w) over all v.
void pair_profile(const ColorMatrix& m, Point u, Point w, std::vector<std::uint64_t>& out) {
  const std::size_t n = m.size();
  const std::uint64_t r = m.rank();
  out.resize(n);
  for (Point v = 0; v < n; ++v) out[v] = m(u, v) * r + m(v, w);
  std::sort(out.begin(), out.end());
}

// First (R, S) whose multiplicity differs between two sorted profiles.
std::pair<std::uint64_t, std::pair<std::size_t, std::size_t>> first_difference(
    const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    std::uint64_t key = std::numeric_limits<std::uint64_t>::max();
    if (i < a.size()) key = std::min(key, a[i]);
    if (j < b.size()) key = std::min(key, b[j]);
    std::size_t ca = 0, cb = 0;
    while (i < a.size() && a[i] == key) ++i, ++ca;
    while (j < b.size() && b[j] == key) ++j, ++cb;
    if (ca != cb) return {key, {ca, cb}};
  }
  return {0, {0, 0}};
}

}  // namespace

void Scheme::check_color(Color c) const {
  if (c >= rank())
    throw Error(Errc::invalid_color,
                "color " + std::to_string(c) + " out of range for rank " + std::to_string(rank()));
}

Color Scheme::transpose(Color c) const {
  check_color(c);
  return transpose_[c];
}

bool Scheme::is_diagonal(Color c) const {
  check_color(c);
  return diagonal_[c] != 0;
}

RelationView Scheme::relation(Color c) const {
  check_color(c);
  return {this, c, source_fiber_[c], target_fiber_[c]};
}

std::size_t Scheme::intersection_number(Color t, Color r, Color s) const {
  check_color(t);
  check_color(r);
  check_color(s);
  const std::size_t k = rank();
  if (!tensor_.empty()) return tensor_[(t * k + r) * k + s];
  const Cell cell = first_cells_[t];
  std::size_t count = 0;
  for (Point v = 0; v < size(); ++v)
    if (matrix_(cell.row, v) == r && matrix_(v, cell.col) == s) ++count;
  return count;
}

std::vector<Color> Scheme::product_colors(Color r, Color s) const {
  check_color(r);
  check_color(s);
  std::vector<Color> out;
  if (!tensor_.empty()) {
    for (Color t = 0; t < rank(); ++t)
      if (intersection_number(t, r, s) > 0) out.push_back(t);
    return out;
  }
  // Colors of the product cells u -> v -> w from one representative u of
  // the source fiber of r; every T in RS has a cell in that row.
  const Point u = first_cells_[r].row;
  std::vector<char> hit(rank(), 0);
  for (Point v = 0; v < size(); ++v) {
    if (matrix_(u, v) != r) continue;
    for (Point w = 0; w < size(); ++w)
      if (matrix_(v, w) == s) hit[matrix_(u, w)] = 1;
  }
  for (Color t = 0; t < rank(); ++t)
    if (hit[t]) out.push_back(t);
  return out;
}

std::size_t Scheme::degree(Color c) const {
  check_color(c);
  return degrees_[c];
}

std::size_t Scheme::relation_size(Color c) const {
  check_color(c);
  return sizes_[c];
}

Cell Scheme::first_cell(Color c) const {
  check_color(c);
  return first_cells_[c];
}

Scheme validate(ColorMatrix matrix) {
  const std::size_t n = matrix.size();
  const std::size_t r = matrix.rank();
  Scheme s(std::move(matrix));
  const ColorMatrix& m = s.matrix_;

  constexpr Point kUnset = std::numeric_limits<Point>::max();
  s.first_cells_.assign(r, Cell{kUnset, kUnset});
  s.sizes_.assign(r, 0);
  std::vector<Cell> diag_cell(r, Cell{kUnset, kUnset});
  std::vector<Cell> off_cell(r, Cell{kUnset, kUnset});
  for (Point u = 0; u < n; ++u)
    for (Point v = 0; v < n; ++v) {
      const Color c = m(u, v);
      if (s.first_cells_[c].row == kUnset) s.first_cells_[c] = {u, v};
      ++s.sizes_[c];
      auto& slot = (u == v) ? diag_cell[c] : off_cell[c];
      if (slot.row == kUnset) slot = {u, v};
    }
  for (Color c = 0; c < r; ++c)
    if (diag_cell[c].row != kUnset && off_cell[c].row != kUnset)
      throw ValidationError(Errc::not_a_partition_of_diagonal,
                            "color " + std::to_string(c) + " occupies diagonal cell " +
                                cell_str(diag_cell[c]) + " and off-diagonal cell " +
                                cell_str(off_cell[c]),
                            {diag_cell[c], off_cell[c]});

  s.transpose_.assign(r, kUnset);
  for (Point u = 0; u < n; ++u)
    for (Point v = 0; v < n; ++v) {
      const Color c = m(u, v);
      const Color t = m(v, u);
      if (s.transpose_[c] == kUnset) {
        s.transpose_[c] = t;
      } else if (s.transpose_[c] != t) {
        const Cell first = s.first_cells_[c];
        throw ValidationError(Errc::not_transpose_closed,
                              "cells " + cell_str(first) + " and " + cell_str({u, v}) +
                                  " share color " + std::to_string(c) +
                                  " but their transposes carry colors " +
                                  std::to_string(s.transpose_[c]) + " and " + std::to_string(t),
                              {first, Cell{u, v}});
      }
    }

  std::vector<std::vector<std::uint64_t>> reference(r);
  std::vector<std::uint64_t> profile;
  for (Point u = 0; u < n; ++u)
    for (Point w = 0; w < n; ++w) {
      const Color t = m(u, w);
      if (reference[t].empty()) {
        pair_profile(m, u, w, reference[t]);
        continue;
      }
      pair_profile(m, u, w, profile);
      if (profile == reference[t]) continue;
      const auto [key, counts] = first_difference(reference[t], profile);
      const Color rc = static_cast<Color>(key / r);
      const Color sc = static_cast<Color>(key % r);
      const Cell first = s.first_cells_[t];
      std::ostringstream msg;
      msg << "pairs " << cell_str(first) << " and " << cell_str({u, w}) << " of color " << t
          << " disagree on (R,S) = (" << rc << "," << sc << "): " << counts.first << " vs "
          << counts.second;
      throw ValidationError(Errc::inconsistent_intersection_numbers, msg.str(),
                            {first, Cell{u, w}}, std::pair{rc, sc}, counts);
    }

  s.diagonal_.assign(r, 0);
  for (Color c = 0; c < r; ++c)
    if (diag_cell[c].row != kUnset) {
      s.diagonal_[c] = 1;
      s.diagonal_colors_.push_back(c);
    }
  // order fibers by least point
  std::sort(s.diagonal_colors_.begin(), s.diagonal_colors_.end(),
            [&](Color a, Color b) { return s.first_cells_[a].row < s.first_cells_[b].row; });
  s.fibers_.assign(s.diagonal_colors_.size(), {});
  s.fiber_of_.assign(n, 0);
  std::vector<std::size_t> fiber_index(r, 0);
  for (std::size_t f = 0; f < s.diagonal_colors_.size(); ++f) fiber_index[s.diagonal_colors_[f]] = f;
  for (Point u = 0; u < n; ++u) {
    const std::size_t f = fiber_index[m(u, u)];
    s.fibers_[f].push_back(u);
    s.fiber_of_[u] = f;
  }

  s.source_fiber_.assign(r, 0);
  s.target_fiber_.assign(r, 0);
  s.degrees_.assign(r, 0);
  for (Color c = 0; c < r; ++c) {
    const Cell cell = s.first_cells_[c];
    s.source_fiber_[c] = s.fiber_of_[cell.row];
    s.target_fiber_[c] = s.fiber_of_[cell.col];
    for (Point v = 0; v < n; ++v)
      if (m(cell.row, v) == c) ++s.degrees_[c];
  }
  for (Point u = 0; u < n; ++u)
    for (Point v = 0; v < n; ++v) {
      const Color c = m(u, v);
      if (s.source_fiber_[c] != s.fiber_of_[u] || s.target_fiber_[c] != s.fiber_of_[v])
        throw Error(Errc::inconsistent_intersection_numbers,
                    "color " + std::to_string(c) + " is not contained in a single fiber pair");
    }

  if (r <= Scheme::kMaxStoredTensorRank) {
    s.tensor_.assign(r * r * r, 0);
    for (Color t = 0; t < r; ++t)
      for (std::uint64_t key : reference[t]) ++s.tensor_[t * r * r + key];
  }

  for (Color c = 0; c < r; ++c) {
    const std::size_t fiber_size = s.fibers_[s.source_fiber_[c]].size();
    if (s.sizes_[c] != s.degrees_[c] * fiber_size)
      throw Error(Errc::inconsistent_intersection_numbers,
                  "row counts of color " + std::to_string(c) + " are not constant");
    if (!s.tensor_.empty()) {
      const Color delta = s.diagonal_colors_[s.source_fiber_[c]];
      if (s.intersection_number(delta, c, s.transpose_[c]) != s.degrees_[c])
        throw Error(Errc::inconsistent_intersection_numbers,
                    "degree of color " + std::to_string(c) + " disagrees with the tensor");
    }
  }
  return s;
}

}  // namespace asck
