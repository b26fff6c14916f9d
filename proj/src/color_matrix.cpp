#include "asck/color_matrix.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>

namespace asck {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::not_square: return "not square";
    case Errc::non_contiguous_colors: return "non-contiguous color ids";
    case Errc::not_a_partition_of_diagonal: return "not a partition of the diagonal";
    case Errc::not_transpose_closed: return "not transpose closed";
    case Errc::inconsistent_intersection_numbers: return "inconsistent intersection numbers";
    case Errc::invalid_color: return "invalid color";
    case Errc::not_homogeneous: return "not homogeneous";
    case Errc::rank_too_large: return "rank too large";
    case Errc::too_few_points: return "too few points";
    case Errc::not_thin_element: return "not a thin element";
    case Errc::not_a_scheme_equivalence: return "not a scheme equivalence";
    case Errc::quotient_validation_failed: return "quotient validation failed";
    case Errc::not_a_block: return "not a block";
    case Errc::restriction_validation_failed: return "restriction validation failed";
    case Errc::wreath_validation_failed: return "wreath validation failed";
    case Errc::invalid_group_table: return "invalid group table";
    case Errc::not_strongly_connected: return "not strongly connected";
    case Errc::no_arcs: return "no arcs";
    case Errc::invalid_p: return "invalid p";
    case Errc::not_symmetric: return "not symmetric";
    case Errc::has_loops: return "has loops";
    case Errc::diagonal_color: return "diagonal color";
    case Errc::not_prime: return "not prime";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::format_error: return "format error";
  }
  return "unknown";
}

ColorMatrix::ColorMatrix(std::size_t n, std::vector<Color> entries)
    : n_(n), r_(0), entries_(std::move(entries)) {
  if (n == 0 || entries_.size() != n * n)
    throw Error(Errc::not_square, "color matrix of " + std::to_string(entries_.size()) +
                                      " entries is not a nonempty square of side " +
                                      std::to_string(n));
  const Color max = *std::max_element(entries_.begin(), entries_.end());
  std::vector<char> seen(static_cast<std::size_t>(max) + 1, 0);
  for (Color c : entries_) seen[c] = 1;
  for (Color c = 0; c <= max; ++c)
    if (!seen[c])
      throw Error(Errc::non_contiguous_colors,
                  "color id " + std::to_string(c) + " is missing below the maximum id " +
                      std::to_string(max));
  r_ = static_cast<std::size_t>(max) + 1;
}

NormalizedMatrix normalize_colors(std::size_t n, std::span<const std::int64_t> raw) {
  std::vector<std::int64_t> ids(raw.begin(), raw.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Color> entries(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    entries[i] = static_cast<Color>(std::lower_bound(ids.begin(), ids.end(), raw[i]) - ids.begin());
  return {ColorMatrix(n, std::move(entries)), std::move(ids)};
}

ColorMatrix canonical_recolor(std::size_t n, std::span<const std::uint64_t> raw) {
  if (n == 0 || raw.size() != n * n)
    throw Error(Errc::not_square, "cannot recolor a non-square matrix");
  // key: (has a diagonal cell ? 0 : 1, first cell index)
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::map<std::uint64_t, std::pair<std::size_t, std::size_t>> keys;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [it, fresh] = keys.emplace(raw[i], std::pair{kNone, i});
    if (i / n == i % n && it->second.first == kNone) it->second.first = 0;
  }
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::uint64_t>> order;
  order.reserve(keys.size());
  for (const auto& [id, key] : keys) order.push_back({{key.first == 0 ? 0 : 1, key.second}, id});
  std::sort(order.begin(), order.end());
  std::map<std::uint64_t, Color> rename;
  for (std::size_t i = 0; i < order.size(); ++i) rename[order[i].second] = static_cast<Color>(i);
  std::vector<Color> entries(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) entries[i] = rename[raw[i]];
  return ColorMatrix(n, std::move(entries));
}

ColorMatrix canonical_recolor(const ColorMatrix& m) {
  std::vector<std::uint64_t> raw(m.entries().begin(), m.entries().end());
  return canonical_recolor(m.size(), raw);
}

bool same_partition(const ColorMatrix& a, const ColorMatrix& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  return canonical_recolor(a) == canonical_recolor(b);
}

std::uint64_t matrix_hash(const ColorMatrix& m) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(m.size());
  for (Color c : m.entries()) mix(c);
  return h;
}

}  // namespace asck
