#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "asck/color_matrix.hpp"
#include "asck/constructions.hpp"
#include "asck/scheme.hpp"

namespace fixtures {

inline asck::ColorMatrix matrix(std::initializer_list<std::initializer_list<asck::Color>> rows) {
  std::vector<asck::Color> entries;
  for (const auto& row : rows) entries.insert(entries.end(), row.begin(), row.end());
  return asck::ColorMatrix(rows.size(), std::move(entries));
}

/// Thin scheme of Z_m; color k is the shift by k.
inline asck::Scheme z(std::size_t m) { return asck::thin_scheme(asck::cyclic_table(m)); }

inline asck::Scheme complete(std::size_t n) { return asck::trivial_scheme(n); }

inline asck::Digraph digraph(std::size_t n, std::initializer_list<asck::Arc> arcs) {
  std::vector<asck::Arc> a(arcs);
  return asck::Digraph(n, a);
}

}  // namespace fixtures
