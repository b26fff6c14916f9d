#include "asck/closure.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace asck {
namespace {

void require_homogeneous(const Scheme& scheme, const char* what) {
  if (!scheme.is_homogeneous())
    throw Error(Errc::not_homogeneous,
                std::string(what) + " requires a homogeneous scheme (found " +
                    std::to_string(scheme.fibers().size()) + " fibers)");
}

ClosedSet close(const Scheme& scheme, const std::vector<Color>& seed, bool add_all_diagonals) {
  const std::size_t r = scheme.rank();
  std::vector<char> in(r, 0);
  std::vector<Color> members;
  auto add = [&](Color c) {
    if (c >= r)
      throw Error(Errc::invalid_color, "seed color " + std::to_string(c) + " out of range");
    if (!in[c]) {
      in[c] = 1;
      members.push_back(c);
    }
  };
  if (add_all_diagonals)
    for (Color d : scheme.diagonal_colors()) add(d);
  for (Color c : seed) add(c);
  // members grows while we scan; every pair (i, j) with i, j < k is handled
  // once member k has been processed.
  for (std::size_t k = 0; k < members.size(); ++k) {
    const Color c = members[k];
    add(scheme.transpose(c));
    const auto view = scheme.relation(c);
    add(scheme.fiber_diagonal(view.source_fiber));
    add(scheme.fiber_diagonal(view.target_fiber));
    for (std::size_t j = 0; j <= k; ++j) {
      for (Color t : scheme.product_colors(c, members[j])) add(t);
      for (Color t : scheme.product_colors(members[j], c)) add(t);
    }
  }
  std::sort(members.begin(), members.end());
  return ClosedSet{std::move(members)};
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<std::vector<Point>> components_of(const Scheme& scheme, Color color) {
  const std::size_t n = scheme.size();
  UnionFind uf(n);
  for (Point u = 0; u < n; ++u)
    for (Point v = 0; v < n; ++v)
      if (scheme(u, v) == color) uf.unite(u, v);
  std::vector<std::vector<Point>> out;
  std::vector<std::size_t> slot(n, n);
  for (Point u = 0; u < n; ++u) {
    const std::size_t root = uf.find(u);
    if (slot[root] == n) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(u);
  }
  return out;
}

void sort_classes(std::vector<std::vector<Point>>& classes) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

using Mask = std::uint32_t;

// Closure of a color mask with precomputed products; homogeneous schemes
// with rank <= 24 only.
struct MaskCloser {
  std::size_t r;
  std::vector<Mask> product;  // product[a * r + b]: colors of the product
  std::vector<Color> transpose;

  explicit MaskCloser(const Scheme& scheme) : r(scheme.rank()), product(r * r, 0), transpose(r) {
    for (Color a = 0; a < r; ++a) {
      transpose[a] = scheme.transpose(a);
      for (Color b = 0; b < r; ++b)
        for (Color t : scheme.product_colors(a, b)) product[a * r + b] |= Mask{1} << t;
    }
  }

  Mask close(Mask seed) const {
    Mask cur = seed | Mask{1};  // the diagonal is color 0 in one-fiber schemes
    while (true) {
      Mask next = cur;
      for (Color a = 0; a < r; ++a) {
        if (!(cur >> a & 1u)) continue;
        next |= Mask{1} << transpose[a];
        for (Color b = 0; b < r; ++b)
          if (cur >> b & 1u) next |= product[a * r + b];
      }
      if (next == cur) return cur;
      cur = next;
    }
  }
};

ClosedSet from_mask(Mask m, std::size_t r) {
  ClosedSet out;
  for (Color c = 0; c < r; ++c)
    if (m >> c & 1u) out.colors.push_back(c);
  return out;
}

bool subset_of(const ClosedSet& a, const ClosedSet& b) {
  return std::includes(b.colors.begin(), b.colors.end(), a.colors.begin(), a.colors.end());
}

}  // namespace

bool ClosedSet::contains(Color c) const {
  return std::binary_search(colors.begin(), colors.end(), c);
}

bool Equivalence::operator==(const Equivalence& other) const {
  const bool same = classes == other.classes;
  if (same && colors != other.colors)
    throw std::logic_error("equivalences with equal classes carry different color sets");
  return same;
}

ClosedSet generated_closed_set(const Scheme& scheme, const std::vector<Color>& seed) {
  require_homogeneous(scheme, "generated_closed_set");
  return close(scheme, seed, true);
}

ClosedSet close_colors(const Scheme& scheme, const std::vector<Color>& seed) {
  return close(scheme, seed, false);
}

Equivalence equivalence_from_colors(const Scheme& scheme, const ClosedSet& colors) {
  const std::size_t n = scheme.size();
  std::vector<char> in(scheme.rank(), 0);
  for (Color c : colors.colors) in[c] = 1;
  std::vector<char> assigned(n, 0);
  Equivalence e;
  e.colors = colors;
  for (Point u = 0; u < n; ++u) {
    if (assigned[u] || !in[scheme(u, u)]) continue;
    std::vector<Point> cls;
    for (Point v = 0; v < n; ++v)
      if (in[scheme(u, v)]) cls.push_back(v);
    for (Point v : cls) {
      if (assigned[v])
        throw Error(Errc::not_a_scheme_equivalence, "color set does not induce a partition");
      assigned[v] = 1;
    }
    e.classes.push_back(std::move(cls));
  }
  // every related pair must lie in one class
  std::vector<std::size_t> class_of(n, n);
  for (std::size_t i = 0; i < e.classes.size(); ++i)
    for (Point v : e.classes[i]) class_of[v] = i;
  for (Point u = 0; u < n; ++u)
    for (Point v = 0; v < n; ++v) {
      const bool related = in[scheme(u, v)] != 0;
      const bool together = class_of[u] != n && class_of[u] == class_of[v];
      if (related != together)
        throw Error(Errc::not_a_scheme_equivalence,
                    "relation union is not an equivalence at (" + std::to_string(u) + "," +
                        std::to_string(v) + ")");
    }
  sort_classes(e.classes);
  return e;
}

Equivalence equivalence_from_partition(const Scheme& scheme,
                                       std::vector<std::vector<Point>> classes) {
  const std::size_t n = scheme.size();
  std::vector<std::size_t> class_of(n, n);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].empty())
      throw Error(Errc::not_a_scheme_equivalence, "empty class in partition");
    for (Point v : classes[i]) {
      if (v >= n || class_of[v] != n)
        throw Error(Errc::not_a_scheme_equivalence,
                    "point " + std::to_string(v) + " is out of range or repeated");
      class_of[v] = i;
    }
  }
  // each color must be entirely inside or entirely outside the union
  std::vector<int> inside(scheme.rank(), -1);
  for (Point u = 0; u < n; ++u)
    for (Point v = 0; v < n; ++v) {
      const int together = class_of[u] != n && class_of[u] == class_of[v];
      int& slot = inside[scheme(u, v)];
      if (slot == -1) {
        slot = together;
      } else if (slot != together) {
        throw Error(Errc::not_a_scheme_equivalence,
                    "color " + std::to_string(scheme(u, v)) +
                        " is split by the partition at (" + std::to_string(u) + "," +
                        std::to_string(v) + ")");
      }
    }
  Equivalence e;
  for (Color c = 0; c < scheme.rank(); ++c)
    if (inside[c] == 1) e.colors.colors.push_back(c);
  e.classes = std::move(classes);
  sort_classes(e.classes);
  return e;
}

Equivalence generated_equivalence(const Scheme& scheme, Color color) {
  require_homogeneous(scheme, "generated_equivalence");
  auto e = equivalence_from_colors(scheme, generated_closed_set(scheme, {color}));
  auto components = components_of(scheme, color);
  sort_classes(components);
  if (components != e.classes)
    throw std::logic_error("classes of <R> differ from the components of the basis digraph");
  return e;
}

Equivalence discrete_equivalence(const Scheme& scheme) {
  std::vector<std::vector<Point>> classes(scheme.size());
  for (Point u = 0; u < scheme.size(); ++u) classes[u] = {u};
  return equivalence_from_partition(scheme, std::move(classes));
}

Equivalence full_equivalence(const Scheme& scheme) {
  std::vector<Point> all(scheme.size());
  std::iota(all.begin(), all.end(), 0);
  return equivalence_from_partition(scheme, {std::move(all)});
}

std::vector<Equivalence> all_equivalences(const Scheme& scheme) {
  require_homogeneous(scheme, "all_equivalences");
  const std::size_t r = scheme.rank();
  if (r > kMaxLatticeRank)
    throw Error(Errc::rank_too_large, "lattice enumeration is capped at rank " +
                                          std::to_string(kMaxLatticeRank) + " (rank " +
                                          std::to_string(r) + ")");
  const MaskCloser closer(scheme);
  std::vector<Mask> family;
  std::set<Mask> seen;
  auto insert = [&](Mask m) {
    if (seen.insert(m).second) family.push_back(m);
  };
  insert(closer.close(0));
  for (Color c = 0; c < r; ++c) insert(closer.close(Mask{1} << c));
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) insert(closer.close(family[i] | family[j]));

  std::vector<ClosedSet> sets;
  for (Mask m : family) sets.push_back(from_mask(m, r));
  std::sort(sets.begin(), sets.end(), [](const ClosedSet& a, const ClosedSet& b) {
    if (a.colors.size() != b.colors.size()) return a.colors.size() < b.colors.size();
    return a.colors < b.colors;
  });
  std::vector<Equivalence> out;
  out.reserve(sets.size());
  for (const auto& cs : sets) out.push_back(equivalence_from_colors(scheme, cs));
  return out;
}

namespace {

std::vector<Equivalence> extremes(const Scheme& scheme, Extremes convention, bool minimal) {
  auto lattice = all_equivalences(scheme);
  if (scheme.size() == 1) return {};
  const ClosedSet& delta = lattice.front().colors;
  const ClosedSet& full = lattice.back().colors;
  std::vector<const Equivalence*> pool;
  for (const auto& e : lattice) {
    const bool is_delta = e.colors == delta;
    const bool is_full = e.colors == full;
    if (minimal ? is_delta : is_full) continue;
    if (convention == Extremes::nontrivial && (is_delta || is_full)) continue;
    pool.push_back(&e);
  }
  std::vector<Equivalence> out;
  for (const auto* e : pool) {
    bool extreme = true;
    for (const auto* other : pool) {
      if (other == e) continue;
      if (minimal ? subset_of(other->colors, e->colors) : subset_of(e->colors, other->colors))
        extreme = false;
    }
    if (extreme) out.push_back(*e);
  }
  return out;
}

}  // namespace

std::vector<Equivalence> minimal_equivalences(const Scheme& scheme, Extremes convention) {
  auto out = extremes(scheme, convention, true);
  for (const auto& e : out) {
    bool single = false;
    for (Color c : e.colors.colors)
      if (!scheme.is_diagonal(c) && generated_equivalence(scheme, c) == e) single = true;
    if (!single) throw std::logic_error("minimal equivalence not generated by a single color");
  }
  return out;
}

std::vector<Equivalence> maximal_equivalences(const Scheme& scheme, Extremes convention) {
  return extremes(scheme, convention, false);
}

bool is_primitive(const Scheme& scheme) {
  require_homogeneous(scheme, "is_primitive");
  if (scheme.size() < 2)
    throw Error(Errc::too_few_points, "primitivity is defined on at least two points");
  for (Color c = 0; c < scheme.rank(); ++c) {
    if (scheme.is_diagonal(c)) continue;
    if (generated_closed_set(scheme, {c}).colors.size() != scheme.rank()) return false;
  }
  return true;
}

std::size_t ThinRadical::index_of(Color c) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), c);
  return (it != elements.end() && *it == c) ? static_cast<std::size_t>(it - elements.begin())
                                            : elements.size();
}

ThinRadical thin_radical(const Scheme& scheme) {
  require_homogeneous(scheme, "thin_radical");
  ThinRadical g;
  for (Color c = 0; c < scheme.rank(); ++c)
    if (scheme.degree(c) == 1) g.elements.push_back(c);
  const std::size_t k = g.elements.size();
  g.table.assign(k, std::vector<std::size_t>(k, k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto prod = scheme.product_colors(g.elements[i], g.elements[j]);
      if (prod.size() != 1) throw std::logic_error("product of thin colors is not a single color");
      g.table[i][j] = g.index_of(prod.front());
      if (g.table[i][j] == k) throw std::logic_error("thin colors are not closed under product");
    }
  // group axioms: identity is the diagonal, inverses via transpose
  const std::size_t e = g.index_of(scheme.diagonal_colors().front());
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t inv = g.index_of(scheme.transpose(g.elements[i]));
    if (g.table[e][i] != i || g.table[i][e] != i || g.table[i][inv] != e)
      throw std::logic_error("thin radical violates the group axioms");
  }
  return g;
}

bool is_regular(const Scheme& scheme) { return thin_radical(scheme).order() == scheme.rank(); }

std::size_t element_order(const Scheme& scheme, Color color) {
  require_homogeneous(scheme, "element_order");
  if (scheme.degree(color) != 1)
    throw Error(Errc::not_thin_element,
                "color " + std::to_string(color) + " has degree " +
                    std::to_string(scheme.degree(color)));
  std::size_t order = 0;
  for (Color c : generated_closed_set(scheme, {color}).colors) order += scheme.degree(c);
  return order;
}

}  // namespace asck
