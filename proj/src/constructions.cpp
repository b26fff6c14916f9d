#include "asck/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace asck {
namespace {

template <typename Fn>
Scheme validate_or(Errc code, const char* what, Fn&& build) {
  try {
    return validate(build());
  } catch (const Error& e) {
    throw Error(code, std::string(what) + ": " + e.what());
  }
}

}  // namespace

CayleyTable::CayleyTable(std::size_t order, std::vector<std::uint32_t> table)
    : m_(order), table_(std::move(table)) {
  auto fail = [](const std::string& why) { throw Error(Errc::invalid_group_table, why); };
  if (m_ == 0 || table_.size() != m_ * m_) fail("table is not a nonempty square");
  for (std::size_t g = 0; g < m_; ++g) {
    std::vector<char> row(m_, 0), col(m_, 0);
    for (std::size_t h = 0; h < m_; ++h) {
      const auto a = table_[g * m_ + h];
      const auto b = table_[h * m_ + g];
      if (a >= m_ || b >= m_ || row[a]++ || col[b]++)
        fail("row or column " + std::to_string(g) + " is not a permutation");
    }
  }
  bool found = false;
  for (std::uint32_t e = 0; e < m_ && !found; ++e) {
    bool ok = true;
    for (std::uint32_t g = 0; g < m_ && ok; ++g)
      ok = (*this)(e, g) == g && (*this)(g, e) == g;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) fail("no identity element");
  for (std::uint32_t a = 0; a < m_; ++a)
    for (std::uint32_t b = 0; b < m_; ++b)
      for (std::uint32_t c = 0; c < m_; ++c)
        if ((*this)((*this)(a, b), c) != (*this)(a, (*this)(b, c)))
          fail("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
               std::to_string(c) + ")");
  inverse_.assign(m_, 0);
  for (std::uint32_t g = 0; g < m_; ++g)
    for (std::uint32_t h = 0; h < m_; ++h)
      if ((*this)(g, h) == identity_) inverse_[g] = h;
}

bool CayleyTable::is_abelian() const {
  for (std::uint32_t g = 0; g < m_; ++g)
    for (std::uint32_t h = 0; h < g; ++h)
      if ((*this)(g, h) != (*this)(h, g)) return false;
  return true;
}

CayleyTable cyclic_table(std::size_t m) {
  if (m == 0) throw Error(Errc::invalid_argument, "cyclic group of order 0");
  std::vector<std::uint32_t> t(m * m);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = 0; h < m; ++h) t[g * m + h] = static_cast<std::uint32_t>((g + h) % m);
  return CayleyTable(m, std::move(t));
}

CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b) {
  const std::size_t ma = a.order(), mb = b.order(), m = ma * mb;
  // element (x, y) has id x * mb + y
  std::vector<std::uint32_t> t(m * m);
  for (std::uint32_t g = 0; g < m; ++g)
    for (std::uint32_t h = 0; h < m; ++h)
      t[g * m + h] = static_cast<std::uint32_t>(a(g / mb, h / mb) * mb + b(g % mb, h % mb));
  return CayleyTable(m, std::move(t));
}

CayleyTable permutation_group_table(const std::vector<std::vector<std::uint32_t>>& generators) {
  if (generators.empty()) throw Error(Errc::invalid_argument, "no generators");
  const std::size_t degree = generators.front().size();
  using Perm = std::vector<std::uint32_t>;
  auto compose = [](const Perm& x, const Perm& y) {  // x then y
    Perm out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = y[x[i]];
    return out;
  };
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elements{id};
  std::map<Perm, std::uint32_t> index{{id, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const auto& g : generators) {
      if (g.size() != degree) throw Error(Errc::invalid_argument, "generator degree mismatch");
      Perm next = compose(elements[i], g);
      if (index.emplace(next, static_cast<std::uint32_t>(elements.size())).second)
        elements.push_back(std::move(next));
    }
  const std::size_t m = elements.size();
  std::vector<std::uint32_t> t(m * m);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = 0; h < m; ++h) t[g * m + h] = index.at(compose(elements[g], elements[h]));
  return CayleyTable(m, std::move(t));
}

CayleyTable dihedral_table(std::size_t m) {
  if (m < 3) throw Error(Errc::invalid_argument, "dihedral group needs m >= 3");
  std::vector<std::uint32_t> rotation(m), reflection(m);
  for (std::size_t i = 0; i < m; ++i) {
    rotation[i] = static_cast<std::uint32_t>((i + 1) % m);
    reflection[i] = static_cast<std::uint32_t>((m - i) % m);
  }
  return permutation_group_table({rotation, reflection});
}

CayleyTable quaternion_table() {
  // regular representation of Q8 on {1, i, j, k, -1, -i, -j, -k}
  // right multiplication by i and by j
  const std::vector<std::uint32_t> by_i = {1, 4, 7, 2, 5, 0, 3, 6};
  const std::vector<std::uint32_t> by_j = {2, 3, 4, 5, 6, 7, 0, 1};
  return permutation_group_table({by_i, by_j});
}

Scheme thin_scheme(const CayleyTable& table) {
  const std::size_t m = table.order();
  std::vector<std::uint64_t> raw(m * m);
  for (std::uint32_t u = 0; u < m; ++u)
    for (std::uint32_t v = 0; v < m; ++v) raw[u * m + v] = table(table.inverse(u), v);
  return validate(canonical_recolor(m, raw));
}

Scheme trivial_scheme(std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "scheme on zero points");
  std::vector<Color> entries(n * n, 1);
  for (std::size_t u = 0; u < n; ++u) entries[u * n + u] = 0;
  return validate(ColorMatrix(n, std::move(entries)));
}

Scheme quotient(const Scheme& scheme, const Equivalence& e) {
  const std::size_t n = scheme.size();
  // re-derive from the partition so a foreign Equivalence is rejected
  const Equivalence checked = equivalence_from_partition(scheme, e.classes);
  std::size_t covered = 0;
  for (const auto& c : checked.classes) covered += c.size();
  if (covered != n)
    throw Error(Errc::not_a_scheme_equivalence, "quotient requires an equivalence on all points");

  const std::size_t k = checked.classes.size();
  const std::size_t r = scheme.rank();
  std::vector<std::size_t> class_of(n);
  for (std::size_t i = 0; i < k; ++i)
    for (Point v : checked.classes[i]) class_of[v] = i;

  std::vector<std::vector<char>> present(k * k, std::vector<char>(r, 0));
  for (Point u = 0; u < n; ++u)
    for (Point v = 0; v < n; ++v) present[class_of[u] * k + class_of[v]][scheme(u, v)] = 1;

  // R_{V/E} for every original color, then the disjoint-or-equal check
  std::vector<std::vector<std::size_t>> hits(r);
  for (std::size_t cell = 0; cell < k * k; ++cell)
    for (Color c = 0; c < r; ++c)
      if (present[cell][c]) hits[c].push_back(cell);
  for (Color a = 0; a < r; ++a)
    for (Color b = a + 1; b < r; ++b) {
      if (hits[a] == hits[b]) continue;
      std::vector<std::size_t> common;
      std::set_intersection(hits[a].begin(), hits[a].end(), hits[b].begin(), hits[b].end(),
                            std::back_inserter(common));
      if (!common.empty())
        throw Error(Errc::quotient_validation_failed,
                    "colors " + std::to_string(a) + " and " + std::to_string(b) +
                        " induce partially overlapping quotient relations");
    }

  std::map<std::vector<char>, std::uint64_t> ids;
  std::vector<std::uint64_t> raw(k * k);
  for (std::size_t cell = 0; cell < k * k; ++cell)
    raw[cell] = ids.emplace(present[cell], ids.size()).first->second;
  return validate_or(Errc::quotient_validation_failed, "quotient",
                     [&] { return canonical_recolor(k, raw); });
}

bool is_block(const Scheme& scheme, std::span<const Point> x) {
  const std::size_t n = scheme.size();
  if (x.empty()) return false;
  std::vector<char> in(n, 0);
  for (Point v : x) {
    if (v >= n || in[v]) return false;
    in[v] = 1;
  }
  // union of fibers
  bool fiber_union = true;
  for (const auto& f : scheme.fibers()) {
    const auto inside = std::count_if(f.begin(), f.end(), [&](Point v) { return in[v] != 0; });
    if (inside != 0 && static_cast<std::size_t>(inside) != f.size()) fiber_union = false;
  }
  if (fiber_union) return true;
  // x is a block iff it is the class, through any of its points, of the
  // smallest closed set containing every color inside x x x.
  std::vector<Color> seed;
  for (Point u : x)
    for (Point v : x) seed.push_back(scheme(u, v));
  const ClosedSet closed = close_colors(scheme, seed);
  const Point u = x.front();
  std::size_t cls = 0;
  for (Point v = 0; v < n; ++v) {
    if (!closed.contains(scheme(u, v))) continue;
    if (!in[v]) return false;
    ++cls;
  }
  return cls == x.size();
}

Scheme restriction(const Scheme& scheme, std::span<const Point> x) {
  if (!is_block(scheme, x))
    throw Error(Errc::not_a_block, "point set is neither a block nor a union of fibers");
  std::vector<Point> pts(x.begin(), x.end());
  std::sort(pts.begin(), pts.end());
  const std::size_t k = pts.size();
  std::vector<std::uint64_t> raw(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) raw[i * k + j] = scheme(pts[i], pts[j]);
  return validate_or(Errc::restriction_validation_failed, "restriction",
                     [&] { return canonical_recolor(k, raw); });
}

Scheme wreath(const Scheme& inner, const Scheme& outer) {
  if (!inner.is_homogeneous() || !outer.is_homogeneous())
    throw Error(Errc::not_homogeneous, "wreath product requires homogeneous factors");
  const std::size_t a = inner.size(), b = outer.size(), n = a * b;
  const std::uint64_t span = std::max(inner.rank(), outer.rank());
  std::vector<std::uint64_t> raw(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const auto i1 = static_cast<Point>(p % a), o1 = static_cast<Point>(p / a);
      const auto i2 = static_cast<Point>(q % a), o2 = static_cast<Point>(q / a);
      raw[p * n + q] = (o1 == o2) ? inner(i1, i2) : span + outer(o1, o2);
    }
  return validate_or(Errc::wreath_validation_failed, "wreath",
                     [&] { return canonical_recolor(n, raw); });
}

ColorMatrix encode_digraph(const Digraph& g) {
  const std::size_t n = g.size();
  if (n == 0) throw Error(Errc::invalid_argument, "cannot encode an empty digraph");
  std::vector<std::uint64_t> raw(n * n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      const bool arc = g.has_arc(u, v);
      raw[u * n + v] = (u == v) ? (arc ? 1 : 0) : (arc ? 2 : 3);
    }
  return canonical_recolor(n, raw);
}

Digraph cayley_digraph(const CayleyTable& table, std::span<const std::uint32_t> connection) {
  Digraph g(table.order());
  for (std::uint32_t u = 0; u < table.order(); ++u)
    for (auto s : connection) g.add_arc(u, table(u, s));
  return g;
}

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
  const auto shift = static_cast<Vertex>(a.size());
  Digraph g(a.size() + b.size());
  for (auto [u, v] : a.arcs()) g.add_arc(u, v);
  for (auto [u, v] : b.arcs()) g.add_arc(u + shift, v + shift);
  return g;
}

Digraph directed_cycle(std::size_t n) {
  Digraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    g.add_arc(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return g;
}

Scheme wl_closure(const ColorMatrix& matrix) {
  const std::size_t n = matrix.size();
  std::vector<Color> color(n * n);
  std::size_t count = 0;
  {
    // split by (off-diagonal, color, transposed color)
    std::map<std::tuple<int, Color, Color>, Color> keys;
    for (Point u = 0; u < n; ++u)
      for (Point v = 0; v < n; ++v) keys.emplace(std::tuple{u != v, matrix(u, v), matrix(v, u)}, 0);
    for (auto& [key, id] : keys) id = static_cast<Color>(count++);
    for (Point u = 0; u < n; ++u)
      for (Point v = 0; v < n; ++v)
        color[u * n + v] = keys.at(std::tuple{u != v, matrix(u, v), matrix(v, u)});
  }
  std::vector<std::vector<std::uint64_t>> sig(n * n);
  std::vector<std::size_t> order(n * n);
  while (true) {
    const std::uint64_t r = count;
    for (Point u = 0; u < n; ++u)
      for (Point v = 0; v < n; ++v) {
        auto& s = sig[u * n + v];
        s.resize(n + 1);
        for (Point w = 0; w < n; ++w) s[w + 1] = color[u * n + w] * r + color[w * n + v];
        std::sort(s.begin() + 1, s.end());
        s[0] = color[u * n + v];
      }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
    std::vector<Color> next(n * n);
    Color id = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++id;
      next[order[i]] = id;
    }
    const std::size_t next_count = static_cast<std::size_t>(id) + 1;
    color = std::move(next);
    if (next_count == count) break;
    count = next_count;
  }
  std::vector<std::uint64_t> raw(color.begin(), color.end());
  return validate(canonical_recolor(n, raw));
}

}  // namespace asck
