#include "asck/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace asck {
namespace {

constexpr std::uint64_t kExhaustiveShiftLimit = 1'000'000;

void sort_components(std::vector<std::vector<Vertex>>& comps) {
  for (auto& c : comps) std::sort(c.begin(), c.end());
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::vector<Point> support_of(const Scheme& scheme, Color color) {
  const auto view = scheme.relation(color);
  std::vector<Point> support = scheme.fibers()[view.source_fiber];
  if (view.target_fiber != view.source_fiber) {
    const auto& y = scheme.fibers()[view.target_fiber];
    support.insert(support.end(), y.begin(), y.end());
    std::sort(support.begin(), support.end());
  }
  return support;
}

// Residue search: choose shifts so the union of shifted residue sets covers
// Z_p. Sets are bitmasks over residues (p <= 64) or vectors otherwise.
class ShiftCover {
 public:
  ShiftCover(unsigned p, std::vector<std::vector<unsigned>> sets)
      : p_(p), sets_(std::move(sets)), shifts_(sets_.size(), 0) {}

  bool solve() {
    const std::size_t k = sets_.size();
    std::size_t total = 0;
    for (const auto& s : sets_) {
      if (s.size() == p_) return true;  // shift 0 everywhere
      total += s.size();
    }
    if (total < p_) return false;
    if (k >= p_) {
      // one component per residue
      for (std::size_t i = 0; i < k; ++i) shifts_[i] = static_cast<unsigned>((p_ + i - sets_[i][0] % p_) % p_);
      return true;
    }
    std::uint64_t combos = 1;
    bool small = true;
    for (std::size_t i = 1; i < k && small; ++i) {
      combos *= p_;
      if (combos > kExhaustiveShiftLimit) small = false;
    }
    covered_.assign(p_, 0);
    return small ? exhaustive(0) : branch();
  }

  const std::vector<unsigned>& shifts() const { return shifts_; }

 private:
  void apply(std::size_t i, unsigned shift, int delta) {
    for (unsigned x : sets_[i]) covered_[(x + shift) % p_] += delta;
  }

  bool all_covered() const {
    return std::all_of(covered_.begin(), covered_.end(), [](int c) { return c > 0; });
  }

  // Every shift vector with the first shift fixed to 0.
  bool exhaustive(std::size_t i) {
    if (i == sets_.size()) return all_covered();
    const unsigned limit = (i == 0) ? 1 : p_;
    for (unsigned s = 0; s < limit; ++s) {
      shifts_[i] = s;
      apply(i, s, 1);
      const bool ok = exhaustive(i + 1);
      apply(i, s, -1);
      if (ok) return true;
    }
    return false;
  }

  // Exact search for large instances: the least uncovered residue must be
  // hit by some unused component through one of its elements.
  bool branch() {
    used_.assign(sets_.size(), 0);
    return branch_step();
  }

  bool branch_step() {
    std::size_t missing = 0;
    unsigned target = p_;
    for (unsigned x = 0; x < p_; ++x)
      if (covered_[x] == 0) {
        if (target == p_) target = x;
        ++missing;
      }
    if (target == p_) {
      for (std::size_t i = 0; i < sets_.size(); ++i)
        if (!used_[i]) shifts_[i] = 0;
      return true;
    }
    std::size_t capacity = 0;
    for (std::size_t i = 0; i < sets_.size(); ++i)
      if (!used_[i]) capacity += sets_[i].size();
    if (capacity < missing) return false;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (used_[i]) continue;
      for (unsigned x : sets_[i]) {
        const unsigned s = (target + p_ - x) % p_;
        used_[i] = 1;
        shifts_[i] = s;
        apply(i, s, 1);
        const bool ok = branch_step();
        apply(i, s, -1);
        used_[i] = 0;
        if (ok) {
          used_[i] = 1;
          return true;
        }
      }
    }
    return false;
  }

  unsigned p_;
  std::vector<std::vector<unsigned>> sets_;
  std::vector<unsigned> shifts_;
  std::vector<int> covered_;
  std::vector<char> used_;
};

}  // namespace

Digraph::Digraph(std::size_t n, std::span<const Arc> arcs) : Digraph(n) {
  for (auto [u, v] : arcs) {
    if (u >= n || v >= n)
      throw Error(Errc::invalid_argument, "arc (" + std::to_string(u) + "," + std::to_string(v) +
                                              ") out of range for " + std::to_string(n) +
                                              " vertices");
    if (!add_arc(u, v))
      throw Error(Errc::invalid_argument,
                  "duplicate arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
}

bool Digraph::add_arc(Vertex u, Vertex v) {
  if (u >= size() || v >= size())
    throw Error(Errc::invalid_argument, "arc endpoint out of range");
  auto& row = out_[u];
  auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it != row.end() && *it == v) return false;
  row.insert(it, v);
  auto& col = in_[v];
  col.insert(std::lower_bound(col.begin(), col.end(), u), u);
  ++arc_count_;
  return true;
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  if (u >= size() || v >= size()) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

bool Digraph::has_loops() const {
  for (Vertex u = 0; u < size(); ++u)
    if (has_arc(u, u)) return true;
  return false;
}

bool Digraph::is_symmetric() const { return out_ == in_; }

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v : out_[u]) out.emplace_back(u, v);
  return out;
}

void Digraph::set_labels(std::vector<Point> labels) {
  if (!labels.empty() && labels.size() != size())
    throw Error(Errc::invalid_argument, "label map size does not match the vertex count");
  // the identity map is stored as no map
  bool identity = true;
  for (std::size_t i = 0; i < labels.size() && identity; ++i) identity = labels[i] == i;
  if (identity) labels.clear();
  labels_ = std::move(labels);
}

bool is_valid_cyclic_partition(const Digraph& g, const CyclicPartition& part) {
  if (part.p < 2 || part.classes.size() != part.p) return false;
  std::vector<unsigned> label(g.size(), part.p);
  for (unsigned i = 0; i < part.p; ++i) {
    if (part.classes[i].empty()) return false;
    for (Vertex v : part.classes[i]) {
      if (v >= g.size() || label[v] != part.p) return false;
      label[v] = i;
    }
  }
  if (std::find(label.begin(), label.end(), part.p) != label.end()) return false;
  for (auto [u, v] : g.arcs())
    if (label[v] != (label[u] + 1) % part.p) return false;
  return true;
}

Digraph basis_digraph(const Scheme& scheme, Color color) {
  const auto support = support_of(scheme, color);
  std::vector<Vertex> index(scheme.size(), 0);
  for (std::size_t i = 0; i < support.size(); ++i) index[support[i]] = static_cast<Vertex>(i);
  Digraph g(support.size());
  for (Point u : support)
    for (Point v : support)
      if (scheme(u, v) == color) g.add_arc(index[u], index[v]);
  g.set_labels(support);
  return g;
}

Digraph basis_graph(const Scheme& scheme, Color color) {
  if (scheme.is_diagonal(color))
    throw Error(Errc::diagonal_color,
                "color " + std::to_string(color) + " is diagonal; its basis graph is empty");
  const Color back = scheme.transpose(color);
  const auto support = support_of(scheme, color);
  std::vector<Vertex> index(scheme.size(), 0);
  for (std::size_t i = 0; i < support.size(); ++i) index[support[i]] = static_cast<Vertex>(i);
  Digraph g(support.size());
  for (Point u : support)
    for (Point v : support) {
      if (u == v) continue;
      const Color c = scheme(u, v);
      if (c == color || c == back) g.add_arc(index[u], index[v]);
    }
  g.set_labels(support);
  return g;
}

Digraph induced_subdigraph(const Digraph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> index(g.size(), static_cast<Vertex>(g.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<Vertex>(i);
  Digraph h(vertices.size());
  std::vector<Point> labels;
  for (Vertex u : vertices) {
    labels.push_back(g.label(u));
    for (Vertex v : g.out(u))
      if (index[v] != g.size()) h.add_arc(index[u], index[v]);
  }
  h.set_labels(std::move(labels));
  return h;
}

std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& g) {
  // Iterative Tarjan.
  const std::size_t n = g.size();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> call;
  std::vector<std::vector<Vertex>> comps;
  std::size_t counter = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [u, next] = call.back();
      const auto out = g.out(u);
      if (next < out.size()) {
        const Vertex v = out[next++];
        if (index[v] == kUnvisited) {
          index[v] = low[v] = counter++;
          stack.push_back(v);
          on_stack[v] = 1;
          call.push_back({v, 0});
        } else if (on_stack[v]) {
          low[u] = std::min(low[u], index[v]);
        }
        continue;
      }
      const Vertex done = u;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != done);
        comps.push_back(std::move(comp));
      }
    }
  }
  sort_components(comps);
  return comps;
}

std::vector<std::vector<Vertex>> weakly_connected_components(const Digraph& g) {
  const std::size_t n = g.size();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Vertex>> comps;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp{root};
    seen[root] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const Vertex u = comp[i];
      for (auto nbrs : {g.out(u), g.in(u)})
        for (Vertex v : nbrs)
          if (!seen[v]) {
            seen[v] = 1;
            comp.push_back(v);
          }
    }
    comps.push_back(std::move(comp));
  }
  sort_components(comps);
  return comps;
}

bool is_strongly_connected(const Digraph& g) {
  return g.size() > 0 && strongly_connected_components(g).size() == 1;
}

unsigned period(const Digraph& g) {
  if (g.arc_count() == 0) throw Error(Errc::no_arcs, "period of a digraph without arcs");
  if (!is_strongly_connected(g))
    throw Error(Errc::not_strongly_connected, "period requires a strongly connected digraph");
  std::vector<long> level(g.size(), -1);
  std::queue<Vertex> queue;
  level[0] = 0;
  queue.push(0);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    for (Vertex v : g.out(u))
      if (level[v] < 0) {
        level[v] = level[u] + 1;
        queue.push(v);
      }
  }
  unsigned long acc = 0;
  for (auto [u, v] : g.arcs()) {
    const long diff = level[u] + 1 - level[v];
    acc = std::gcd(acc, static_cast<unsigned long>(diff < 0 ? -diff : diff));
  }
  return static_cast<unsigned>(acc);
}

std::optional<CyclicPartition> cyclically_p_partite(const Digraph& g, unsigned p) {
  if (p < 2) throw Error(Errc::invalid_p, "p must be at least 2, got " + std::to_string(p));
  const std::size_t n = g.size();
  if (n < p) return std::nullopt;
  // offsets relative to the root of each weak component
  std::vector<unsigned> offset(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Vertex>> comps;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp{root};
    seen[root] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const Vertex u = comp[i];
      for (Vertex v : g.out(u)) {
        const unsigned want = (offset[u] + 1) % p;
        if (!seen[v]) {
          seen[v] = 1;
          offset[v] = want;
          comp.push_back(v);
        } else if (offset[v] != want) {
          return std::nullopt;
        }
      }
      for (Vertex v : g.in(u)) {
        const unsigned want = (offset[u] + p - 1) % p;
        if (!seen[v]) {
          seen[v] = 1;
          offset[v] = want;
          comp.push_back(v);
        } else if (offset[v] != want) {
          return std::nullopt;
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  std::vector<std::vector<unsigned>> residues;
  residues.reserve(comps.size());
  for (const auto& comp : comps) {
    std::vector<char> hit(p, 0);
    for (Vertex v : comp) hit[offset[v]] = 1;
    std::vector<unsigned> set;
    for (unsigned x = 0; x < p; ++x)
      if (hit[x]) set.push_back(x);
    residues.push_back(std::move(set));
  }
  ShiftCover cover(p, std::move(residues));
  if (!cover.solve()) return std::nullopt;

  CyclicPartition part{p, std::vector<std::vector<Vertex>>(p)};
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (Vertex v : comps[i]) part.classes[(offset[v] + cover.shifts()[i]) % p].push_back(v);
  for (auto& c : part.classes) std::sort(c.begin(), c.end());
  // rotate so that the class of the least vertex comes first
  std::size_t first = 0;
  for (unsigned i = 0; i < p; ++i)
    if (!part.classes[i].empty() && part.classes[i].front() == 0) first = i;
  std::rotate(part.classes.begin(), part.classes.begin() + static_cast<long>(first),
              part.classes.end());
  if (!is_valid_cyclic_partition(g, part))
    throw std::logic_error("cyclic partition witness failed its own check");
  return part;
}

std::optional<TwoColoring> is_bipartite(const Digraph& g) {
  if (g.has_loops()) throw Error(Errc::has_loops, "bipartite check requires a loopless graph");
  if (!g.is_symmetric())
    throw Error(Errc::not_symmetric, "bipartite check requires a symmetric digraph");
  const std::size_t n = g.size();
  constexpr unsigned char kNone = 2;
  TwoColoring col;
  col.side.assign(n, kNone);
  std::vector<Vertex> isolated;
  for (Vertex root = 0; root < n; ++root) {
    if (col.side[root] != kNone) continue;
    if (g.out(root).empty()) {
      isolated.push_back(root);
      continue;
    }
    col.side[root] = 0;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (Vertex v : g.out(u)) {
        if (col.side[v] == kNone) {
          col.side[v] = static_cast<unsigned char>(1 - col.side[u]);
          queue.push(v);
        } else if (col.side[v] == col.side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  std::size_t count[2] = {0, 0};
  for (Vertex v = 0; v < n; ++v)
    if (col.side[v] != kNone) ++count[col.side[v]];
  for (Vertex v : isolated) {
    const unsigned char side = count[1] < count[0] ? 1 : 0;
    col.side[v] = side;
    ++count[side];
  }
  for (Vertex v = 0; v < n; ++v) col.classes[col.side[v]].push_back(v);
  if (col.classes[0].empty() || col.classes[1].empty()) return std::nullopt;
  for (auto [u, v] : g.arcs())
    if (col.side[u] == col.side[v]) throw std::logic_error("two-coloring failed its own check");
  return col;
}

}  // namespace asck
