#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "asck/scheme.hpp"

namespace asck {

using Vertex = std::uint32_t;
using Arc = std::pair<Vertex, Vertex>;

/**
 * Finite digraph on vertices 0..n-1 with no duplicate arcs. Loops are
 * allowed. labels, when non-empty, maps each vertex back to a scheme point.
 */
class Digraph {
 public:
  explicit Digraph(std::size_t n = 0) : out_(n), in_(n) {}
  /// Throws invalid_argument on out-of-range endpoints or duplicate arcs.
  Digraph(std::size_t n, std::span<const Arc> arcs);

  /// Adds (u, v); returns false if already present.
  bool add_arc(Vertex u, Vertex v);

  std::size_t size() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return arc_count_; }
  std::span<const Vertex> out(Vertex u) const noexcept { return out_[u]; }
  std::span<const Vertex> in(Vertex u) const noexcept { return in_[u]; }
  bool has_arc(Vertex u, Vertex v) const;
  bool has_loops() const;
  bool is_symmetric() const;
  /// All arcs in (source, target) ascending order.
  std::vector<Arc> arcs() const;

  const std::vector<Point>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<Point> labels);
  Point label(Vertex v) const noexcept { return labels_.empty() ? v : labels_[v]; }

  bool operator==(const Digraph& other) const {
    return out_ == other.out_ && labels_ == other.labels_;
  }

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<Point> labels_;
  std::size_t arc_count_ = 0;
};

/// Ordered vertex classes V_0..V_{p-1}; every arc goes V_i -> V_{i+1 mod p}.
struct CyclicPartition {
  unsigned p;
  std::vector<std::vector<Vertex>> classes;
};

/// Checks nonemptiness, disjoint cover and the class-advance condition.
bool is_valid_cyclic_partition(const Digraph& g, const CyclicPartition& part);

struct TwoColoring {
  std::vector<unsigned char> side;  // 0 or 1 per vertex
  std::vector<Vertex> classes[2];
};

/// Vertices = support of the relation, arcs = its pairs.
Digraph basis_digraph(const Scheme& scheme, Color color);
/// Symmetric loopless digraph of (S u S^T) \ Delta on its support.
/// Throws diagonal_color for diagonal colors.
Digraph basis_graph(const Scheme& scheme, Color color);

/// Subdigraph induced on the given vertices (renumbered in the given order;
/// labels are carried over).
Digraph induced_subdigraph(const Digraph& g, std::span<const Vertex> vertices);

/// Components ordered by least vertex, each sorted ascending.
std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& g);
std::vector<std::vector<Vertex>> weakly_connected_components(const Digraph& g);
bool is_strongly_connected(const Digraph& g);

/// gcd of the directed cycle lengths of a strongly connected digraph.
unsigned period(const Digraph& g);

/// A witness partition if g is cyclically p-partite, nullopt otherwise.
/// Throws invalid_p for p < 2.
std::optional<CyclicPartition> cyclically_p_partite(const Digraph& g, unsigned p);

/// A 2-coloring with both classes nonempty and no monochromatic arc.
/// Requires a symmetric loopless digraph.
std::optional<TwoColoring> is_bipartite(const Digraph& g);

}  // namespace asck
