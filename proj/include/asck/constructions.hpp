#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "asck/closure.hpp"
#include "asck/digraph.hpp"
#include "asck/scheme.hpp"

namespace asck {

/// Multiplication table of a finite group on elements 0..m-1.
class CayleyTable {
 public:
  /// Throws invalid_group_table unless rows and columns are permutations,
  /// the product is associative and an identity exists.
  CayleyTable(std::size_t order, std::vector<std::uint32_t> table);

  std::size_t order() const noexcept { return m_; }
  std::uint32_t operator()(std::uint32_t g, std::uint32_t h) const noexcept {
    return table_[static_cast<std::size_t>(g) * m_ + h];
  }
  std::uint32_t identity() const noexcept { return identity_; }
  std::uint32_t inverse(std::uint32_t g) const noexcept { return inverse_[g]; }
  bool is_abelian() const;

 private:
  std::size_t m_;
  std::vector<std::uint32_t> table_;
  std::uint32_t identity_ = 0;
  std::vector<std::uint32_t> inverse_;
};

CayleyTable cyclic_table(std::size_t m);
CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b);
/// Group generated by permutations of 0..degree-1, elements ordered by
/// discovery from the identity (breadth first over the generators).
CayleyTable permutation_group_table(const std::vector<std::vector<std::uint32_t>>& generators);
/// Dihedral group of order 2m (m >= 3).
CayleyTable dihedral_table(std::size_t m);
CayleyTable quaternion_table();

/// Regular scheme: color of (u, v) is u^{-1} v.
Scheme thin_scheme(const CayleyTable& table);
/// Rank-2 scheme on n points (Delta and its complement).
Scheme trivial_scheme(std::size_t n);

/// Points are the classes of e (ordered by least point); the cell (X, Y)
/// is colored by the set of original colors meeting X x Y.
Scheme quotient(const Scheme& scheme, const Equivalence& e);

/// Induced scheme on x, which must be a block or a union of fibers.
Scheme restriction(const Scheme& scheme, std::span<const Point> x);
/// True if x is a class of some scheme equivalence or a union of fibers.
bool is_block(const Scheme& scheme, std::span<const Point> x);

/// Inner scheme inside classes, outer scheme between them. The point
/// (i, o) has index o * inner.size() + i.
Scheme wreath(const Scheme& inner, const Scheme& outer);

/// Colors: loop-free diagonal, looped diagonal, arc, non-arc.
ColorMatrix encode_digraph(const Digraph& g);
/// Cayley digraph u -> u * s for s in connection.
Digraph cayley_digraph(const CayleyTable& table, std::span<const std::uint32_t> connection);
Digraph disjoint_union(const Digraph& a, const Digraph& b);
Digraph directed_cycle(std::size_t n);

/**
 * Two-dimensional Weisfeiler-Leman stabilization. The initial coloring is
 * split by (on diagonal, color, transposed color); each round recolors
 * (u, v) by its old color and the sorted multiset of (color(u,w),
 * color(w,v)). New ids follow the lexicographic order of the signatures.
 * The fixpoint is canonically recolored and validated.
 */
Scheme wl_closure(const ColorMatrix& matrix);

}  // namespace asck
