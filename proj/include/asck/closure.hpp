#pragma once

#include <cstddef>
#include <vector>

#include "asck/scheme.hpp"

namespace asck {

/// A set of colors containing the diagonal of its support and closed under
/// transpose and the relational product. colors is ascending.
struct ClosedSet {
  std::vector<Color> colors;

  bool contains(Color c) const;
  bool operator==(const ClosedSet&) const = default;
};

/**
 * A scheme equivalence: classes partition (a subset of) the points, and the
 * union of the relations in colors is exactly the union of X x X over the
 * classes. Classes are sorted internally and ordered by least point.
 */
struct Equivalence {
  std::vector<std::vector<Point>> classes;
  ClosedSet colors;

  std::size_t class_count() const noexcept { return classes.size(); }
  /// Equality is by class partition; asserts the color sets agree.
  bool operator==(const Equivalence& other) const;
};

/// Smallest closed set containing seed. Requires a homogeneous scheme.
ClosedSet generated_closed_set(const Scheme& scheme, const std::vector<Color>& seed);

/// Same closure without the homogeneity requirement: the diagonal colors of
/// every fiber touched are added instead of the single diagonal.
ClosedSet close_colors(const Scheme& scheme, const std::vector<Color>& seed);

/// The equivalence whose relation union is the given closed set. Throws
/// not_a_scheme_equivalence when the union is not an equivalence relation.
Equivalence equivalence_from_colors(const Scheme& scheme, const ClosedSet& colors);

/// Checks that the given partition of a point subset is a scheme
/// equivalence and returns it with its color set.
Equivalence equivalence_from_partition(const Scheme& scheme,
                                       std::vector<std::vector<Point>> classes);

/// <R>: classes are the weakly connected components of the basis digraph.
Equivalence generated_equivalence(const Scheme& scheme, Color color);

Equivalence discrete_equivalence(const Scheme& scheme);
Equivalence full_equivalence(const Scheme& scheme);

inline constexpr std::size_t kMaxLatticeRank = 24;

/// Every scheme equivalence, discrete first, full last; ordered by number of
/// colors, then lexicographically by color set.
std::vector<Equivalence> all_equivalences(const Scheme& scheme);

/**
 * nontrivial: minimal elements of E \ {Delta, VxV} and maximal elements of
 * E \ {VxV, Delta}; empty for primitive schemes.
 * literal: minimal elements of E \ {Delta} and maximal elements of
 * E \ {VxV}; a primitive scheme has the single maximal element Delta.
 */
enum class Extremes { nontrivial, literal };

std::vector<Equivalence> minimal_equivalences(const Scheme& scheme,
                                              Extremes convention = Extremes::nontrivial);
std::vector<Equivalence> maximal_equivalences(const Scheme& scheme,
                                              Extremes convention = Extremes::nontrivial);

/// Homogeneous, n >= 2. Primitive iff every non-diagonal color generates VxV.
bool is_primitive(const Scheme& scheme);

/// Degree-1 colors with their multiplication table.
struct ThinRadical {
  std::vector<Color> elements;                 // ascending, diagonal first
  std::vector<std::vector<std::size_t>> table;  // indices into elements

  std::size_t order() const noexcept { return elements.size(); }
  std::size_t index_of(Color c) const;  // elements.size() if absent
};

ThinRadical thin_radical(const Scheme& scheme);
bool is_regular(const Scheme& scheme);
/// Sum of d(S) over the colors S of <R>; throws not_thin_element unless
/// d(R) = 1.
std::size_t element_order(const Scheme& scheme, Color color);

}  // namespace asck
