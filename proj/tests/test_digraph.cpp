#include <doctest.h>

#include <set>

#include "asck/constructions.hpp"
#include "asck/corpus.hpp"
#include "asck/digraph.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace asck;
using fixtures::digraph;
using fixtures::z;

namespace {

using Classes = std::vector<std::vector<Vertex>>;

Digraph cycle4_with_chord() { return digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}); }

}  // namespace

TEST_CASE("digraph construction") {
  CHECK_THROWS_AS(digraph(2, {{0, 1}, {0, 1}}), Error);
  CHECK_THROWS_AS(digraph(2, {{0, 2}}), Error);
  auto g = digraph(2, {{0, 0}, {0, 1}});
  CHECK(g.has_loops());
  CHECK_FALSE(g.is_symmetric());
  CHECK(g.arc_count() == 2);
}

TEST_CASE("basis digraphs of Z_4") {
  auto s = z(4);
  CHECK(basis_digraph(s, 1) == directed_cycle(4));
  CHECK(basis_digraph(s, 2) == digraph(4, {{0, 2}, {1, 3}, {2, 0}, {3, 1}}));
  auto d = basis_digraph(s, 0);
  CHECK(d.arc_count() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(d.has_arc(v, v));
}

TEST_CASE("basis digraph support of a cross-fiber color") {
  auto s = wl_closure(encode_digraph(digraph(3, {{0, 1}, {1, 2}})));
  for (Color c = 0; c < s.rank(); ++c) {
    auto g = basis_digraph(s, c);
    auto view = s.relation(c);
    std::set<Point> support(s.fibers()[view.source_fiber].begin(),
                            s.fibers()[view.source_fiber].end());
    support.insert(s.fibers()[view.target_fiber].begin(), s.fibers()[view.target_fiber].end());
    CHECK(g.size() == support.size());
    CHECK(g.arc_count() == s.relation_size(c));
    for (auto [u, v] : g.arcs()) CHECK(s(g.label(u), g.label(v)) == c);
  }
}

TEST_CASE("basis graphs") {
  auto s = z(4);
  auto g1 = basis_graph(s, 1);
  CHECK(g1.arc_count() == 8);
  CHECK(g1.is_symmetric());
  CHECK_FALSE(g1.has_loops());
  CHECK(basis_graph(s, 2) == digraph(4, {{0, 2}, {1, 3}, {2, 0}, {3, 1}}));
  auto tri = basis_graph(fixtures::complete(3), 1);
  CHECK(tri.arc_count() == 6);
  try {
    basis_graph(s, 0);
    FAIL("expected DiagonalColor");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::diagonal_color);
  }
}

TEST_CASE("strongly connected components") {
  CHECK(strongly_connected_components(directed_cycle(4)) == Classes{{0, 1, 2, 3}});
  CHECK(strongly_connected_components(digraph(4, {{0, 2}, {2, 0}, {1, 3}, {3, 1}})) ==
        Classes{{0, 2}, {1, 3}});
  CHECK(strongly_connected_components(digraph(3, {{0, 1}, {1, 2}})) == Classes{{0}, {1}, {2}});
  CHECK(is_strongly_connected(directed_cycle(5)));
  CHECK_FALSE(is_strongly_connected(digraph(3, {{0, 1}, {1, 2}})));
  CHECK(weakly_connected_components(digraph(3, {{0, 1}, {1, 2}})) == Classes{{0, 1, 2}});
}

TEST_CASE("period") {
  for (std::size_t p = 1; p <= 9; ++p) CHECK(period(directed_cycle(p)) == p);
  // Cycles through the chord have length 3, the outer cycle has length 4.
  REQUIRE(oracle::cycle_length_gcd(cycle4_with_chord()) == 1);
  CHECK(period(cycle4_with_chord()) == 1);
  CHECK(period(digraph(1, {{0, 0}})) == 1);
  try {
    period(Digraph(1));
    FAIL("expected NoArcs");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_arcs);
  }
  try {
    period(digraph(3, {{0, 1}, {1, 2}}));
    FAIL("expected NotStronglyConnected");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_strongly_connected);
  }
}

TEST_CASE("cyclic p-partitions") {
  auto c4 = cyclically_p_partite(directed_cycle(4), 2);
  REQUIRE(c4);
  CHECK(c4->classes == Classes{{0, 2}, {1, 3}});
  CHECK_FALSE(cyclically_p_partite(directed_cycle(3), 2));
  auto two = cyclically_p_partite(digraph(4, {{0, 2}, {2, 0}, {1, 3}, {3, 1}}), 2);
  REQUIRE(two);
  CHECK(is_valid_cyclic_partition(digraph(4, {{0, 2}, {2, 0}, {1, 3}, {3, 1}}), *two));
  try {
    cyclically_p_partite(directed_cycle(3), 1);
    FAIL("expected InvalidP");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_p);
  }
  // components that do not cover all residues must be shifted together
  auto path_pair = digraph(4, {{0, 1}, {2, 3}});
  CHECK(cyclically_p_partite(path_pair, 3));
  CHECK(cyclically_p_partite(path_pair, 4));
  CHECK_FALSE(cyclically_p_partite(path_pair, 5));
  CHECK_FALSE(cyclically_p_partite(Digraph(1), 2));
  CHECK(cyclically_p_partite(Digraph(3), 3));
  CHECK_FALSE(cyclically_p_partite(digraph(2, {{0, 0}, {0, 1}}), 2));
}

TEST_CASE("cyclic partitions agree with exhaustive labelings") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(7);
    Digraph g(n);
    const unsigned density = static_cast<unsigned>(rng.below(40));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (u != v && rng.below(100) < density) g.add_arc(u, v);
    for (unsigned p : {2u, 3u, 4u, 5u}) {
      auto part = cyclically_p_partite(g, p);
      CHECK(part.has_value() == oracle::cyclically_p_partite(g, p));
      if (part) CHECK(is_valid_cyclic_partition(g, *part));
    }
  }
}

TEST_CASE("bipartite check") {
  auto sq = basis_graph(z(4), 1);
  auto col = is_bipartite(sq);
  REQUIRE(col);
  CHECK(col->classes[0] == std::vector<Vertex>{0, 2});
  CHECK(col->classes[1] == std::vector<Vertex>{1, 3});
  CHECK_FALSE(is_bipartite(basis_graph(fixtures::complete(3), 1)));
  CHECK(is_bipartite(digraph(4, {{0, 2}, {2, 0}, {1, 3}, {3, 1}})));
  try {
    is_bipartite(digraph(2, {{0, 1}}));
    FAIL("expected NotSymmetric");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_symmetric);
  }
  try {
    is_bipartite(digraph(1, {{0, 0}}));
    FAIL("expected HasLoops");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::has_loops);
  }
  // isolated vertices go to the smaller class, ties to class 0
  auto iso = is_bipartite(digraph(5, {{0, 1}, {1, 0}, {1, 2}, {2, 1}}));
  REQUIRE(iso);
  CHECK(iso->classes[0] == std::vector<Vertex>{0, 2, 4});
  CHECK(iso->classes[1] == std::vector<Vertex>{1, 3});
  CHECK_FALSE(is_bipartite(Digraph(1)));
  CHECK(is_bipartite(Digraph(2)));
}

TEST_CASE("cyclically 2-partite iff the symmetrized graph is bipartite") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(8);
    Digraph g(n);
    const unsigned density = static_cast<unsigned>(rng.below(35));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (u != v && rng.below(100) < density) g.add_arc(u, v);
    CHECK(cyclically_p_partite(g, 2).has_value() ==
          is_bipartite(oracle::symmetrize(g)).has_value());
  }
}

TEST_CASE("period against brute force and p | period") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng.below(8);
    auto g = random_strongly_connected(rng, n, static_cast<unsigned>(rng.below(30)));
    REQUIRE(is_strongly_connected(g));
    if (g.arc_count() == 0) continue;
    const unsigned per = period(g);
    CHECK(per == oracle::cycle_length_gcd(g));
    for (unsigned p : {2u, 3u, 5u, 7u})
      CHECK(cyclically_p_partite(g, p).has_value() == (per % p == 0));
  }
}

TEST_CASE("disjoint unions of strongly connected pieces") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 120; ++trial) {
    Digraph g;
    std::vector<Digraph> parts;
    const std::size_t k = 1 + rng.below(3);
    for (std::size_t i = 0; i < k; ++i) {
      auto piece = random_strongly_connected(rng, 2 + rng.below(5),
                                             static_cast<unsigned>(rng.below(25)));
      parts.push_back(piece);
      g = disjoint_union(g, piece);
    }
    for (unsigned p : {2u, 3u, 4u, 5u}) {
      bool all = true;
      for (const auto& piece : parts) all = all && cyclically_p_partite(piece, p).has_value();
      CHECK(cyclically_p_partite(g, p).has_value() == all);
    }
  }
}

TEST_CASE("weak and strong components coincide for basis digraphs of homogeneous schemes") {
  for (auto s : {z(6), z(9), wreath(z(3), z(2)), thin_scheme(dihedral_table(4)),
                 fixtures::complete(4)}) {
    for (Color c = 0; c < s.rank(); ++c) {
      if (s.is_diagonal(c)) continue;
      auto g = basis_digraph(s, c);
      CHECK(strongly_connected_components(g) == weakly_connected_components(g));
    }
  }
}

TEST_CASE("large component counts short-circuit") {
  // eleven disjoint 2-cycles are cyclically 2-partite; 12 isolated points
  // cover any p <= 12
  Digraph g;
  for (int i = 0; i < 11; ++i) g = disjoint_union(g, directed_cycle(2));
  CHECK(cyclically_p_partite(g, 2));
  CHECK_FALSE(cyclically_p_partite(g, 3));
  CHECK(cyclically_p_partite(Digraph(12), 11));
  // 10 directed paths of length 1 cover residues two at a time
  Digraph paths;
  for (int i = 0; i < 5; ++i) paths = disjoint_union(paths, digraph(2, {{0, 1}}));
  CHECK(cyclically_p_partite(paths, 10));
  CHECK_FALSE(cyclically_p_partite(paths, 11));
}
