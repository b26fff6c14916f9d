#include <doctest.h>

#include <vector>

#include "asck/scheme.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace asck;
using fixtures::matrix;

TEST_CASE("color matrix rejects malformed input") {
  CHECK_THROWS_AS(ColorMatrix(2, {0, 1, 1}), Error);
  try {
    ColorMatrix(2, {0, 2, 2, 0});
    FAIL("expected non_contiguous_colors");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::non_contiguous_colors);
  }
  CHECK_THROWS_AS(ColorMatrix(0, {}), Error);
}

TEST_CASE("normalize_colors keeps the order of original ids") {
  const std::vector<std::int64_t> raw = {7, 3, 3, 7};
  auto norm = normalize_colors(2, raw);
  CHECK(norm.matrix == matrix({{1, 0}, {0, 1}}));
  CHECK(norm.original_ids == std::vector<std::int64_t>{3, 7});
}

TEST_CASE("canonical recolor puts diagonal colors first") {
  // 5 marks the off-diagonal, 9 the diagonal
  auto m = canonical_recolor(matrix({{1, 0}, {0, 1}}));
  CHECK(m == matrix({{0, 1}, {1, 0}}));
  const std::vector<std::uint64_t> raw = {9, 5, 5, 9};
  CHECK(canonical_recolor(2, raw) == matrix({{0, 1}, {1, 0}}));
}

TEST_CASE("one-point scheme") {
  auto s = validate(matrix({{0}}));
  CHECK(s.rank() == 1);
  CHECK(s.fibers().size() == 1);
  CHECK(s.intersection_number(0, 0, 0) == 1);
  CHECK(s.degree(0) == 1);
  CHECK(s.relation_size(0) == 1);
  CHECK(s.is_homogeneous());
}

TEST_CASE("thin scheme of Z_4 from its difference matrix") {
  auto s = validate(matrix({{0, 1, 2, 3}, {3, 0, 1, 2}, {2, 3, 0, 1}, {1, 2, 3, 0}}));
  CHECK(s.rank() == 4);
  for (Color c = 0; c < 4; ++c) {
    CHECK(s.degree(c) == 1);
    CHECK(s.relation_size(c) == 4);
  }
  CHECK(s.intersection_number(2, 1, 1) == 1);
  CHECK(s.transpose(1) == 3);
  CHECK(s.transpose(2) == 2);
  CHECK(s.fibers() == std::vector<std::vector<Point>>{{0, 1, 2, 3}});
  CHECK(s == fixtures::z(4));
}

TEST_CASE("inconsistent intersection numbers are reported with witnesses") {
  const auto m = matrix({{0, 2, 1}, {2, 0, 1}, {1, 1, 0}});
  REQUIRE_FALSE(oracle::is_coherent(m));
  try {
    validate(m);
    FAIL("expected InconsistentIntersectionNumbers");
  } catch (const ValidationError& e) {
    CHECK(e.code() == Errc::inconsistent_intersection_numbers);
    REQUIRE(e.cells().size() == 2);
    const auto [a, b] = std::pair{e.cells()[0], e.cells()[1]};
    CHECK(m(a.row, a.col) == m(b.row, b.col));
    REQUIRE(e.index().has_value());
    const auto [r, s] = *e.index();
    const auto ca = oracle::pair_counts(m, a.row, a.col)[r][s];
    const auto cb = oracle::pair_counts(m, b.row, b.col)[r][s];
    CHECK(ca != cb);
    CHECK(e.counts() == std::pair<std::size_t, std::size_t>{ca, cb});
  }
}

TEST_CASE("a color mixing diagonal and off-diagonal cells is rejected") {
  try {
    validate(matrix({{0, 0}, {1, 1}}));
    FAIL("expected NotAPartitionOfDiagonal");
  } catch (const ValidationError& e) {
    CHECK(e.code() == Errc::not_a_partition_of_diagonal);
    REQUIRE(e.cells().size() == 2);
    CHECK(e.cells()[0].row == e.cells()[0].col);
    CHECK(e.cells()[1].row != e.cells()[1].col);
  }
}

TEST_CASE("a relation without a transposed color is rejected") {
  // color 1 = {(0,1),(1,2)}, its transpose cells (1,0),(2,1) carry 2 and 1.
  try {
    validate(matrix({{0, 1, 2}, {2, 0, 1}, {2, 1, 0}}));
    FAIL("expected NotTransposeClosed");
  } catch (const ValidationError& e) {
    CHECK(e.code() == Errc::not_transpose_closed);
    CHECK(e.cells().size() == 2);
  }
}

TEST_CASE("degrees and relation sizes") {
  auto k5 = fixtures::complete(5);
  CHECK(k5.degree(1) == 4);
  CHECK(k5.degree(0) == 1);
  CHECK(k5.relation_size(1) == 20);
  auto z6 = fixtures::z(6);
  for (Color c = 0; c < 6; ++c) CHECK(z6.relation_size(c) == 6);
  CHECK_THROWS_AS(z6.degree(6), Error);
}

TEST_CASE("closure of the path 0->1->2 separates points into fibers") {
  Digraph path = fixtures::digraph(3, {{0, 1}, {1, 2}});
  auto s = wl_closure(encode_digraph(path));
  CHECK(s.fibers().size() >= 2);
  CHECK_FALSE(s.is_homogeneous());
  // Per-fiber row counts are constant and relate to sizes by fiber order.
  for (Color c = 0; c < s.rank(); ++c) {
    auto view = s.relation(c);
    CHECK(s.relation_size(c) == s.degree(c) * s.fibers()[view.source_fiber].size());
  }
}

TEST_CASE("stored tensor matches brute-force counts and transpose symmetry") {
  for (auto s : {fixtures::z(6), fixtures::complete(4), fixtures::z(1),
                 wreath(fixtures::z(3), fixtures::z(2)),
                 wl_closure(encode_digraph(fixtures::digraph(3, {{0, 1}, {1, 2}})))}) {
    const auto& m = s.matrix();
    const std::size_t r = s.rank();
    for (Color t = 0; t < r; ++t) {
      const auto cell = s.first_cell(t);
      const auto counts = oracle::pair_counts(m, cell.row, cell.col);
      for (Color a = 0; a < r; ++a)
        for (Color b = 0; b < r; ++b) {
          CHECK(s.intersection_number(t, a, b) == counts[a][b]);
          CHECK(s.intersection_number(t, a, b) ==
                s.intersection_number(s.transpose(t), s.transpose(b), s.transpose(a)));
        }
    }
    // sum_T c^T_{RS} |T| equals the number of (u, v, w) with (u,v) in R,
    // (v,w) in S.
    for (Color a = 0; a < r; ++a)
      for (Color b = 0; b < r; ++b) {
        std::size_t lhs = 0, brute = 0;
        for (Color t = 0; t < r; ++t) lhs += s.intersection_number(t, a, b) * s.relation_size(t);
        for (Point u = 0; u < s.size(); ++u)
          for (Point v = 0; v < s.size(); ++v)
            for (Point w = 0; w < s.size(); ++w)
              if (m(u, v) == a && m(v, w) == b) ++brute;
        CHECK(lhs == brute);
      }
    CHECK(validate(s.matrix()) == s);
  }
}

TEST_CASE("degree equals the intersection number with the diagonal") {
  auto s = wreath(fixtures::z(2), fixtures::complete(3));
  for (Color c = 0; c < s.rank(); ++c) {
    CHECK(s.degree(c) == s.intersection_number(s.diagonal_colors()[0], c, s.transpose(c)));
    CHECK(s.relation_size(c) == s.degree(c) * s.size());
  }
}

TEST_CASE("on-demand intersection numbers above the tensor cap") {
  auto s = fixtures::z(70);
  CHECK_FALSE(s.stores_tensor());
  CHECK(s.intersection_number(5, 2, 3) == 1);
  CHECK(s.intersection_number(5, 2, 4) == 0);
  CHECK(s.product_colors(69, 2) == std::vector<Color>{1});
  CHECK(fixtures::z(8).stores_tensor());
}
