#include <doctest.h>

#include <sstream>

#include "asck/constructions.hpp"
#include "asck/formats.hpp"
#include "fixtures.hpp"

using namespace asck;

TEST_CASE("ccm round trip") {
  for (auto s : {fixtures::z(5), fixtures::complete(3), wreath(fixtures::z(2), fixtures::z(3))}) {
    std::istringstream in(to_ccm(s.matrix()));
    CHECK(validate(read_ccm(in)) == s);
  }
  CHECK(to_ccm(fixtures::z(2).matrix()) == "ccm 2 2\n0 1\n1 0\n");
}

TEST_CASE("ccm comments and blank lines") {
  std::istringstream in("# thin Z_2\nccm 2 2\n\n0 1\n# middle\n1 0\n");
  CHECK(read_ccm(in) == fixtures::z(2).matrix());
}

TEST_CASE("ccm format errors carry line numbers") {
  auto expect_line = [](const std::string& text, std::size_t line) {
    std::istringstream in(text);
    try {
      read_ccm(in, "t.ccm");
      FAIL("expected FormatError");
    } catch (const FormatError& e) {
      CHECK(e.line() == line);
      CHECK(e.source() == "t.ccm");
      CHECK(std::string(e.what()).find("t.ccm:") == 0);
    }
  };
  expect_line("cm 2 2\n0 1\n1 0\n", 1);
  expect_line("ccm 2 2\n0 1\n1\n", 3);
  expect_line("ccm 2 2\n0 1 1\n1 0\n", 2);
  expect_line("ccm 2 2\n0 -1\n1 0\n", 2);
  expect_line("ccm 2 3\n0 1\n1 0\n", 1);
  expect_line("ccm 2 2\n0 1\n", 0);
  expect_line("ccm 2 2\n0 x\n1 0\n", 2);
}

TEST_CASE("non-contiguous ids are a recoverable error") {
  std::istringstream in("ccm 2 2\n0 5\n5 0\n");
  try {
    read_ccm(in);
    FAIL("expected NonContiguousColors");
  } catch (const NonContiguousColors& e) {
    CHECK(e.code() == Errc::non_contiguous_colors);
    CHECK(e.normalized().matrix == fixtures::z(2).matrix());
    CHECK(e.normalized().original_ids == std::vector<std::int64_t>{0, 5});
  }
}

TEST_CASE("dg format") {
  std::istringstream in("dg 3 3\n0 1\n1 2\n# loop\n2 2\n");
  auto g = read_dg(in);
  CHECK(g.size() == 3);
  CHECK(g.arc_count() == 3);
  CHECK(g.has_arc(2, 2));
  std::ostringstream out;
  write_dg(out, g);
  CHECK(out.str() == "dg 3 3\n0 1\n1 2\n2 2\n");

  std::istringstream dup("dg 2 2\n0 1\n0 1\n");
  try {
    read_dg(dup, "d.dg");
    FAIL("expected duplicate rejection");
  } catch (const FormatError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream range("dg 2 1\n0 2\n");
  CHECK_THROWS_AS(read_dg(range), FormatError);
  std::istringstream short_list("dg 2 2\n0 1\n");
  CHECK_THROWS_AS(read_dg(short_list), FormatError);
}
