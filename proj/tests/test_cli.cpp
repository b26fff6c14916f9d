#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "asck/cli.hpp"
#include "asck/constructions.hpp"
#include "asck/formats.hpp"
#include "fixtures.hpp"

using namespace asck;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("asck_test_" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("gen thin-cyclic piped into theorem1") {
  auto gen = run({"gen", "thin-cyclic", "4"});
  REQUIRE(gen.code == cli::kOk);
  CHECK(gen.out == to_ccm(fixtures::z(4).matrix()));
  auto th = run({"theorem1", "-", "-p", "2"}, gen.out);
  CHECK(th.code == cli::kOk);
  CHECK(th.out.find("agree: true, p-scheme: true") != std::string::npos);
}

TEST_CASE("check-p on a non-p-scheme exits 1 with a witness") {
  auto gen = run({"gen", "thin-cyclic", "6"});
  auto r = run({"check-p", "-", "-p", "2"}, gen.out);
  CHECK(r.code == cli::kPredicateFalse);
  CHECK(r.out.find("size 6") != std::string::npos);
  auto ok = run({"check-p", "-", "-p", "3"}, run({"gen", "thin-cyclic", "9"}).out);
  CHECK(ok.code == cli::kOk);
  auto not_prime = run({"check-p", "-", "-p", "4"}, gen.out);
  CHECK(not_prime.code == cli::kInputError);
}

TEST_CASE("validate reports witness cells for a broken matrix") {
  auto path = temp_file("broken.ccm", "ccm 3 3\n0 2 1\n2 0 1\n1 1 0\n");
  auto r = run({"validate", path.string()});
  CHECK(r.code == cli::kInputError);
  CHECK(r.err.find("inconsistent") != std::string::npos);
  CHECK(r.err.find("(") != std::string::npos);
  std::filesystem::remove(path);

  auto good = run({"validate", "-"}, run({"gen", "thin-cyclic", "3"}).out);
  CHECK(good.code == cli::kOk);
}

TEST_CASE("format errors name the file and line") {
  auto path = temp_file("bad.ccm", "ccm 2 2\n0 1\n1 x\n");
  auto r = run({"info", path.string()});
  CHECK(r.code == cli::kInputError);
  CHECK(r.err.find(path.string() + ":3") != std::string::npos);
  std::filesystem::remove(path);
  CHECK(run({"info", "/nonexistent/file.ccm"}).code == cli::kInputError);
  CHECK(run({"frobnicate"}).code == cli::kInputError);
}

TEST_CASE("info, closed-sets and corollary2") {
  auto z4 = run({"gen", "thin-cyclic", "4"}).out;
  auto info = run({"info", "-"}, z4);
  CHECK(info.code == cli::kOk);
  CHECK(info.out.find("n: 4") != std::string::npos);
  CHECK(info.out.find("rank: 4") != std::string::npos);
  auto cs = run({"closed-sets", "-"}, z4);
  CHECK(cs.code == cli::kOk);
  CHECK(cs.out.find("equivalences: 3") != std::string::npos);
  auto c2 = run({"corollary2", "-"}, z4);
  CHECK(c2.code == cli::kOk);
  auto machine = run({"corollary2", "-", "--machine"}, z4);
  auto j = nlohmann::json::parse(machine.out);
  CHECK(j["theorem"] == "corollary2");
  CHECK(j["agree"] == true);
}

TEST_CASE("gen wreath and wl-close write ccm, optionally to a file") {
  auto z3 = temp_file("z3.ccm", run({"gen", "thin-cyclic", "3"}).out);
  auto z2 = temp_file("z2.ccm", run({"gen", "thin-cyclic", "2"}).out);
  auto w = run({"gen", "wreath", z3.string(), z2.string()});
  CHECK(w.code == cli::kOk);
  CHECK(w.out == to_ccm(wreath(fixtures::z(3), fixtures::z(2)).matrix()));

  auto dg = temp_file("c4.dg", "dg 4 4\n0 1\n1 2\n2 3\n3 0\n");
  auto out_path = std::filesystem::temp_directory_path() / "asck_test_out.ccm";
  auto wl = run({"gen", "wl-close", dg.string(), "-o", out_path.string()});
  CHECK(wl.code == cli::kOk);
  std::ifstream written(out_path);
  std::stringstream buf;
  buf << written.rdbuf();
  CHECK(buf.str() == to_ccm(fixtures::z(4).matrix()));
  for (const auto& p : {z3, z2, dg, out_path}) std::filesystem::remove(p);
}

TEST_CASE("corpus subcommand is deterministic") {
  std::vector<std::string> args = {"corpus", "--max-n", "10", "--primes", "2,3", "--seed", "4"};
  auto a = run(args);
  auto b = run(args);
  CHECK(a.code == cli::kOk);
  CHECK(a.out == b.out);
  CHECK(a.out.find("seed=4") != std::string::npos);
  auto bad = run({"corpus", "--max-n", "100", "--primes", "2"});
  CHECK(bad.code == cli::kInputError);
  auto bad_p = run({"corpus", "--max-n", "8", "--primes", "2,4"});
  CHECK(bad_p.code == cli::kInputError);
}
