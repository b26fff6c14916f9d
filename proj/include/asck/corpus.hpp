#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "asck/digraph.hpp"
#include "asck/pscheme.hpp"
#include "asck/scheme.hpp"

namespace asck {

enum class Generator {
  thin_cyclic,
  thin_abelian,
  thin_nonabelian,
  trivial,
  wreath,
  wl_cayley,
  wl_random,
  wl_orbit,
  wl_union,
};

std::string_view to_string(Generator g);

struct CorpusSpec {
  std::vector<Generator> generators = {
      Generator::thin_cyclic, Generator::thin_abelian, Generator::thin_nonabelian,
      Generator::trivial,     Generator::wreath,       Generator::wl_cayley,
      Generator::wl_random,   Generator::wl_orbit,     Generator::wl_union,
  };
  std::size_t max_n = 32;
  std::vector<unsigned> primes = {2, 3, 5, 7, 11};
  std::uint64_t seed = 1;
  std::size_t max_cyclic = 24;
  std::size_t random_cayley_count = 200;
  std::size_t random_digraph_count = 100;
  std::size_t random_max_vertices = 12;
  std::size_t cayley_max_order = 16;
  /// Digraphs on several copies of a small group, invariant under its
  /// regular action on each copy.
  std::size_t orbit_count = 400;

  /// Throws invalid_argument unless max_n <= 64, primes nonempty and prime.
  void check() const;
};

struct CorpusEntry {
  Generator generator;
  std::string name;
  Scheme scheme;
};

/// Deterministic for a given spec; sorted by (generator, n, generation order).
std::vector<CorpusEntry> build_corpus(const CorpusSpec& spec);

/// Seeded generator with a fixed output sequence on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// Hamiltonian cycle on a random vertex order plus random chords.
Digraph random_strongly_connected(SplitMix64& rng, std::size_t n, unsigned chord_percent);

struct CheckTally {
  std::string check;
  std::size_t runs = 0;
  std::size_t agree = 0;
  std::size_t fatal_disagree = 0;
  std::size_t findings = 0;  // non-fatal disagreements
  std::size_t lhs_true = 0;
  std::size_t rhs_true = 0;
};

struct CorpusResult {
  std::size_t schemes = 0;
  std::size_t homogeneous = 0;
  /// Scheme count per generator, in generator order.
  std::vector<std::pair<std::string, std::size_t>> by_generator;
  std::vector<CheckTally> tallies;
  /// Reports whose sides disagree, in corpus order, with the entry name.
  std::vector<std::pair<std::string, TheoremReport>> disagreements;
  /// .ccm dumps of schemes behind fatal disagreements.
  std::vector<std::pair<std::string, std::string>> reproducers;

  bool all_fatal_agree() const;
};

/// Runs every theorem check over the corpus. threads = 0 picks
/// ASCK_THREADS or the hardware concurrency.
CorpusResult run_corpus(const std::vector<CorpusEntry>& corpus, const CorpusSpec& spec,
                        unsigned threads = 0);

std::string format_summary(const CorpusResult& result, const CorpusSpec& spec, bool machine);

}  // namespace asck
