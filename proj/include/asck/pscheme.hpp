#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asck/closure.hpp"
#include "asck/scheme.hpp"

namespace asck {

bool is_prime(std::uint64_t p);
/// Repeated division; 1 = p^0 counts.
bool is_power_of(std::uint64_t value, std::uint64_t p);

struct PSchemeVerdict {
  bool holds = true;
  std::optional<Color> color;  // first color whose size is not a power of p
  std::size_t size = 0;

  explicit operator bool() const noexcept { return holds; }
};

/// Throws not_prime.
PSchemeVerdict is_p_scheme(const Scheme& scheme, unsigned p);

struct Witness {
  std::string what;
  std::optional<Color> color;
  std::optional<std::uint64_t> value;
  std::vector<std::vector<std::uint32_t>> classes;

  bool operator==(const Witness&) const = default;
};

/// iff: agree = (lhs == rhs). implies: agree = (!lhs || rhs).
enum class Relation { iff, implies };

struct TheoremReport {
  std::string theorem;
  Relation relation = Relation::iff;
  std::uint64_t scheme_hash = 0;
  std::size_t n = 0;
  std::size_t r = 0;
  std::optional<unsigned> p;
  std::string lhs_label;
  std::string rhs_label;
  bool lhs = false;
  bool rhs = false;
  bool agree = false;
  /// Disagreement on a non-fatal check is logged as a finding.
  bool fatal = true;
  std::vector<Witness> witnesses;
  std::vector<std::pair<std::string, std::string>> details;
  std::chrono::microseconds elapsed{0};
};

/**
 * p-scheme iff every non-reflexive basis digraph is cyclically p-partite.
 * The left side reads relation sizes only; the right side reads the basis
 * digraphs only.
 */
TheoremReport theorem1_check(const Scheme& scheme, unsigned p);

/// 2-scheme iff every basis graph is bipartite; any scheme.
TheoremReport corollary2_check(const Scheme& scheme);

/// p-scheme iff every fiber restriction is a p-scheme. Non-fatal.
TheoremReport fiber_reduction_check(const Scheme& scheme, unsigned p);

/// p-scheme iff the quotient by e and the restrictions to its classes are;
/// also checks |R| = |R_{V/E}| * |R_{X,Y}| for every color and class pair.
TheoremReport quotient_restriction_check(const Scheme& scheme, const Equivalence& e,
                                         unsigned p);

/// Primitive p-scheme iff regular on p points with every non-reflexive
/// basis digraph a directed p-cycle.
TheoremReport primitive_p_scheme_check(const Scheme& scheme, unsigned p);

/// At least two maximal equivalences (literal convention) and every
/// nontrivial block restriction a p-scheme implies a p-scheme.
TheoremReport maximal_equivalences_check(const Scheme& scheme, unsigned p);

/// Builds wreath(thin Z_p, thin Z_q) and checks the counterexample shape:
/// a unique minimal = maximal equivalence whose classes carry the regular
/// scheme on p points, the block condition holds, the two-maximal
/// condition fails, and the scheme is not a p-scheme.
TheoremReport wreath_counterexample_check(unsigned p, unsigned q);

/// Every (color, class pair) tuple satisfying the size product rule; the
/// first failure is returned.
struct MultiplicativityResult {
  bool holds = true;
  std::size_t tuples_checked = 0;
  std::optional<Color> color;
  std::optional<std::pair<std::size_t, std::size_t>> class_pair;
};
MultiplicativityResult check_multiplicativity(const Scheme& scheme, const Equivalence& e);

}  // namespace asck
