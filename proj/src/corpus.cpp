#include "asck/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "asck/constructions.hpp"
#include "asck/formats.hpp"
#include "asck/report.hpp"

namespace asck {
namespace {

struct NamedGroup {
  std::string name;
  CayleyTable table;
};

CayleyTable product_of(std::initializer_list<std::size_t> orders) {
  auto it = orders.begin();
  CayleyTable t = cyclic_table(*it);
  for (++it; it != orders.end(); ++it) t = direct_product(t, cyclic_table(*it));
  return t;
}

// The non-cyclic abelian groups of order at most 16.
std::vector<NamedGroup> abelian_groups() {
  return {
      {"Z2xZ2", product_of({2, 2})},       {"Z2xZ4", product_of({2, 4})},
      {"Z2xZ2xZ2", product_of({2, 2, 2})}, {"Z3xZ3", product_of({3, 3})},
      {"Z2xZ6", product_of({2, 6})},       {"Z4xZ4", product_of({4, 4})},
      {"Z2xZ8", product_of({2, 8})},       {"Z2xZ2xZ4", product_of({2, 2, 4})},
      {"Z2^4", product_of({2, 2, 2, 2})},
  };
}

std::vector<NamedGroup> nonabelian_groups(std::size_t max_n) {
  std::vector<NamedGroup> out;
  for (std::size_t m = 3; 2 * m <= std::min<std::size_t>(max_n, 24); ++m)
    out.push_back({"D" + std::to_string(m), dihedral_table(m)});
  out.push_back({"Q8", quaternion_table()});
  out.push_back({"A4", permutation_group_table({{1, 2, 0, 3}, {1, 0, 3, 2}})});
  out.push_back({"S4", permutation_group_table({{1, 2, 3, 0}, {1, 0, 2, 3}})});
  return out;
}

// Groups used as Cayley digraph carriers.
std::vector<NamedGroup> small_groups(std::size_t max_order) {
  std::vector<NamedGroup> out;
  for (std::size_t m = 4; m <= max_order; ++m)
    out.push_back({"Z" + std::to_string(m), cyclic_table(m)});
  for (auto& g : abelian_groups())
    if (g.table.order() <= max_order) out.push_back(std::move(g));
  for (auto& g : nonabelian_groups(max_order))
    if (g.table.order() <= max_order) out.push_back(std::move(g));
  return out;
}

bool generates(const CayleyTable& t, const std::vector<std::uint32_t>& set) {
  std::vector<char> seen(t.order(), 0);
  std::vector<std::uint32_t> stack{t.identity()};
  seen[t.identity()] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto g = stack.back();
    stack.pop_back();
    for (auto s : set) {
      const auto h = t(g, s);
      if (!seen[h]) {
        seen[h] = 1;
        ++count;
        stack.push_back(h);
      }
    }
  }
  return count == t.order();
}

Digraph path(std::size_t n) {
  Digraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    g.add_arc(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return g;
}

enum class Job { theorem1, corollary2, fiber_reduction, quotient_restriction, primitive,
                 maximal, counterexample };

const char* job_name(Job j) {
  switch (j) {
    case Job::theorem1: return "theorem1";
    case Job::corollary2: return "corollary2";
    case Job::fiber_reduction: return "fiber-reduction";
    case Job::quotient_restriction: return "quotient-restriction";
    case Job::primitive: return "primitive-p-scheme";
    case Job::maximal: return "maximal-equivalences";
    case Job::counterexample: return "wreath-counterexample";
  }
  return "";
}

struct Task {
  Job job;
  std::size_t entry;  // corpus index; unused for counterexamples
  unsigned p;
  unsigned q;
  std::size_t equivalence;
};

unsigned thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ASCK_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

std::string_view to_string(Generator g) {
  switch (g) {
    case Generator::thin_cyclic: return "thin-cyclic";
    case Generator::thin_abelian: return "thin-abelian";
    case Generator::thin_nonabelian: return "thin-nonabelian";
    case Generator::trivial: return "trivial";
    case Generator::wreath: return "wreath";
    case Generator::wl_cayley: return "wl-cayley";
    case Generator::wl_random: return "wl-random";
    case Generator::wl_orbit: return "wl-orbit";
    case Generator::wl_union: return "wl-union";
  }
  return "unknown";
}

void CorpusSpec::check() const {
  if (max_n == 0 || max_n > 64)
    throw Error(Errc::invalid_argument, "max n must be in 1..64, got " + std::to_string(max_n));
  if (primes.empty()) throw Error(Errc::invalid_argument, "prime list is empty");
  for (unsigned p : primes)
    if (!is_prime(p)) throw Error(Errc::invalid_argument, std::to_string(p) + " is not prime");
  if (generators.empty()) throw Error(Errc::invalid_argument, "no generators selected");
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Digraph random_strongly_connected(SplitMix64& rng, std::size_t n, unsigned chord_percent) {
  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  Digraph g(n);
  if (n == 1) return g;
  for (std::size_t i = 0; i < n; ++i) g.add_arc(order[i], order[(i + 1) % n]);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && !g.has_arc(u, v) && rng.below(100) < chord_percent) g.add_arc(u, v);
  return g;
}

std::vector<CorpusEntry> build_corpus(const CorpusSpec& spec) {
  spec.check();
  std::vector<CorpusEntry> out;
  std::set<std::vector<Color>> seen;
  auto add = [&](Generator gen, std::string name, Scheme s) {
    if (s.size() > spec.max_n) return;
    const auto& e = s.matrix().entries();
    if (!seen.insert(std::vector<Color>(e.begin(), e.end())).second) return;
    out.push_back({gen, std::move(name), std::move(s)});
  };
  auto selected = [&](Generator g) {
    return std::find(spec.generators.begin(), spec.generators.end(), g) != spec.generators.end();
  };
  SplitMix64 rng(spec.seed);

  if (selected(Generator::thin_cyclic))
    for (std::size_t m = 1; m <= std::min(spec.max_cyclic, spec.max_n); ++m)
      add(Generator::thin_cyclic, "Z" + std::to_string(m), thin_scheme(cyclic_table(m)));

  if (selected(Generator::thin_abelian))
    for (const auto& g : abelian_groups())
      add(Generator::thin_abelian, g.name, thin_scheme(g.table));

  if (selected(Generator::thin_nonabelian))
    for (const auto& g : nonabelian_groups(spec.max_n))
      add(Generator::thin_nonabelian, g.name, thin_scheme(g.table));

  if (selected(Generator::trivial))
    for (std::size_t n = 2; n <= std::min<std::size_t>(12, spec.max_n); ++n)
      add(Generator::trivial, "K" + std::to_string(n), trivial_scheme(n));

  if (selected(Generator::wreath)) {
    auto z = [](std::size_t m) { return thin_scheme(cyclic_table(m)); };
    for (std::size_t p : {2, 3, 5})
      for (std::size_t q : {2, 3, 5})
        if (p * q <= spec.max_n)
          add(Generator::wreath, "Z" + std::to_string(p) + " wr Z" + std::to_string(q),
              wreath(z(p), z(q)));
    std::vector<std::pair<std::string, Scheme>> factors;
    for (std::size_t m = 2; m <= 8; ++m) factors.emplace_back("Z" + std::to_string(m), z(m));
    for (std::size_t m = 3; m <= 5; ++m)
      factors.emplace_back("K" + std::to_string(m), trivial_scheme(m));
    factors.emplace_back("Z2xZ2", thin_scheme(product_of({2, 2})));
    factors.emplace_back("D3", thin_scheme(dihedral_table(3)));
    for (const auto& [a, inner] : factors)
      for (const auto& [b, outer] : factors)
        if (inner.size() * outer.size() <= spec.max_n)
          add(Generator::wreath, a + " wr " + b, wreath(inner, outer));
    add(Generator::wreath, "Z2 wr Z2 wr Z2", wreath(wreath(z(2), z(2)), z(2)));
    add(Generator::wreath, "Z3 wr Z3 wr Z2", wreath(wreath(z(3), z(3)), z(2)));
    add(Generator::wreath, "Z2 wr Z3 wr Z2", wreath(wreath(z(2), z(3)), z(2)));
    add(Generator::wreath, "Z2 wr Z2 wr Z2 wr Z2",
        wreath(wreath(wreath(z(2), z(2)), z(2)), z(2)));
  }

  if (selected(Generator::wl_cayley)) {
    const auto groups = small_groups(std::min(spec.cayley_max_order, spec.max_n));
    for (std::size_t i = 0; i < spec.random_cayley_count && !groups.empty(); ++i) {
      const auto& g = groups[rng.below(groups.size())];
      const bool symmetric = rng.below(2) == 0;
      const auto density = 15 + rng.below(40);
      std::vector<std::uint32_t> connection;
      do {
        std::vector<char> in(g.table.order(), 0);
        for (std::uint32_t h = 0; h < g.table.order(); ++h)
          if (h != g.table.identity() && rng.below(100) < density) {
            in[h] = 1;
            if (symmetric) in[g.table.inverse(h)] = 1;
          }
        connection.clear();
        for (std::uint32_t h = 0; h < g.table.order(); ++h)
          if (in[h]) connection.push_back(h);
      } while (connection.empty() || !generates(g.table, connection));
      add(Generator::wl_cayley, "cayley " + g.name + " #" + std::to_string(i),
          wl_closure(encode_digraph(cayley_digraph(g.table, connection))));
    }
  }

  if (selected(Generator::wl_random)) {
    const std::size_t top = std::min(spec.random_max_vertices, spec.max_n);
    for (std::size_t i = 0; i < spec.random_digraph_count && top >= 2; ++i) {
      const std::size_t n = 2 + rng.below(top - 1);
      const auto chords = static_cast<unsigned>(rng.below(40));
      add(Generator::wl_random, "random n" + std::to_string(n) + " #" + std::to_string(i),
          wl_closure(encode_digraph(random_strongly_connected(rng, n, chords))));
    }
  }

  if (selected(Generator::wl_orbit)) {
    std::vector<NamedGroup> groups;
    for (std::size_t m = 1; m <= 6; ++m) groups.push_back({"Z" + std::to_string(m), cyclic_table(m)});
    groups.push_back({"Z2xZ2", product_of({2, 2})});
    groups.push_back({"D3", dihedral_table(3)});
    const std::size_t top = std::min(spec.random_max_vertices, spec.max_n);
    for (std::size_t i = 0; i < spec.orbit_count; ++i) {
      const auto& g = groups[rng.below(groups.size())];
      const std::size_t m = g.table.order();
      const std::size_t copies = 2 + rng.below(2);
      if (m * copies > top) continue;
      // (x, c) has index c * m + x; arcs (x, c) -> (x t, d) for t in T[c][d]
      Digraph d(m * copies);
      for (std::size_t c = 0; c < copies; ++c)
        for (std::size_t e = 0; e < copies; ++e)
          for (std::uint32_t t = 0; t < m; ++t) {
            if (rng.below(100) >= 30 || (c == e && t == g.table.identity())) continue;
            for (std::uint32_t x = 0; x < m; ++x)
              d.add_arc(static_cast<Vertex>(c * m + x), static_cast<Vertex>(e * m + g.table(x, t)));
          }
      add(Generator::wl_orbit, "orbit " + g.name + " x" + std::to_string(copies) + " #" +
                                   std::to_string(i),
          wl_closure(encode_digraph(d)));
    }
  }

  if (selected(Generator::wl_union)) {
    for (std::size_t a = 1; a <= 6; ++a)
      for (std::size_t b = a; b <= 6; ++b)
        add(Generator::wl_union, "C" + std::to_string(a) + " + C" + std::to_string(b),
            wl_closure(encode_digraph(disjoint_union(directed_cycle(a), directed_cycle(b)))));
    for (std::size_t n = 2; n <= 6; ++n) {
      add(Generator::wl_union, "P" + std::to_string(n), wl_closure(encode_digraph(path(n))));
      add(Generator::wl_union, "C" + std::to_string(n) + " + P2",
          wl_closure(encode_digraph(disjoint_union(directed_cycle(n), path(2)))));
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
    return std::pair{a.generator, a.scheme.size()} < std::pair{b.generator, b.scheme.size()};
  });
  return out;
}

bool CorpusResult::all_fatal_agree() const {
  for (const auto& t : tallies)
    if (t.fatal_disagree > 0) return false;
  return true;
}

CorpusResult run_corpus(const std::vector<CorpusEntry>& corpus, const CorpusSpec& spec,
                        unsigned threads) {
  spec.check();
  // lattices are computed once per scheme, before the parallel phase
  std::vector<std::vector<Equivalence>> lattices(corpus.size());
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Scheme& s = corpus[i].scheme;
    tasks.push_back({Job::corollary2, i, 2, 0, 0});
    for (unsigned p : spec.primes) tasks.push_back({Job::fiber_reduction, i, p, 0, 0});
    if (!s.is_homogeneous()) continue;
    const bool lattice = s.rank() <= kMaxLatticeRank;
    if (lattice) lattices[i] = all_equivalences(s);
    for (unsigned p : spec.primes) {
      tasks.push_back({Job::theorem1, i, p, 0, 0});
      if (s.size() >= 2) tasks.push_back({Job::primitive, i, p, 0, 0});
      if (lattice) {
        tasks.push_back({Job::maximal, i, p, 0, 0});
        for (std::size_t e = 0; e < lattices[i].size(); ++e)
          tasks.push_back({Job::quotient_restriction, i, p, 0, e});
      }
    }
  }
  for (unsigned p : {2u, 3u, 5u})
    for (unsigned q : {2u, 3u, 5u})
      if (p != q && p * q <= spec.max_n) tasks.push_back({Job::counterexample, 0, p, q, 0});

  std::vector<TheoremReport> reports(tasks.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t k; (k = cursor.fetch_add(1)) < tasks.size();) {
      const Task& t = tasks[k];
      try {
        const Scheme* s = t.job == Job::counterexample ? nullptr : &corpus[t.entry].scheme;
        switch (t.job) {
          case Job::theorem1: reports[k] = theorem1_check(*s, t.p); break;
          case Job::corollary2: reports[k] = corollary2_check(*s); break;
          case Job::fiber_reduction: reports[k] = fiber_reduction_check(*s, t.p); break;
          case Job::quotient_restriction:
            reports[k] = quotient_restriction_check(*s, lattices[t.entry][t.equivalence], t.p);
            break;
          case Job::primitive: reports[k] = primitive_p_scheme_check(*s, t.p); break;
          case Job::maximal: reports[k] = maximal_equivalences_check(*s, t.p); break;
          case Job::counterexample: reports[k] = wreath_counterexample_check(t.p, t.q); break;
        }
      } catch (const std::exception& e) {
        TheoremReport r;
        r.theorem = job_name(t.job);
        r.p = t.p;
        r.agree = false;
        r.witnesses.push_back({"exception", std::nullopt, std::nullopt, {}});
        r.details.emplace_back("error", e.what());
        reports[k] = std::move(r);
      }
    }
  };
  const unsigned n_threads = std::min<std::size_t>(thread_count(threads), std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  CorpusResult result;
  result.schemes = corpus.size();
  for (const auto& e : corpus) {
    result.homogeneous += e.scheme.is_homogeneous();
    const std::string gen(to_string(e.generator));
    if (result.by_generator.empty() || result.by_generator.back().first != gen)
      result.by_generator.emplace_back(gen, 0);
    ++result.by_generator.back().second;
  }
  std::map<std::string, std::size_t> slot;
  for (Job j : {Job::theorem1, Job::corollary2, Job::fiber_reduction, Job::quotient_restriction,
                Job::primitive, Job::maximal, Job::counterexample}) {
    slot[job_name(j)] = result.tallies.size();
    result.tallies.push_back({job_name(j)});
  }
  std::set<std::size_t> dumped;
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    const Task& t = tasks[k];
    const TheoremReport& r = reports[k];
    CheckTally& tally = result.tallies[slot.at(job_name(t.job))];
    ++tally.runs;
    tally.lhs_true += r.lhs;
    tally.rhs_true += r.rhs;
    if (r.agree) {
      ++tally.agree;
      continue;
    }
    const std::string name = t.job == Job::counterexample
                                 ? "Z" + std::to_string(t.p) + " wr Z" + std::to_string(t.q)
                                 : corpus[t.entry].name;
    result.disagreements.emplace_back(name, r);
    if (!r.fatal) {
      ++tally.findings;
      continue;
    }
    ++tally.fatal_disagree;
    if (t.job != Job::counterexample && dumped.insert(t.entry).second)
      result.reproducers.emplace_back(name, to_ccm(corpus[t.entry].scheme.matrix()));
  }
  return result;
}

std::string format_summary(const CorpusResult& result, const CorpusSpec& spec, bool machine) {
  std::string primes;
  for (unsigned p : spec.primes) primes += (primes.empty() ? "" : ",") + std::to_string(p);
  if (machine) {
    nlohmann::json j;
    j["seed"] = spec.seed;
    j["max_n"] = spec.max_n;
    j["primes"] = spec.primes;
    j["schemes"] = result.schemes;
    j["homogeneous"] = result.homogeneous;
    j["by_generator"] = nlohmann::json::object();
    for (const auto& [g, c] : result.by_generator) j["by_generator"][g] = c;
    j["checks"] = nlohmann::json::array();
    for (const auto& t : result.tallies)
      j["checks"].push_back({{"check", t.check},
                             {"runs", t.runs},
                             {"agree", t.agree},
                             {"fatal_disagree", t.fatal_disagree},
                             {"findings", t.findings},
                             {"lhs_true", t.lhs_true},
                             {"rhs_true", t.rhs_true}});
    j["disagreements"] = nlohmann::json::array();
    for (const auto& [name, r] : result.disagreements) {
      auto rj = to_json(r, false);
      rj["scheme"] = name;
      j["disagreements"].push_back(std::move(rj));
    }
    j["all_agree"] = result.all_fatal_agree();
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "corpus seed=" << spec.seed << " max_n=" << spec.max_n << " primes=" << primes << "\n";
  out << "schemes: " << result.schemes << " (homogeneous " << result.homogeneous << ")\n";
  for (const auto& [g, c] : result.by_generator) out << "  " << g << ": " << c << "\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-24s %8s %8s %9s %9s %9s %9s\n", "check", "runs", "agree",
                "disagree", "findings", "lhs-true", "rhs-true");
  out << line;
  for (const auto& t : result.tallies) {
    std::snprintf(line, sizeof line, "%-24s %8zu %8zu %9zu %9zu %9zu %9zu\n", t.check.c_str(),
                  t.runs, t.agree, t.fatal_disagree, t.findings, t.lhs_true, t.rhs_true);
    out << line;
  }
  for (const auto& [name, r] : result.disagreements)
    out << (r.fatal ? "DISAGREE " : "finding ") << r.theorem << " on " << name
        << (r.p ? " p=" + std::to_string(*r.p) : std::string{}) << "\n";
  out << "result: " << (result.all_fatal_agree() ? "all checks agree" : "DISAGREEMENT") << "\n";
  return out.str();
}

}  // namespace asck
