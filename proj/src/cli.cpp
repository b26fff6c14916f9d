#include "asck/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "asck/closure.hpp"
#include "asck/constructions.hpp"
#include "asck/corpus.hpp"
#include "asck/formats.hpp"
#include "asck/pscheme.hpp"
#include "asck/report.hpp"

namespace asck::cli {
namespace {

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_all(const std::string& path, Io& io) {
  std::stringstream buf;
  if (path == "-") {
    buf << io.in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw FormatError(path, 0, "cannot open file");
    buf << file.rdbuf();
  }
  return buf.str();
}

std::string source_name(const std::string& path) { return path == "-" ? "<stdin>" : path; }

ColorMatrix load_matrix(const std::string& path, Io& io) {
  std::istringstream text(read_all(path, io));
  try {
    return read_ccm(text, source_name(path));
  } catch (const NonContiguousColors& e) {
    io.err << "note: " << e.what() << "\n";
    return e.normalized().matrix;
  }
}

Scheme load_scheme(const std::string& path, Io& io) { return validate(load_matrix(path, io)); }

void emit_ccm(const ColorMatrix& m, const std::string& output, Io& io) {
  if (output.empty() || output == "-") {
    write_ccm(io.out, m);
    return;
  }
  std::ofstream file(output);
  if (!file) throw FormatError(output, 0, "cannot write file");
  write_ccm(file, m);
}

int emit_report(const TheoremReport& r, bool machine, Io& io) {
  if (machine)
    io.out << to_json(r).dump(2) << "\n";
  else
    io.out << to_text(r);
  return r.agree ? kOk : kDisagreement;
}

std::string color_list(const std::vector<Color>& colors) {
  std::string s = "{";
  for (std::size_t i = 0; i < colors.size(); ++i) s += (i ? "," : "") + std::to_string(colors[i]);
  return s + "}";
}

std::string class_list(const std::vector<std::vector<Point>>& classes) {
  std::string s;
  for (const auto& c : classes) s += (s.empty() ? "" : " ") + color_list(c);
  return s;
}

int cmd_info(const Scheme& s, bool machine, Io& io) {
  if (machine) {
    nlohmann::json j;
    j["n"] = s.size();
    j["rank"] = s.rank();
    j["homogeneous"] = s.is_homogeneous();
    j["fibers"] = s.fibers();
    j["colors"] = nlohmann::json::array();
    for (Color c = 0; c < s.rank(); ++c)
      j["colors"].push_back({{"color", c},
                             {"diagonal", s.is_diagonal(c)},
                             {"transpose", s.transpose(c)},
                             {"degree", s.degree(c)},
                             {"size", s.relation_size(c)}});
    io.out << j.dump(2) << "\n";
    return kOk;
  }
  io.out << "n: " << s.size() << "\n";
  io.out << "rank: " << s.rank() << "\n";
  io.out << "homogeneous: " << (s.is_homogeneous() ? "true" : "false") << "\n";
  io.out << "fibers: " << class_list(s.fibers()) << "\n";
  for (Color c = 0; c < s.rank(); ++c)
    io.out << "color " << c << ": size " << s.relation_size(c) << " degree " << s.degree(c)
           << " transpose " << s.transpose(c) << (s.is_diagonal(c) ? " diagonal" : "") << "\n";
  return kOk;
}

int cmd_closed_sets(const Scheme& s, bool machine, Io& io) {
  const auto all = all_equivalences(s);
  const auto minimal = minimal_equivalences(s);
  const auto maximal = maximal_equivalences(s);
  std::optional<bool> primitive;
  if (s.size() >= 2) primitive = is_primitive(s);
  auto index_of = [&](const Equivalence& e) {
    for (std::size_t i = 0; i < all.size(); ++i)
      if (all[i] == e) return i;
    return all.size();
  };
  if (machine) {
    nlohmann::json j;
    j["equivalences"] = nlohmann::json::array();
    for (const auto& e : all)
      j["equivalences"].push_back({{"colors", e.colors.colors}, {"classes", e.classes}});
    j["minimal"] = nlohmann::json::array();
    for (const auto& e : minimal) j["minimal"].push_back(index_of(e));
    j["maximal"] = nlohmann::json::array();
    for (const auto& e : maximal) j["maximal"].push_back(index_of(e));
    j["primitive"] = primitive ? nlohmann::json(*primitive) : nlohmann::json(nullptr);
    io.out << j.dump(2) << "\n";
    return kOk;
  }
  io.out << "equivalences: " << all.size() << "\n";
  for (std::size_t i = 0; i < all.size(); ++i)
    io.out << "  [" << i << "] colors " << color_list(all[i].colors.colors) << " classes "
           << class_list(all[i].classes) << "\n";
  io.out << "minimal:";
  for (const auto& e : minimal) io.out << " [" << index_of(e) << "]";
  io.out << "\nmaximal:";
  for (const auto& e : maximal) io.out << " [" << index_of(e) << "]";
  io.out << "\n";
  if (primitive) io.out << "primitive: " << (*primitive ? "true" : "false") << "\n";
  return kOk;
}

int cmd_check_p(const Scheme& s, unsigned p, bool machine, Io& io) {
  const PSchemeVerdict v = is_p_scheme(s, p);
  if (machine) {
    nlohmann::json j{{"p", p}, {"p_scheme", v.holds}};
    if (!v.holds) j["witness"] = {{"color", *v.color}, {"size", v.size}};
    io.out << j.dump(2) << "\n";
  } else if (v.holds) {
    io.out << "p-scheme: true (p = " << p << ")\n";
  } else {
    io.out << "p-scheme: false (p = " << p << "): color " << *v.color << " has size " << v.size
           << "\n";
  }
  return v.holds ? kOk : kPredicateFalse;
}

int cmd_corpus(CorpusSpec spec, bool machine, unsigned threads, const std::string& repro_dir,
               Io& io) {
  spec.check();
  const auto corpus = build_corpus(spec);
  const auto result = run_corpus(corpus, spec, threads);
  io.out << format_summary(result, spec, machine);
  if (result.all_fatal_agree()) return kOk;
  std::filesystem::create_directories(repro_dir);
  for (std::size_t i = 0; i < result.reproducers.size(); ++i) {
    const auto path = std::filesystem::path(repro_dir) / ("reproducer-" + std::to_string(i) + ".ccm");
    std::ofstream file(path);
    file << "# " << result.reproducers[i].first << "\n" << result.reproducers[i].second;
    io.err << "reproducer written: " << path.string() << "\n";
  }
  return kDisagreement;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"coherent configuration toolkit", "asck"};
  app.require_subcommand(1);

  std::string file, second, output;
  unsigned p = 0;
  bool machine = false;

  auto* validate_cmd = app.add_subcommand("validate", "validate a .ccm file");
  validate_cmd->add_option("file", file, ".ccm file or -")->required();

  auto* info_cmd = app.add_subcommand("info", "n, rank, fibers, degrees and sizes");
  info_cmd->add_option("file", file, ".ccm file or -")->required();
  info_cmd->add_flag("--machine", machine, "JSON output");

  auto* closed_cmd = app.add_subcommand("closed-sets", "lattice of scheme equivalences");
  closed_cmd->add_option("file", file, ".ccm file or -")->required();
  closed_cmd->add_flag("--machine", machine, "JSON output");

  auto* check_cmd = app.add_subcommand("check-p", "is every relation size a power of p");
  check_cmd->add_option("file", file, ".ccm file or -")->required();
  check_cmd->add_option("-p", p, "prime")->required();
  check_cmd->add_flag("--machine", machine, "JSON output");

  auto* th1_cmd = app.add_subcommand("theorem1", "p-scheme vs cyclically p-partite basis digraphs");
  th1_cmd->add_option("file", file, ".ccm file or -")->required();
  th1_cmd->add_option("-p", p, "prime")->required();
  th1_cmd->add_flag("--machine", machine, "JSON output");

  auto* cor2_cmd = app.add_subcommand("corollary2", "2-scheme vs bipartite basis graphs");
  cor2_cmd->add_option("file", file, ".ccm file or -")->required();
  cor2_cmd->add_flag("--machine", machine, "JSON output");

  auto* gen_cmd = app.add_subcommand("gen", "generate a scheme as .ccm");
  gen_cmd->require_subcommand(1);
  std::size_t order = 0;
  auto* gen_cyclic = gen_cmd->add_subcommand("thin-cyclic", "thin scheme of Z_m");
  gen_cyclic->add_option("m", order, "group order")->required()->check(CLI::PositiveNumber);
  gen_cyclic->add_option("-o", output, "output file (default stdout)");
  auto* gen_wreath = gen_cmd->add_subcommand("wreath", "wreath product inner by outer");
  gen_wreath->add_option("inner", file, ".ccm file or -")->required();
  gen_wreath->add_option("outer", second, ".ccm file or -")->required();
  gen_wreath->add_option("-o", output, "output file (default stdout)");
  auto* gen_wl = gen_cmd->add_subcommand("wl-close", "coherent closure of a digraph");
  gen_wl->add_option("file", file, ".dg file or -")->required();
  gen_wl->add_option("-o", output, "output file (default stdout)");

  CorpusSpec spec;
  unsigned threads = 0;
  std::string repro_dir = ".";
  auto* corpus_cmd = app.add_subcommand("corpus", "run every check over the generated corpus");
  corpus_cmd->add_option("--max-n", spec.max_n, "largest point count (at most 64)")
      ->capture_default_str();
  corpus_cmd->add_option("--primes", spec.primes, "comma separated primes")
      ->delimiter(',')
      ->capture_default_str();
  corpus_cmd->add_option("--seed", spec.seed, "seed for random digraphs")->capture_default_str();
  corpus_cmd->add_option("--threads", threads, "worker threads (0 = ASCK_THREADS or auto)");
  corpus_cmd->add_option("--repro-dir", repro_dir, "where reproducers are written");
  corpus_cmd->add_flag("--machine", machine, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*validate_cmd) {
      const Scheme s = load_scheme(file, io);
      out << "valid: n=" << s.size() << " r=" << s.rank() << " fibers=" << s.fibers().size()
          << "\n";
      return kOk;
    }
    if (*info_cmd) return cmd_info(load_scheme(file, io), machine, io);
    if (*closed_cmd) return cmd_closed_sets(load_scheme(file, io), machine, io);
    if (*check_cmd) return cmd_check_p(load_scheme(file, io), p, machine, io);
    if (*th1_cmd) return emit_report(theorem1_check(load_scheme(file, io), p), machine, io);
    if (*cor2_cmd) return emit_report(corollary2_check(load_scheme(file, io)), machine, io);
    if (*gen_cyclic) {
      emit_ccm(thin_scheme(cyclic_table(order)).matrix(), output, io);
      return kOk;
    }
    if (*gen_wreath) {
      if (file == "-" && second == "-") throw FormatError("<stdin>", 0, "only one input may be -");
      emit_ccm(wreath(load_scheme(file, io), load_scheme(second, io)).matrix(), output, io);
      return kOk;
    }
    if (*gen_wl) {
      std::istringstream text(read_all(file, io));
      emit_ccm(wl_closure(encode_digraph(read_dg(text, source_name(file)))).matrix(), output, io);
      return kOk;
    }
    if (*corpus_cmd) return cmd_corpus(spec, machine, threads, repro_dir, io);
  } catch (const ValidationError& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    for (const auto& c : e.cells()) err << "  witness cell (" << c.row << "," << c.col << ")\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kDisagreement;
  }
  return kInputError;
}

}  // namespace asck::cli
