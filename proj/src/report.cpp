#include "asck/report.hpp"

#include <sstream>

namespace asck {
namespace {

const char* flag(bool b) { return b ? "true" : "false"; }

std::string classes_str(const std::vector<std::vector<std::uint32_t>>& classes) {
  std::string s;
  for (const auto& c : classes) {
    s += s.empty() ? "{" : " {";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    s += "}";
  }
  return s;
}

}  // namespace

std::string_view to_string(Relation relation) {
  return relation == Relation::iff ? "iff" : "implies";
}

std::string to_text(const TheoremReport& r, bool with_timing) {
  std::ostringstream out;
  out << "theorem: " << r.theorem << " (" << to_string(r.relation) << ")\n";
  out << "scheme: n=" << r.n << " r=" << r.r << " hash=" << std::hex << r.scheme_hash << std::dec
      << "\n";
  if (r.p) out << "p: " << *r.p << "\n";
  out << "agree: " << flag(r.agree) << ", " << r.lhs_label << ": " << flag(r.lhs) << "\n";
  out << "lhs " << r.lhs_label << ": " << flag(r.lhs) << "\n";
  out << "rhs " << r.rhs_label << ": " << flag(r.rhs) << "\n";
  for (const auto& [k, v] : r.details) out << k << ": " << v << "\n";
  for (const auto& w : r.witnesses) {
    out << "witness " << w.what;
    if (w.color) out << " color " << *w.color;
    if (w.value) out << " size " << *w.value;
    if (!w.classes.empty()) out << " classes " << classes_str(w.classes);
    out << "\n";
  }
  if (with_timing) out << "elapsed: " << r.elapsed.count() << " us\n";
  return out.str();
}

nlohmann::json to_json(const TheoremReport& r, bool with_timing) {
  nlohmann::json j;
  j["theorem"] = r.theorem;
  j["relation"] = std::string(to_string(r.relation));
  j["n"] = r.n;
  j["r"] = r.r;
  j["p"] = r.p ? nlohmann::json(*r.p) : nlohmann::json(nullptr);
  j["hash"] = r.scheme_hash;
  j["lhs_label"] = r.lhs_label;
  j["rhs_label"] = r.rhs_label;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["agree"] = r.agree;
  j["fatal"] = r.fatal;
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : r.witnesses) {
    nlohmann::json wj{{"what", w.what}};
    wj["color"] = w.color ? nlohmann::json(*w.color) : nlohmann::json(nullptr);
    wj["value"] = w.value ? nlohmann::json(*w.value) : nlohmann::json(nullptr);
    wj["classes"] = w.classes;
    j["witnesses"].push_back(std::move(wj));
  }
  j["details"] = nlohmann::json::object();
  for (const auto& [k, v] : r.details) j["details"][k] = v;
  if (with_timing) j["elapsed_us"] = r.elapsed.count();
  return j;
}

}  // namespace asck
