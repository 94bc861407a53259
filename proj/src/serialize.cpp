#include "supercrystal/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace supercrystal {

Json weight_to_json(const Weight& w) {
  return Json{{"omega", std::vector<int>(w.coeffs().begin(), w.coeffs().end())}};
}

Weight weight_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("omega") || !j["omega"].is_array())
    throw std::invalid_argument("weight must be {\"omega\": [...]}");
  std::vector<int> c;
  for (const auto& x : j["omega"]) {
    if (!x.is_number_integer()) throw std::invalid_argument("weight coefficients must be integers");
    c.push_back(x.get<int>());
  }
  if (c.size() < 3) throw std::invalid_argument("weight needs at least three coefficients");
  return Weight(std::move(c));
}

Json ortho_to_json(const OrthoVector& x) {
  Json out = Json::array();
  for (const auto& r : x) out.push_back(to_string(r));
  return out;
}

Json summary_to_json(const DecompositionSummary& s) {
  Json comps = Json::array();
  for (std::size_t i = 0; i < s.summands.size();) {
    std::size_t j = i;
    while (j < s.summands.size() && s.summands[j] == s.summands[i]) ++j;
    comps.push_back({{"weight", weight_to_json(s.summands[i])}, {"multiplicity", j - i}});
    i = j;
  }
  Json table = Json::array();
  for (const auto& [w, c] : s.multiplicity) table.push_back({{"weight", weight_to_json(w)}, {"multiplicity", c}});
  return {{"cap", s.cap}, {"complete_below", s.complete_below}, {"components", comps}, {"weight_multiplicities", table}};
}

DecompositionSummary summary_from_json(const Json& j) {
  DecompositionSummary s;
  s.cap = j.at("cap").get<int>();
  s.complete_below = j.value("complete_below", s.cap);
  for (const auto& c : j.at("components")) {
    const Weight w = weight_from_json(c.at("weight"));
    const long m = c.value("multiplicity", 1L);
    for (long k = 0; k < m; ++k) s.summands.push_back(w);
  }
  std::sort(s.summands.begin(), s.summands.end());
  if (j.contains("weight_multiplicities"))
    for (const auto& c : j["weight_multiplicities"]) s.multiplicity[weight_from_json(c.at("weight"))] = c.at("multiplicity").get<long>();
  return s;
}

Json compare_to_json(const CompareReport& r) {
  Json missing = Json::array(), extra = Json::array(), mm = Json::array();
  for (const auto& w : r.missing) missing.push_back(weight_to_json(w));
  for (const auto& w : r.extra) extra.push_back(weight_to_json(w));
  for (const auto& m : r.multiplicity_mismatches)
    mm.push_back({{"weight", weight_to_json(m.weight)}, {"predicted", m.predicted}, {"observed", m.observed}});
  return {{"status", r.match() ? "match" : "diff"}, {"missing", missing}, {"extra", extra}, {"multiplicity_mismatches", mm}};
}

Json relation_report_to_json(const RelationReport& r) {
  Json out = Json::array();
  for (const auto& f : r.failures)
    out.push_back({{"relation", f.relation},
                   {"family", family_name(f.family)},
                   {"N", f.n},
                   {"basisLabel", f.basis_label},
                   {"defect", f.defect}});
  return out;
}

Json labels_to_json(const std::vector<SuperComponentLabel>& labels, const AlgebraType& type) {
  Json out = Json::array();
  for (const auto& l : labels)
    out.push_back({{"label", l.to_string(type)},
                   {"lowest", std::vector<int>(l.classical_lowest.coeffs().begin(), l.classical_lowest.coeffs().end())},
                   {"level", l.level}});
  return out;
}

Word parse_word(const std::string& text) {
  Word out;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in word: " + text);
    const std::size_t close = text.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("unterminated atom in word: " + text);
    const SpinElement signs = SpinElement::parse(text.substr(pos + 1, close - pos - 1));
    pos = close + 1;
    if (pos >= text.size() || text[pos] != '_') throw std::invalid_argument("expected '_' after atom: " + text);
    ++pos;
    std::size_t end = pos;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos) throw std::invalid_argument("missing level in word: " + text);
    out.push_back(Atom{signs, std::stoi(text.substr(pos, end - pos))});
    pos = end;
    skip_space();
    if (pos < text.size()) {
      if (text[pos] != 'x') throw std::invalid_argument("expected 'x' between atoms: " + text);
      ++pos;
      skip_space();
    }
  }
  return out;
}

Json graph_to_json(const SuperGraph& g) {
  Json vertices = Json::array(), edges = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i)
    vertices.push_back({{"id", i}, {"word", to_string(g.vertices()[i])}, {"weight", weight_to_json(word_weight(g.vertices()[i], g.type()))}});
  for (const auto& e : g.f_edges()) edges.push_back({{"source", e.source}, {"target", e.target}, {"index", e.index}});
  return {{"family", family_name(g.type().family())}, {"n", g.type().rank()}, {"vertices", vertices}, {"edges", edges}};
}

SuperGraph graph_from_json(const Json& j) {
  const AlgebraType type(parse_family(j.at("family").get<std::string>()), j.at("n").get<int>());
  std::vector<Word> words;
  for (const auto& v : j.at("vertices")) words.push_back(parse_word(v.at("word").get<std::string>()));
  return SuperGraph(type, std::move(words));
}

std::string graph_to_dot(const SuperGraph& g) {
  std::ostringstream os;
  os << "digraph \"" << g.type().name() << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < g.size(); ++i) os << "  v" << i << " [label=\"" << to_string(g.vertices()[i]) << "\"];\n";
  for (const auto& e : g.f_edges()) {
    os << "  v" << e.source << " -> v" << e.target << " [label=\"" << e.index << "\"";
    if (e.index == 0) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string graph_to_text(const SuperGraph& g) {
  std::ostringstream os;
  os << g.type().name() << ": " << g.size() << " vertices\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    os << i << ": " << to_string(g.vertices()[i]) << "  wt " << word_weight(g.vertices()[i], g.type()).to_string() << "\n";
  for (const auto& e : g.f_edges()) os << e.source << " -f" << e.index << "-> " << e.target << "\n";
  return os.str();
}

}  // namespace supercrystal
