#include "supercrystal/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "supercrystal/decomposition.hpp"
#include "supercrystal/examples.hpp"
#include "supercrystal/module_realization.hpp"
#include "supercrystal/serialize.hpp"

namespace supercrystal {

Weight parse_lowest_form(const std::string& text) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("weight entries must be integers: " + text);
    }
    if (used != item.size()) throw std::invalid_argument("weight entries must be integers: " + text);
    values.push_back(v);
  }
  if (values.size() < 3) throw std::invalid_argument("weight needs n0,n1,...,nN with N >= 2: " + text);
  return Weight::from_lowest_form(values);
}

namespace {

using Json = nlohmann::json;

class SuiteReport {
 public:
  explicit SuiteReport(std::string suite) : suite_(std::move(suite)) {}
  void add(const std::string& name, bool pass, Json details = Json::object()) {
    if (!pass) pass_ = false;
    checks_.push_back({{"name", name}, {"status", pass ? "pass" : "fail"}, {"details", std::move(details)}});
  }
  Json finish(const AlgebraType& type, int cap) const {
    return {{"suite", suite_},
            {"family", family_name(type.family())},
            {"n", type.rank()},
            {"cap", cap},
            {"status", pass_ ? "pass" : "fail"},
            {"checks", checks_}};
  }

 private:
  std::string suite_;
  bool pass_ = true;
  Json checks_ = Json::array();
};

Json label_diff_json(const LabelDiff& d, const AlgebraType& type) {
  return {{"missing", labels_to_json(d.missing, type)}, {"extra", labels_to_json(d.extra, type)}};
}

std::vector<SpinClass> second_classes(const AlgebraType& type) {
  if (type.family() == Family::D) return {SpinClass::plus, SpinClass::minus};
  return {SpinClass::plus};
}

std::string class_name(SpinClass c) { return c == SpinClass::plus ? "plus" : "minus"; }

Json suite_axioms(const AlgebraType& type, int cap) {
  SuiteReport r("axioms");
  std::vector<std::pair<std::string, SuperGraph>> graphs;
  graphs.emplace_back("spin", SuperGraph(type, SuperFactor::spin(type).vertices(cap)));
  if (type.family() == Family::D)
    graphs.emplace_back("spin_minus", SuperGraph(type, SuperFactor::spin_minus(type).vertices(cap)));
  graphs.emplace_back("omega0", SuperGraph(type, SuperFactor::omega0(type).vertices(cap)));
  graphs.emplace_back("spin x spin", spin_spin_graph(type, false, cap));
  for (const auto& [name, g] : graphs) {
    const auto failures = check_crystal_axioms(g);
    Json d{{"vertices", g.size()}, {"violations", Json::array()}};
    for (std::size_t i = 0; i < failures.size() && i < 20; ++i) d["violations"].push_back(failures[i]);
    r.add(name, failures.empty(), d);
  }
  return r.finish(type, cap);
}

Json suite_koga(const AlgebraType& type, int cap) {
  SuiteReport r("koga");
  const ClassicalCrystal first = ClassicalCrystal::spin(type);
  for (const SpinClass cls : second_classes(type)) {
    const ClassicalCrystal second = ClassicalCrystal::spin(type, cls);
    const auto [membership, comps] = classical_components_with_membership({first, second});
    std::size_t idx = 0, bad = 0;
    Json examples = Json::array();
    for (const auto& u : first.vertices())
      for (const auto& v : second.vertices()) {
        const ClassicalWeight expected = comps[membership[idx++]].label.lowest_weight;
        std::string got;
        bool ok = false;
        try {
          const ClassicalWeight w = koga_component(u[0], v[0], type).lowest_weight;
          ok = w == expected;
          got = w.to_string();
        } catch (const std::exception& e) {
          got = e.what();
        }
        if (!ok) {
          ++bad;
          if (examples.size() < 10)
            examples.push_back({{"u", u[0].to_string()}, {"v", v[0].to_string()}, {"koga", got}, {"bfs", expected.to_string()}});
        }
      }
    r.add("plus x " + class_name(cls), bad == 0, {{"pairs", idx}, {"mismatches", bad}, {"examples", examples}});
  }
  return r.finish(type, cap);
}

Json suite_zero_arrows(const AlgebraType& type, int cap) {
  SuiteReport r("zero_arrows");
  const SuperGraph g = spin_spin_graph(type, false, cap);
  const LabeledComponents comps = label_super_components(g);
  const ZeroArrowReport z = zero_arrow_relations(g, comps, 1);
  Json rels = Json::array();
  bool all_allowed = true;
  for (const auto& a : z.relations) {
    const bool ok = zero_arrow_allowed(a, type);
    all_allowed = all_allowed && ok;
    rels.push_back({{"source", a.source.to_string(type)},
                    {"target", a.target.to_string(type)},
                    {"side", a.side == Side::L ? "L" : "R"},
                    {"allowed", ok}});
  }
  r.add("relations allowed", all_allowed, {{"edges", z.edge_count}, {"relations", rels}});
  r.add("right arrows need a level-0 first factor", z.right_with_positive_first_level == 0,
        {{"violations", z.right_with_positive_first_level}});
  return r.finish(type, cap);
}

Json suite_omega0(const AlgebraType& type, int cap) {
  SuiteReport r("omega0");
  if (cap >= 1) {
    const LabeledCrystal lc = build_omega0(type, cap);
    const LabelDiff d = compare_labels(omega0_formula(type, cap), observed_labels(lc.components, cap));
    r.add("B(omega0) components", d.match(), label_diff_json(d, type));
  }
  const int n = type.rank();
  std::vector<std::vector<int>> forms = {{1}, {1, 1}, {1, 0, 1}, {2}};
  forms.push_back(std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
  forms.back()[0] = 1;
  forms.back()[static_cast<std::size_t>(n)] = 1;
  for (auto f : forms) {
    f.resize(static_cast<std::size_t>(n) + 1, 0);
    const Weight lambda = Weight::from_lowest_form(f);
    if (lambda.n0() > cap) continue;
    const SuperGraph g = typical_model(lambda, type, cap);
    const LabelDiff d = compare_labels(typical_structure_formula(lambda, type, cap),
                                       observed_labels(label_super_components(g), cap));
    r.add("typical B(" + lambda.to_string() + ") components", d.match(), label_diff_json(d, type));
  }
  return r.finish(type, cap);
}

Json suite_spin_spin(const AlgebraType& type, int cap) {
  SuiteReport r("spin_spin");
  for (const SpinClass cls : second_classes(type)) {
    const SuperFactor second = cls == SpinClass::plus ? SuperFactor::spin(type) : SuperFactor::spin_minus(type);
    const auto observed = decompose_super({SuperFactor::spin(type), second}, cap);
    const CompareReport c = compare(spin_spin_formula(type, cls, cap), observed.summary);
    r.add("plus x " + class_name(cls) + " formula", c.match(), compare_to_json(c));
    const auto exhaustive = decompose_super({SuperFactor::spin(type), second}, cap, LowestSearch::exhaustive);
    const bool same = exhaustive.summary.summands == observed.summary.summands;
    r.add("plus x " + class_name(cls) + " exhaustive search", same, {{"summands", exhaustive.summary.summands.size()}});
  }
  return r.finish(type, cap);
}

Json suite_examples(const AlgebraType& type, int cap) {
  SuiteReport r("examples");
  for (const WorkedExample& ex : {example_rank_two(), example_spin_omega0()}) {
    const std::string name = ex.type.name() + " " + ex.first.to_string() + " x " + ex.second.to_string();
    const auto observed =
        decompose_super({SuperFactor::irreducible(ex.first, ex.type), SuperFactor::irreducible(ex.second, ex.type)}, cap)
            .summary;
    const CompareReport listed = compare(summary_from_summands(ex.summands(cap), ex.type, cap), observed);
    r.add(name + " listed families", listed.match(), compare_to_json(listed));
    const CompareReport theorem = compare(typical_product_formula(ex.first, ex.second, ex.type, cap), observed);
    r.add(name + " product formula", theorem.match(), compare_to_json(theorem));
  }
  return r.finish(type, cap);
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output file " + path);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string suite_text(const Json& report) {
  std::ostringstream os;
  for (const auto& c : report["checks"])
    os << (c["status"] == "pass" ? "PASS " : "FAIL ") << report["suite"].get<std::string>() << ": "
       << c["name"].get<std::string>() << "\n";
  os << report["suite"].get<std::string>() << " " << report["status"].get<std::string>() << "\n";
  return os.str();
}

SuperFactor make_factor(const std::string& kind, const AlgebraType& type, std::vector<Weight>& weights,
                        std::size_t& next) {
  if (kind == "spin") return SuperFactor::spin(type);
  if (kind == "spin_minus") return SuperFactor::spin_minus(type);
  if (kind == "omega0") return SuperFactor::omega0(type);
  if (kind == "typical" || kind == "irreducible") {
    if (next >= weights.size()) throw std::invalid_argument("crystal '" + kind + "' needs a --weight");
    const Weight w = weights[next++];
    return kind == "typical" ? SuperFactor::typical(w, type) : SuperFactor::irreducible(w, type);
  }
  throw std::invalid_argument("unknown crystal '" + kind + "'");
}

}  // namespace

Json run_suite(const std::string& suite, const AlgebraType& type, int cap) {
  if (cap < 0) throw std::invalid_argument("cap must be non-negative");
  if (suite == "axioms") return suite_axioms(type, cap);
  if (suite == "koga") return suite_koga(type, cap);
  if (suite == "zero_arrows") return suite_zero_arrows(type, cap);
  if (suite == "omega0") return suite_omega0(type, cap);
  if (suite == "spin_spin") return suite_spin_spin(type, cap);
  if (suite == "examples") return suite_examples(type, cap);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crystal bases of the quantum superalgebras D(N,1) and B(N,1)", "supercrystal"};
  app.require_subcommand(1);

  std::string family = "D", output, format;
  int n = 4, cap = 4;
  std::vector<std::string> crystals{"spin"}, weight_texts;
  std::string suite, expected_path;
  bool exhaustive = false;

  auto common = [&](CLI::App* sub, int default_cap) {
    cap = default_cap;
    sub->add_option("--family", family, "D or B")->capture_default_str();
    sub->add_option("--n", n, "rank N >= 2")->capture_default_str();
    sub->add_option("--cap", cap, "truncation: total level for graphs, n0 for decompositions");
    sub->add_option("--output", output, "output path (default stdout)");
    sub->add_option("--format", format, "dot, json or text")->check(CLI::IsMember({"dot", "json", "text"}));
  };

  CLI::App* graph = app.add_subcommand("graph", "export a truncated crystal graph");
  common(graph, 2);
  graph->add_option("--crystal", crystals, "factor list: spin, spin_minus, omega0, typical, irreducible");
  graph->add_option("--weight", weight_texts, "n0,n1,...,nN for typical/irreducible factors, in order");

  CLI::App* decompose = app.add_subcommand("decompose", "decompose B(lambda') (x) B(lambda)");
  common(decompose, 8);
  decompose->add_option("--weight", weight_texts, "n0,n1,...,nN of each factor, first factor first")->required();
  decompose->add_option("--expected", expected_path, "JSON summary or weight list to compare against");
  decompose->add_flag("--exhaustive", exhaustive, "search every product word for lowest vertices");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify, 6);
  verify->add_option("--suite", suite, "axioms, koga, zero_arrows, omega0, spin_spin, examples")
      ->required()
      ->check(CLI::IsMember({"axioms", "koga", "zero_arrows", "omega0", "spin_spin", "examples"}));

  CLI::App* relations = app.add_subcommand("relations", "check the module relations, polarization and lattice");
  common(relations, 8);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    const AlgebraType type(parse_family(family), n);
    if (cap < 0) throw std::invalid_argument("cap must be non-negative");
    std::vector<Weight> weights;
    for (const auto& t : weight_texts) {
      weights.push_back(parse_lowest_form(t));
      if (weights.back().rank() != n) throw std::invalid_argument("weight " + t + " does not have N + 1 entries");
    }

    if (graph->parsed()) {
      std::vector<SuperFactor> factors;
      std::size_t next = 0;
      for (const auto& c : crystals) factors.push_back(make_factor(c, type, weights, next));
      const SuperGraph g(type, product_vertices(factors, cap));
      const std::string fmt = format.empty() ? "dot" : format;
      const std::string text =
          fmt == "dot" ? graph_to_dot(g) : fmt == "json" ? graph_to_json(g).dump(2) : graph_to_text(g);
      write_output(text, output, out);
      return kExitPass;
    }

    if (decompose->parsed()) {
      if (weights.size() != 2) throw std::invalid_argument("decompose takes exactly two --weight values");
      const std::vector<SuperFactor> factors{SuperFactor::irreducible(weights[0], type),
                                             SuperFactor::irreducible(weights[1], type)};
      const auto d = decompose_super(factors, cap, exhaustive ? LowestSearch::exhaustive : LowestSearch::seeded);
      Json report{{"family", family_name(type.family())},
                  {"n", n},
                  {"factors", {weight_to_json(weights[0]), weight_to_json(weights[1])}},
                  {"summary", summary_to_json(d.summary)}};
      bool match = true;
      if (weights[0].n0() >= 1 && weights[1].n0() >= 1) {
        const CompareReport c = compare(typical_product_formula(weights[0], weights[1], type, cap), d.summary);
        report["product_formula"] = compare_to_json(c);
        match = match && c.match();
      }
      if (!expected_path.empty()) {
        std::ifstream f(expected_path);
        if (!f) throw std::invalid_argument("cannot read expected file " + expected_path);
        const Json j = Json::parse(f);
        DecompositionSummary expected;
        if (j.is_array()) {
          std::vector<Weight> ws;
          for (const auto& w : j) ws.push_back(weight_from_json(w));
          expected = summary_from_summands(std::move(ws), type, cap);
        } else {
          expected = summary_from_summands(summary_from_json(j).summands, type, cap);
        }
        const CompareReport c = compare(expected, d.summary);
        report["expected"] = compare_to_json(c);
        match = match && c.match();
      }
      report["status"] = match ? "match" : "diff";
      std::string text = report.dump(2);
      if (format == "text") {
        std::ostringstream os;
        for (const auto& w : d.summary.summands) os << w.to_string() << "\n";
        os << report["status"].get<std::string>() << "\n";
        text = os.str();
      }
      write_output(text, output, out);
      if (!match) err << "decomposition differs from the prediction\n";
      return match ? kExitPass : kExitMismatch;
    }

    if (verify->parsed()) {
      const Json report = run_suite(suite, type, cap);
      write_output(format == "text" ? suite_text(report) : report.dump(2), output, out);
      return report["status"] == "pass" ? kExitPass : kExitMismatch;
    }

    if (relations->parsed()) {
      const SpinModule module(type, cap);
      const RelationReport rel = check_relations(module);
      const RelationReport pol = check_polarization_contravariance(module);
      const RelationReport lat = check_crystal_lattice(module);
      Json failures = Json::array();
      for (const auto* r : {&rel, &pol, &lat})
        for (const auto& f : relation_report_to_json(*r)) failures.push_back(f);
      const bool pass = failures.empty();
      Json report{{"family", family_name(type.family())},
                  {"n", n},
                  {"max_level", cap},
                  {"status", pass ? "pass" : "fail"},
                  {"checks", rel.checks + pol.checks + lat.checks},
                  {"boundary_skips", rel.boundary_skips + pol.boundary_skips + lat.boundary_skips},
                  {"failures", failures}};
      std::string text = report.dump(2);
      if (format == "text") {
        std::ostringstream os;
        for (const auto& f : failures)
          os << f["relation"].get<std::string>() << " at v" << f["basisLabel"].get<std::string>() << ": "
             << f["defect"].get<std::string>() << "\n";
        os << "relations " << (pass ? "pass" : "fail") << " (" << report["checks"] << " checks)\n";
        text = os.str();
      }
      write_output(text, output, out);
      return pass ? kExitPass : kExitMismatch;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace supercrystal
