#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kac/graph.hpp"
#include "kac/kl.hpp"
#include "kac/osp.hpp"
#include "kac/reduction.hpp"

using nlohmann::json;

namespace {

struct Options {
  std::string weight;
  std::string format = "table";
  int depth = -1;
  unsigned seed = 1;
  int n = 1;
};

// Table rows sorted by (length, move string).
std::vector<const kac::PathEntry*> sorted_entries(const kac::PathSet& ps) {
  std::vector<const kac::PathEntry*> rows;
  for (const auto& e : ps.paths) rows.push_back(&e);
  std::sort(rows.begin(), rows.end(), [](const auto* a, const auto* b) {
    auto ka = std::make_pair(a->length, kac::path_to_string(a->path));
    auto kb = std::make_pair(b->length, kac::path_to_string(b->path));
    return ka < kb;
  });
  return rows;
}

int cmd_diagram(const Options& o) {
  kac::WeightDiagram d = kac::diagram_of(kac::parse_weight(o.weight));
  if (o.format == "json") {
    std::string text = d.to_string();
    auto colon = text.find(':');
    json j{{"start", std::stoi(text.substr(1, colon - 1))},
           {"symbols", text.substr(colon + 1)}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << d.to_string() << "\n";
  }
  return 0;
}

int cmd_atypicality(const Options& o) {
  kac::Weight w = kac::parse_weight(o.weight);
  kac::AtypicalityData at = kac::atypicality(w);
  if (o.format == "json") {
    json pairs = json::array();
    for (auto [i, jdx] : at.pairs) pairs.push_back({i, jdx});
    std::cout << json{{"r", at.r},
                      {"pairs", pairs},
                      {"shared_values", at.shared_values}}
                     .dump()
              << "\n";
  } else {
    std::cout << "r = " << at.r << "\n";
    for (int s = 0; s < at.r; ++s) {
      std::cout << "(" << at.pairs[s].first << "," << at.pairs[s].second
                << ") value " << at.shared_values[s] << "\n";
    }
  }
  return 0;
}

int cmd_factors(const Options& o) {
  kac::Weight w = kac::parse_weight(o.weight);
  kac::PathSet ps = kac::enumerate_paths(kac::diagram_of(w));
  if (o.format == "json") {
    std::cout << kac::pathset_to_json(w, ps).dump() << "\n";
    return 0;
  }
  for (const auto* e : sorted_entries(ps)) {
    std::cout << kac::path_to_string(e->path) << "\t" << e->length << "\t"
              << kac::format_weight(e->weight) << "\n";
  }
  return 0;
}

int cmd_codes(const Options& o) {
  kac::Weight w = kac::parse_weight(o.weight);
  kac::PathSet ps = kac::enumerate_paths(kac::diagram_of(w));
  int r = kac::atypicality(w).r;
  if (o.format == "json") {
    std::cout << kac::pathset_to_json(w, ps).dump() << "\n";
    return 0;
  }
  for (const auto* e : sorted_entries(ps)) {
    kac::Code c = kac::path_to_code(e->path, r);
    std::cout << kac::path_to_string(e->path) << "\t";
    for (size_t t = 0; t < c.entries.size(); ++t) {
      std::cout << (t ? "," : "") << c.entries[t];
    }
    std::cout << "\t" << (c.label ? std::to_string(*c.label) : "-") << "\n";
  }
  return 0;
}

int cmd_layers(const Options& o) {
  kac::Weight w = kac::parse_weight(o.weight);
  kac::PrimitiveWeightGraph g = kac::build_graph(w);
  auto layers = kac::jantzen_layers(g);
  if (o.format == "json") {
    json out = json::array();
    for (const auto& layer : layers) {
      json row = json::array();
      for (int v : layer) {
        row.push_back(kac::path_to_string(g.vertices.paths[v].path));
      }
      out.push_back(row);
    }
    std::cout << json{{"layers", out}}.dump() << "\n";
    return 0;
  }
  for (size_t k = 0; k < layers.size(); ++k) {
    std::cout << "layer " << k << " (" << layers[k].size() << "):";
    for (int v : layers[k]) {
      std::cout << " " << kac::path_to_string(g.vertices.paths[v].path);
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_graph(const Options& o) {
  kac::Weight w = kac::parse_weight(o.weight);
  kac::PrimitiveWeightGraph g = kac::build_graph(w);
  if (o.format == "dot") {
    std::cout << kac::export_dot(g);
  } else if (o.format == "json") {
    std::cout << kac::export_json(g).dump() << "\n";
  } else {
    for (auto [u, v] : g.skeleton) {
      std::cout << kac::path_to_string(g.vertices.paths[u].path) << " -> "
                << kac::path_to_string(g.vertices.paths[v].path) << "\n";
    }
  }
  return 0;
}

int cmd_kl(const Options& o) {
  kac::Weight w = kac::parse_weight(o.weight);
  kac::ClosurePoset s = kac::closure_set(w, o.depth);
  auto a = kac::inverse_kl_matrix(s);
  kac::KLMatrix m = kac::kl_matrix(s);
  int lam = s.find(w);
  if (o.format == "json") {
    json pairs = json::array();
    for (int k = lam; k < static_cast<int>(s.weights.size()); ++k) {
      pairs.push_back({{"mu", kac::format_weight(s.weights[k])},
                       {"jantzen", a[lam][k].to_string()},
                       {"kl", m.p[lam][k].to_string()},
                       {"exact", static_cast<bool>(m.reliable[lam][k])}});
    }
    std::cout << json{{"truncated", s.truncated}, {"pairs", pairs}}.dump()
              << "\n";
    return 0;
  }
  for (int k = lam; k < static_cast<int>(s.weights.size()); ++k) {
    std::cout << kac::format_weight(s.weights[k]) << "\t"
              << a[lam][k].to_string() << "\t" << m.p[lam][k].to_string()
              << (m.reliable[lam][k] ? "" : "\t(truncated)") << "\n";
  }
  return 0;
}

int cmd_reduce(const Options& o) {
  kac::Weight w = kac::parse_weight(o.weight);
  kac::InvarianceReport rep = kac::check_block_invariance(w);
  kac::WeightDiagram core = kac::diagram_of(rep.core);
  json j{{"core", kac::format_weight(rep.core)},
         {"diagram", core.to_string()},
         {"ok", rep.ok},
         {"path_count", rep.path_count},
         {"length_histogram", rep.length_histogram},
         {"failures", rep.failures}};
  if (o.format == "json") {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "core " << kac::format_weight(rep.core) << "\n"
              << "diagram " << core.to_string() << "\n"
              << "invariance " << (rep.ok ? "ok" : "FAILED") << "\n";
    for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
  }
  return rep.ok ? 0 : 1;
}

int cmd_osp(const Options& o) {
  kac::OspWeight w = kac::parse_osp_weight(o.n, o.weight);
  kac::OspStructure st = kac::osp_structure(w, o.depth < 0 ? 6 : o.depth);
  if (o.format == "json") {
    json factors = json::array();
    for (const auto& f : st.factors) factors.push_back(kac::format_osp_weight(f));
    json chain = json::array(), ap = json::array(), pp = json::array();
    for (const auto& c : st.chain) chain.push_back(kac::format_osp_weight(c));
    for (const auto& p : st.a_polys) ap.push_back(p.to_string());
    for (const auto& p : st.p_polys) pp.push_back(p.to_string());
    std::cout << json{{"atypical", st.atypical},
                      {"jantzen_length", st.jantzen_length},
                      {"factors", factors},
                      {"chain", chain},
                      {"a", ap},
                      {"p", pp}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << (st.atypical ? "atypical" : "typical")
            << ", Jantzen length " << st.jantzen_length << "\n";
  for (size_t i = 0; i < st.chain.size(); ++i) {
    std::cout << "lambda^(" << i << ") = " << kac::format_osp_weight(st.chain[i])
              << "\ta " << st.a_polys[i].to_string() << "\tp "
              << st.p_polys[i].to_string() << "\n";
  }
  return 0;
}

int cmd_check(const Options& o) {
  kac::Weight w = kac::parse_weight(o.weight);
  bool all = true;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "pass" : "FAIL") << "  " << name << "\n";
    all = all && ok;
  };
  kac::AtypicalityData at = kac::atypicality(w);
  report("atypicality routes agree", at.r == kac::atypicality_via_chi0(w));
  report("diagram round-trip",
         kac::weight_of(kac::diagram_of(w)) == w);
  report("dual involution", kac::dual_weight(kac::dual_weight(w)) == w);

  kac::PrimitiveWeightGraph g = kac::build_graph(w);
  bool edges_ok = true;
  for (auto [u, v] : g.skeleton) {
    edges_ok = edges_ok && g.vertices.paths[v].length ==
                               g.vertices.paths[u].length + 1;
  }
  report("skeleton edges raise length by one", edges_ok);
  report("unique source and bottom", g.source >= 0 && g.bottom >= 0);
  report("canonical chain present",
         static_cast<int>(kac::canonical_chain(g).size()) == g.r + 1);

  bool brundan = true;
  for (const auto& e : g.vertices.paths) {
    auto theta = kac::brundan_check(w, e.weight);
    brundan = brundan && theta.has_value() &&
              static_cast<int>(std::count(theta->theta.begin(),
                                          theta->theta.end(), 1)) == e.length;
  }
  report("factors match right-path characterization", brundan);

  if (at.r > 0) {
    kac::InvarianceReport rep = kac::check_block_invariance(w);
    report("reduction invariance", rep.ok);
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kac module composition structure for gl(m|n) and osp(2|2n)"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* sub, bool needs_weight = true) {
    if (needs_weight) {
      sub->add_option("weight", o.weight, "weight text")->required();
    }
    sub->add_option("--format", o.format, "table|json|dot")
        ->check(CLI::IsMember({"table", "json", "dot"}));
    sub->add_option("--depth", o.depth, "closure depth bound");
    sub->add_option("--seed", o.seed, "seed for randomized checks");
    return sub;
  };

  add_common(app.add_subcommand("diagram", "weight diagram"));
  add_common(app.add_subcommand("atypicality", "atypical roots"));
  add_common(app.add_subcommand("factors", "composition factors"));
  add_common(app.add_subcommand("codes", "path codes"));
  add_common(app.add_subcommand("layers", "Jantzen/Loewy layers"));
  add_common(app.add_subcommand("graph", "primitive weight graph"));
  add_common(app.add_subcommand("kl", "Jantzen and KL polynomials"));
  add_common(app.add_subcommand("reduce", "gl(r|r) core reduction"));
  add_common(app.add_subcommand("check", "invariant suite"));
  auto* osp = add_common(app.add_subcommand("osp", "osp(2|2n) structure"), false);
  osp->add_option("--n", o.n, "number of delta coordinates")->required();
  osp->add_option("--weight", o.weight, "\"<eps>;<d1,...,dn>\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::string sub = app.get_subcommands().front()->get_name();
    if (sub == "diagram") return cmd_diagram(o);
    if (sub == "atypicality") return cmd_atypicality(o);
    if (sub == "factors") return cmd_factors(o);
    if (sub == "codes") return cmd_codes(o);
    if (sub == "layers") return cmd_layers(o);
    if (sub == "graph") return cmd_graph(o);
    if (sub == "kl") return cmd_kl(o);
    if (sub == "reduce") return cmd_reduce(o);
    if (sub == "osp") return cmd_osp(o);
    if (sub == "check") return cmd_check(o);
  } catch (const kac::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
