#include <doctest.h>

#include <set>

#include "kac/graph.hpp"
#include "support.hpp"

using namespace kac;

namespace {

PrimitiveWeightGraph example_graph() {
  return build_graph(parse_weight(kac_test::kExample));
}

std::set<std::pair<std::string, std::string>> named_edges(
    const PrimitiveWeightGraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [u, v] : g.skeleton) {
    out.insert({path_to_string(g.vertices.paths[u].path),
                path_to_string(g.vertices.paths[v].path)});
  }
  return out;
}

// Both reachability directions through the skeleton.
std::vector<char> reaches(const PrimitiveWeightGraph& g, int from) {
  std::vector<char> seen(g.vertices.paths.size(), 0);
  std::vector<int> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : g.adjacency[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("example graph shape") {
  PrimitiveWeightGraph g = example_graph();
  CHECK(g.vertices.paths.size() == 19);
  CHECK(g.r == 4);
  CHECK(g.vertices.paths[g.source].length == 0);
  CHECK(g.vertices.paths[g.bottom].length == 4);
  auto layers = jantzen_layers(g);
  std::vector<size_t> sizes;
  for (const auto& l : layers) sizes.push_back(l.size());
  CHECK(sizes == std::vector<size_t>{1, 4, 7, 6, 1});
}

TEST_CASE("skeleton edges raise length by exactly one") {
  PrimitiveWeightGraph g = example_graph();
  for (auto [u, v] : g.skeleton) {
    CHECK(g.vertices.paths[v].length == g.vertices.paths[u].length + 1);
  }
}

TEST_CASE("specific covers from both derivation rules") {
  auto edges = named_edges(example_graph());
  // rule 1: extension by one move
  CHECK(edges.count({"L11", "L11 L12"}));
  CHECK(edges.count({"L11 L12 L33", "L11 L12 L33 L44"}));
  // rule 2: splitting a bridged move
  CHECK(edges.count({"L34", "L33 L44"}));
  CHECK(edges.count({"L11 L13", "L11 L12 L33"}));
  // no edge inside a layer or downward
  CHECK(!edges.count({"L11", "L33"}));
  CHECK(!edges.count({"L11 L12", "L11"}));
}

TEST_CASE("every vertex sits on a source-to-bottom chain") {
  PrimitiveWeightGraph g = example_graph();
  auto from_source = reaches(g, g.source);
  for (size_t v = 0; v < g.vertices.paths.size(); ++v) {
    CHECK(from_source[v]);
    CHECK(reaches(g, static_cast<int>(v))[g.bottom]);
  }
}

TEST_CASE("source is the unique vertex of in-degree zero") {
  PrimitiveWeightGraph g = example_graph();
  std::vector<int> indeg(g.vertices.paths.size(), 0);
  for (auto [u, v] : g.skeleton) indeg[v]++;
  for (size_t v = 0; v < indeg.size(); ++v) {
    CHECK((indeg[v] == 0) == (static_cast<int>(v) == g.source));
  }
}

TEST_CASE("bridgeless covers are exactly subpath extensions") {
  PrimitiveWeightGraph g = example_graph();
  auto edges = std::set<std::pair<int, int>>(g.skeleton.begin(),
                                             g.skeleton.end());
  for (size_t u = 0; u < g.vertices.paths.size(); ++u) {
    if (has_bridges(g.vertices.paths[u].path)) continue;
    for (size_t v = 0; v < g.vertices.paths.size(); ++v) {
      if (g.vertices.paths[v].length != g.vertices.paths[u].length + 1) {
        continue;
      }
      bool sub = is_subpath(g.vertices.paths[u].path, g.vertices.paths[v].path);
      bool edge = edges.count({static_cast<int>(u), static_cast<int>(v)}) > 0;
      CHECK(edge == sub);
    }
  }
}

TEST_CASE("canonical chain runs along skeleton edges") {
  PrimitiveWeightGraph g = example_graph();
  std::vector<int> chain = canonical_chain(g);
  REQUIRE(chain.size() == 5);
  CHECK(chain.front() == g.source);
  CHECK(chain.back() == g.bottom);
  auto edges = std::set<std::pair<int, int>>(g.skeleton.begin(),
                                             g.skeleton.end());
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    CHECK(edges.count({chain[i], chain[i + 1]}));
  }
}

TEST_CASE("longest chain has length r") {
  PrimitiveWeightGraph g = example_graph();
  auto [len, witness] = max_chain(g);
  CHECK(len == 4);
  CHECK(witness.size() == 5);
}

TEST_CASE("derived closure is transitive and irreflexive") {
  PrimitiveWeightGraph g = example_graph();
  auto c = derived_closure(g);
  const size_t n = g.vertices.paths.size();
  for (size_t u = 0; u < n; ++u) {
    CHECK(!c[u][u]);
    for (size_t v = 0; v < n; ++v) {
      if (!c[u][v]) continue;
      for (size_t w = 0; w < n; ++w) {
        if (c[v][w]) CHECK(c[u][w]);
      }
    }
  }
}

TEST_CASE("exports are byte deterministic") {
  PrimitiveWeightGraph g = example_graph();
  CHECK(export_dot(g) == export_dot(example_graph()));
  CHECK(export_json(g).dump() == export_json(example_graph()).dump());
  nlohmann::json j = export_json(g);
  CHECK(j["r"] == 4);
  CHECK(j["vertices"].size() == 19);
  CHECK(j["layers"].size() == 5);
}

TEST_CASE("graph invariants hold on a random corpus") {
  std::mt19937 rng(99);
  for (int t = 0; t < 25; ++t) {
    PrimitiveWeightGraph g = build_graph(kac_test::random_weight(rng));
    auto layers = jantzen_layers(g);
    CHECK(static_cast<int>(layers.size()) == g.r + 1);
    for (auto [u, v] : g.skeleton) {
      CHECK(g.vertices.paths[v].length == g.vertices.paths[u].length + 1);
    }
    auto from_source = reaches(g, g.source);
    for (size_t v = 0; v < g.vertices.paths.size(); ++v) {
      CHECK(from_source[v]);
      CHECK(reaches(g, static_cast<int>(v))[g.bottom]);
    }
    CHECK(max_chain(g).first == g.r);
  }
}
