#include "kac/reduction.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "kac/graph.hpp"
#include "kac/kl.hpp"

namespace kac {

std::vector<int> height_vector(const Weight& w) {
  AtypicalityData at = atypicality(w);
  if (at.r == 0) throw domain_error("height_vector: typical weight");
  std::vector<int> h;
  for (int s = 1; s <= at.r; ++s) {
    auto [i, j] = at.pairs[s - 1];
    h.push_back(w.left[i - 1] - j + s);
  }
  return h;
}

Weight reduce_formula(const Weight& w) {
  std::vector<int> h = height_vector(w);
  const int r = static_cast<int>(h.size());
  // The core's rho-shifted coordinates are h_s + s - 1 on both sides, so
  // its plain coordinates are the heights themselves.
  Weight core{r, r, h, h};
  require_dominant(core);
  if (atypicality(core).r != r) {
    throw domain_error("reduce_formula: core not maximally atypical");
  }
  return core;
}

WeightDiagram reduce_surgery(const WeightDiagram& d) {
  std::vector<int> deleted;
  for (const auto& [v, s] : d.symbols()) {
    if (s == Symbol::Less || s == Symbol::Greater) deleted.push_back(v);
  }
  std::map<int, Symbol> out;
  for (const auto& [v, s] : d.symbols()) {
    if (s != Symbol::Cross) continue;
    auto below = std::lower_bound(deleted.begin(), deleted.end(), v) -
                 deleted.begin();
    out[v - static_cast<int>(below)] = Symbol::Cross;
  }
  if (out.empty()) {
    throw domain_error("reduce_surgery: typical diagram has no core");
  }
  std::ostringstream text;
  text << "@" << out.begin()->first << ":";
  for (int v = out.begin()->first; v <= out.rbegin()->first; ++v) {
    text << (out.count(v) ? 'x' : '.');
  }
  WeightDiagram core = WeightDiagram::parse(text.str());
  // The re-indexing pin must reproduce the height-vector formula.
  if (core != diagram_of(reduce_formula(d.weight()))) {
    throw domain_error("reduce_surgery disagrees with reduce_formula");
  }
  return core;
}

namespace {

std::vector<std::pair<int, int>> move_keys(const LeftPath& p) {
  std::vector<std::pair<int, int>> out;
  for (const LeftMove& mv : p.moves) out.emplace_back(mv.i, mv.j);
  return out;
}

}  // namespace

InvarianceReport check_block_invariance(const Weight& w) {
  require_dominant(w);
  InvarianceReport rep;
  AtypicalityData at = atypicality(w);
  if (at.r == 0) {
    rep.path_count = 1;
    rep.length_histogram = {1};
    rep.core = w;
    return rep;
  }
  rep.core = reduce_formula(w);
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.failures.push_back(std::move(msg));
  };

  PrimitiveWeightGraph g = build_graph(w);
  PrimitiveWeightGraph gc = build_graph(rep.core);
  rep.path_count = static_cast<int>(g.vertices.paths.size());

  if (g.vertices.paths.size() != gc.vertices.paths.size()) {
    fail("path counts differ");
    return rep;
  }

  // Paths are enumerated in the same deterministic order, so the induced
  // bijection is index-wise once the move structures match.
  for (size_t v = 0; v < g.vertices.paths.size(); ++v) {
    if (move_keys(g.vertices.paths[v].path) !=
        move_keys(gc.vertices.paths[v].path)) {
      fail("path " + path_to_string(g.vertices.paths[v].path) +
           " has no structural twin on the core");
      return rep;
    }
  }

  rep.length_histogram.assign(g.r + 1, 0);
  std::vector<int> hist_core(gc.r + 1, 0);
  for (const PathEntry& e : g.vertices.paths) rep.length_histogram[e.length]++;
  for (const PathEntry& e : gc.vertices.paths) hist_core[e.length]++;
  if (rep.length_histogram != hist_core) fail("length histograms differ");

  std::set<std::pair<int, int>> edges(g.skeleton.begin(), g.skeleton.end());
  std::set<std::pair<int, int>> edges_core(gc.skeleton.begin(),
                                           gc.skeleton.end());
  if (edges != edges_core) fail("skeleton graphs not isomorphic");

  for (size_t v = 0; v < g.vertices.paths.size(); ++v) {
    QPoly j1 = jantzen_poly(w, g.vertices.paths[v].weight);
    QPoly j2 = jantzen_poly(rep.core, gc.vertices.paths[v].weight);
    if (j1 != j2) {
      fail("Jantzen polynomials differ at path " +
           path_to_string(g.vertices.paths[v].path));
    }
  }
  return rep;
}

}  // namespace kac
