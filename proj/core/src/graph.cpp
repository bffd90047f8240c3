#include "kac/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace kac {

namespace {

std::vector<std::pair<int, int>> move_keys(const LeftPath& p) {
  std::vector<std::pair<int, int>> out;
  for (const LeftMove& mv : p.moves) out.emplace_back(mv.i, mv.j);
  return out;
}

// Splitting L_{ij} into L_{ia}, L_{bj}: returns the replacement path for
// the smallest admissible b, if any.
std::optional<std::vector<std::pair<int, int>>> split_move(
    const WeightDiagram& d, const LeftPath& p, size_t move_idx, int a) {
  const LeftMove& mv = p.moves[move_idx];
  bool first_exists = false;
  for (const LeftMove& c : left_move_candidates(d, a)) {
    if (c.i == mv.i) first_exists = true;
  }
  if (!first_exists) return std::nullopt;
  for (int b = a; b <= mv.j; ++b) {
    std::vector<std::pair<int, int>> moves;
    for (size_t t = 0; t < p.moves.size(); ++t) {
      if (t != move_idx) moves.emplace_back(p.moves[t].i, p.moves[t].j);
    }
    moves.emplace_back(mv.i, a);
    moves.emplace_back(b, mv.j);
    std::sort(moves.begin(), moves.end(),
              [](auto& x, auto& y) { return x.second < y.second; });
    bool dup = false;
    for (size_t t = 1; t < moves.size(); ++t) {
      if (moves[t].second == moves[t - 1].second) dup = true;
    }
    if (dup) continue;
    bool candidate_ok = true;
    for (auto [i, j] : moves) {
      bool found = false;
      for (const LeftMove& c : left_move_candidates(d, j)) {
        if (c.i == i) found = true;
      }
      if (!found) candidate_ok = false;
    }
    if (!candidate_ok) continue;
    if (validate_left_path(d, moves).ok) return moves;
  }
  return std::nullopt;
}

}  // namespace

PrimitiveWeightGraph build_graph(const Weight& w) {
  require_dominant(w);
  PrimitiveWeightGraph g;
  g.vertices = enumerate_paths(diagram_of(w));
  const WeightDiagram& d = g.vertices.base;
  g.r = static_cast<int>(d.cross_positions().size());

  const auto& paths = g.vertices.paths;
  const int nv = static_cast<int>(paths.size());
  std::map<std::vector<std::pair<int, int>>, int> index;
  for (int v = 0; v < nv; ++v) {
    index[move_keys(paths[v].path)] = v;
    if (paths[v].length == 0) g.source = v;
    if (paths[v].length == g.r) g.bottom = v;
  }

  std::set<std::pair<int, int>> edges;
  for (int u = 0; u < nv; ++u) {
    const LeftPath& pu = paths[u].path;
    // Rule 1: subpath with one extra move.
    for (int v = 0; v < nv; ++v) {
      if (paths[v].length != paths[u].length + 1) continue;
      if (is_subpath(pu, paths[v].path)) edges.emplace(u, v);
    }
    // Rule 2: splitting one bridged move into two.
    if (!has_bridges(pu)) continue;
    for (size_t mi = 0; mi < pu.moves.size(); ++mi) {
      if (pu.moves[mi].i >= pu.moves[mi].j) continue;
      for (int a = pu.moves[mi].i; a <= pu.moves[mi].j; ++a) {
        auto replaced = split_move(d, pu, mi, a);
        if (!replaced) continue;
        auto it = index.find(*replaced);
        if (it == index.end()) {
          throw domain_error("split result is a valid path missing from the "
                             "enumeration");
        }
        edges.emplace(u, it->second);
      }
    }
  }

  g.skeleton.assign(edges.begin(), edges.end());
  g.adjacency.assign(nv, {});
  for (auto [u, v] : g.skeleton) g.adjacency[u].push_back(v);
  return g;
}

std::vector<std::vector<char>> derived_closure(const PrimitiveWeightGraph& g) {
  const int nv = static_cast<int>(g.vertices.paths.size());
  std::vector<std::vector<char>> reach(nv, std::vector<char>(nv, 0));
  for (int s = 0; s < nv; ++s) {
    std::vector<int> stack = {s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.adjacency[u]) {
        if (!reach[s][v]) {
          reach[s][v] = 1;
          stack.push_back(v);
        }
      }
    }
  }
  return reach;
}

std::vector<std::vector<int>> jantzen_layers(const PrimitiveWeightGraph& g) {
  std::vector<std::vector<int>> layers(g.r + 1);
  for (int v = 0; v < static_cast<int>(g.vertices.paths.size()); ++v) {
    layers[g.vertices.paths[v].length].push_back(v);
  }
  return layers;
}

std::pair<int, std::vector<int>> max_chain(const PrimitiveWeightGraph& g) {
  const int nv = static_cast<int>(g.vertices.paths.size());
  // Edges raise the length by 1, so processing by increasing length is a
  // topological order.
  std::vector<int> order(nv);
  for (int v = 0; v < nv; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.vertices.paths[a].length < g.vertices.paths[b].length;
  });
  std::vector<int> best(nv, 0), pred(nv, -1);
  for (int u : order) {
    for (int v : g.adjacency[u]) {
      if (best[u] + 1 > best[v]) {
        best[v] = best[u] + 1;
        pred[v] = u;
      }
    }
  }
  int arg = 0;
  for (int v = 0; v < nv; ++v) {
    if (best[v] > best[arg]) arg = v;
  }
  std::vector<int> chain;
  for (int v = arg; v != -1; v = pred[v]) chain.push_back(v);
  std::reverse(chain.begin(), chain.end());
  return {best[arg], chain};
}

std::vector<int> canonical_chain(const PrimitiveWeightGraph& g) {
  std::map<std::vector<std::pair<int, int>>, int> index;
  for (int v = 0; v < static_cast<int>(g.vertices.paths.size()); ++v) {
    index[move_keys(g.vertices.paths[v].path)] = v;
  }
  std::vector<int> chain;
  for (int k = 0; k <= g.r; ++k) {
    LeftPath p = bridgeless_path(g.vertices.base, k);
    auto it = index.find(move_keys(p));
    if (it == index.end()) {
      throw domain_error("canonical chain vertex missing from enumeration");
    }
    chain.push_back(it->second);
  }
  return chain;
}

std::string export_dot(const PrimitiveWeightGraph& g) {
  std::ostringstream os;
  os << "digraph kac {\n";
  os << "  rankdir=TB;\n";
  auto layers = jantzen_layers(g);
  for (int k = 0; k <= g.r; ++k) {
    os << "  { rank=same;";
    for (int v : layers[k]) os << " n" << v << ";";
    os << " }\n";
  }
  for (int v = 0; v < static_cast<int>(g.vertices.paths.size()); ++v) {
    const PathEntry& e = g.vertices.paths[v];
    os << "  n" << v << " [label=\"" << path_to_string(e.path) << "\\n"
       << format_weight(e.weight) << "\"];\n";
  }
  for (auto [u, v] : g.skeleton) {
    os << "  n" << u << " -> n" << v << ";\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json export_json(const PrimitiveWeightGraph& g) {
  nlohmann::json out;
  out["r"] = g.r;
  out["vertices"] = nlohmann::json::array();
  for (const PathEntry& e : g.vertices.paths) {
    out["vertices"].push_back({{"moves", path_to_string(e.path)},
                               {"length", e.length},
                               {"weight", format_weight(e.weight)}});
  }
  out["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.skeleton) out["edges"].push_back({u, v});
  out["layers"] = jantzen_layers(g);
  return out;
}

}  // namespace kac
