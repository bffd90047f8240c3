#include "kac/enumeration.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

namespace kac {

namespace {

void enumerate_dfs(const WeightDiagram& d, int r,
                   std::vector<std::pair<int, int>>& acc,
                   std::vector<LeftPath>& out) {
  out.push_back(resolve_left_path(d, acc));
  int last_j = acc.empty() ? 0 : acc.back().second;
  for (int j = last_j + 1; j <= r; ++j) {
    for (const LeftMove& c : left_move_candidates(d, j)) {
      acc.emplace_back(c.i, j);
      // Validity is prefix-closed, so pruning here is exhaustive.
      if (validate_left_path(d, acc).ok) enumerate_dfs(d, r, acc, out);
      acc.pop_back();
    }
  }
}

bool path_lex_before(const LeftPath& a, const LeftPath& b) {
  std::vector<int> ja, jb, ia, ib;
  for (const auto& mv : a.moves) ja.push_back(mv.j), ia.push_back(mv.i);
  for (const auto& mv : b.moves) jb.push_back(mv.j), ib.push_back(mv.i);
  if (ja != jb) return ja < jb;
  return ia < ib;
}

}  // namespace

PathSet enumerate_paths(const WeightDiagram& d) {
  const int r = static_cast<int>(d.cross_positions().size());
  std::vector<std::pair<int, int>> acc;
  std::vector<LeftPath> paths;
  enumerate_dfs(d, r, acc, paths);
  std::sort(paths.begin(), paths.end(), path_lex_before);
  PathSet ps;
  ps.base = d;
  for (LeftPath& p : paths) {
    PathEntry e;
    e.length = p.length();
    e.weight = apply_left_path(d, p);
    e.path = std::move(p);
    ps.paths.push_back(std::move(e));
  }
  return ps;
}

std::vector<std::pair<Weight, int>> primitive_weights(const Weight& w) {
  require_dominant(w);
  PathSet ps = enumerate_paths(diagram_of(w));
  std::vector<std::pair<Weight, int>> out;
  for (const PathEntry& e : ps.paths) out.emplace_back(e.weight, e.length);
  return out;
}

std::optional<RightPath> brundan_check(const Weight& lam, const Weight& mu) {
  require_dominant(lam);
  require_dominant(mu);
  if (lam.m != mu.m || lam.n != mu.n) {
    throw domain_error("brundan_check: shape mismatch");
  }
  WeightDiagram d = diagram_of(mu);
  const int r = static_cast<int>(d.cross_positions().size());
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    RightPath theta;
    for (int i = 0; i < r; ++i) theta.theta.push_back((mask >> i) & 1);
    try {
      if (apply_right_path(d, theta) == lam) return theta;
    } catch (const domain_error&) {
      // colliding targets: this selector does not define a weight
    }
  }
  return std::nullopt;
}

Code path_to_code(const LeftPath& p, int r) {
  Code code;
  code.entries.assign(r, 0);
  for (int b = 1; b <= r; ++b) {
    int best = 0;
    for (const LeftMove& mv : p.moves) {
      if (mv.i <= b && b <= mv.j && (best == 0 || mv.j < best)) best = mv.j;
    }
    code.entries[b - 1] = best;
  }
  for (const LeftMove& mv : p.moves) {
    for (const LeftMove& other : p.moves) {
      if (&other == &mv) continue;
      if (mv.i <= other.j && other.j < mv.j) {
        if (!code.label || mv.j > *code.label) code.label = mv.j;
      }
    }
  }
  return code;
}

nlohmann::json pathset_to_json(const Weight& w, const PathSet& ps) {
  const int r = static_cast<int>(ps.base.cross_positions().size());
  nlohmann::json out;
  out["weight"] = format_weight(w);
  out["paths"] = nlohmann::json::array();
  for (const PathEntry& e : ps.paths) {
    nlohmann::json jp;
    jp["moves"] = path_to_string(e.path);
    jp["length"] = e.length;
    jp["weight"] = format_weight(e.weight);
    Code c = path_to_code(e.path, r);
    jp["code"] = c.entries;
    if (c.label) jp["label"] = *c.label;
    out["paths"].push_back(std::move(jp));
  }
  return out;
}

}  // namespace kac
