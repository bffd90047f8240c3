#include "kac/moves.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace kac {

namespace {

int cross_count(const WeightDiagram& d) {
  return static_cast<int>(d.cross_positions().size());
}

void require_cross_index(const WeightDiagram& d, int idx) {
  int r = cross_count(d);
  if (idx < 1 || idx > r) {
    throw domain_error("cross index " + std::to_string(idx) +
                       " out of range 1.." + std::to_string(r));
  }
}

}  // namespace

std::pair<int, int> right_move(const WeightDiagram& d, int i) {
  require_cross_index(d, i);
  const int x = d.cross_positions()[i - 1];
  int crosses = 0, empties = 0;
  // ell(x, t) decreases by exactly one at each empty vertex, so the first
  // empty t with balanced counts is the target and every earlier empty had
  // ell > 0.
  for (int t = x + 1;; ++t) {
    Symbol s = d.at(t);
    if (s == Symbol::Empty) {
      if (crosses == empties) return {i + crosses, t};
      ++empties;
    } else if (s == Symbol::Cross) {
      ++crosses;
    }
  }
}

std::vector<LeftMove> left_move_candidates(const WeightDiagram& d, int j) {
  require_cross_index(d, j);
  const int x = d.cross_positions()[j - 1];
  const int lo = d.min_vertex();
  std::vector<LeftMove> out;
  int crosses = 0, empties = 0;
  for (int s = x - 1;; --s) {
    Symbol sym = d.at(s);
    if (sym == Symbol::Empty && crosses == empties) {
      out.push_back(LeftMove{j - crosses, j, s});
    }
    if (sym == Symbol::Empty) ++empties;
    if (sym == Symbol::Cross) ++crosses;
    if (s < lo && empties > crosses) break;  // all lower vertices are empty
  }
  return out;
}

namespace {

// Looks up the unique admissible target of L_{i,j}, if any.
std::optional<int> move_target(const WeightDiagram& d, int i, int j) {
  for (const LeftMove& c : left_move_candidates(d, j)) {
    if (c.i == i) return c.target;
  }
  return std::nullopt;
}

}  // namespace

PathValidity validate_left_path(const WeightDiagram& d,
                                const std::vector<std::pair<int, int>>& moves) {
  const int r = cross_count(d);
  const auto crosses = d.cross_positions();
  std::vector<LeftMove> resolved;
  for (auto [i, j] : moves) {
    if (j < 1 || j > r || i < 1 || i > j) {
      throw domain_error("move indices L" + std::to_string(i) +
                         std::to_string(j) + " out of range");
    }
    auto t = move_target(d, i, j);
    if (!t) {
      return {false, "no admissible target for L" + std::to_string(i) +
                         std::to_string(j)};
    }
    resolved.push_back(LeftMove{i, j, *t});
  }
  for (size_t b = 1; b < resolved.size(); ++b) {
    if (resolved[b].j <= resolved[b - 1].j) {
      return {false, "condition (1): j-indices not strictly increasing"};
    }
  }
  for (size_t b = 0; b < resolved.size(); ++b) {
    for (size_t a = 0; a < b; ++a) {
      if (resolved[b].i <= resolved[a].j && resolved[b].i > resolved[a].i) {
        return {false, "condition (2) violated at moves " +
                           std::to_string(a + 1) + "," + std::to_string(b + 1)};
      }
    }
  }
  for (size_t b = 0; b < resolved.size(); ++b) {
    for (int p = resolved[b].i; p < resolved[b].j; ++p) {
      bool matched = false;
      for (size_t a = 0; a < b; ++a) {
        if (resolved[a].j == p) {
          matched = true;
          break;
        }
      }
      if (matched) continue;
      // Cross/empty balance between the p-th cross and the moving one,
      // with earlier moves applied: a cross relocated below x_p turns its
      // old vertex empty, dropping the count by two.
      int ell = d.count_ell(crosses[p - 1], crosses[resolved[b].j - 1]);
      for (size_t a = 0; a < b; ++a) {
        if (resolved[a].j > p && resolved[a].target < crosses[p - 1]) {
          ell -= 2;
        }
      }
      if (ell >= 0) {
        return {false,
                "condition (3) violated at p=" + std::to_string(p) +
                    " for move L" + std::to_string(resolved[b].i) +
                    std::to_string(resolved[b].j)};
      }
    }
  }
  std::set<int> targets;
  for (const LeftMove& mv : resolved) {
    if (!targets.insert(mv.target).second) {
      return {false,
              "colliding targets at vertex " + std::to_string(mv.target)};
    }
  }
  return {true, ""};
}

LeftPath resolve_left_path(const WeightDiagram& d,
                           const std::vector<std::pair<int, int>>& moves) {
  PathValidity v = validate_left_path(d, moves);
  if (!v.ok) throw domain_error("invalid left path: " + v.reason);
  LeftPath p;
  for (auto [i, j] : moves) {
    p.moves.push_back(LeftMove{i, j, *move_target(d, i, j)});
  }
  return p;
}

WeightDiagram apply_left_path_diagram(const WeightDiagram& d,
                                      const LeftPath& p) {
  const auto crosses = d.cross_positions();
  std::ostringstream text;
  std::map<int, Symbol> symbols(d.symbols().begin(), d.symbols().end());
  for (const LeftMove& mv : p.moves) {
    symbols.erase(crosses[mv.j - 1]);
    if (symbols.count(mv.target)) {
      throw domain_error("left path target vertex not empty");
    }
    symbols[mv.target] = Symbol::Cross;
  }
  // Rebuild through the text form to keep WeightDiagram immutable.
  if (symbols.empty()) return WeightDiagram{};
  int lo = symbols.begin()->first;
  int hi = symbols.rbegin()->first;
  text << "@" << lo << ":";
  for (int v = lo; v <= hi; ++v) {
    auto it = symbols.find(v);
    text << (it == symbols.end() ? '.' : static_cast<char>(it->second));
  }
  return WeightDiagram::parse(text.str());
}

Weight apply_left_path(const WeightDiagram& d, const LeftPath& p) {
  return apply_left_path_diagram(d, p).weight();
}

Weight apply_right_path(const WeightDiagram& d, const RightPath& theta) {
  const int r = cross_count(d);
  if (static_cast<int>(theta.theta.size()) != r) {
    throw domain_error("theta length != atypicality degree");
  }
  const auto crosses = d.cross_positions();
  std::map<int, Symbol> symbols(d.symbols().begin(), d.symbols().end());
  std::set<int> targets;
  std::vector<std::pair<int, int>> placements;  // (old cross, target)
  for (int i = 1; i <= r; ++i) {
    if (!theta.theta[i - 1]) continue;
    auto [j, t] = right_move(d, i);
    (void)j;
    if (!targets.insert(t).second) {
      throw domain_error("colliding right-move targets at vertex " +
                         std::to_string(t));
    }
    placements.emplace_back(crosses[i - 1], t);
  }
  for (auto [old_v, t] : placements) symbols.erase(old_v);
  for (auto [old_v, t] : placements) {
    if (symbols.count(t)) {
      throw domain_error("right-move target vertex not empty");
    }
    symbols[t] = Symbol::Cross;
  }
  if (symbols.empty()) return Weight{};
  std::ostringstream text;
  int lo = symbols.begin()->first;
  int hi = symbols.rbegin()->first;
  text << "@" << lo << ":";
  for (int v = lo; v <= hi; ++v) {
    auto it = symbols.find(v);
    text << (it == symbols.end() ? '.' : static_cast<char>(it->second));
  }
  return WeightDiagram::parse(text.str()).weight();
}

PathStats path_stats(const LeftPath& p) {
  PathStats st;
  st.length = p.length();
  if (p.moves.empty()) return st;
  st.has_range = true;
  st.lo = p.moves.front().i;
  for (const LeftMove& mv : p.moves) st.lo = std::min(st.lo, mv.i);
  st.hi = p.moves.back().j;
  st.depth = st.hi - st.lo;
  return st;
}

std::vector<LeftPath> blocks(const LeftPath& p) {
  std::vector<LeftPath> out;
  const auto& mv = p.moves;
  if (mv.empty()) return out;
  const size_t k = mv.size();
  std::vector<int> suffix_min_i(k + 1, INT_MAX);
  for (size_t a = k; a-- > 0;) {
    suffix_min_i[a] = std::min(suffix_min_i[a + 1], mv[a].i);
  }
  LeftPath cur;
  for (size_t a = 0; a < k; ++a) {
    cur.moves.push_back(mv[a]);
    // Split where every later move starts strictly above the j's seen so far.
    if (a + 1 == k || suffix_min_i[a + 1] > mv[a].j) {
      out.push_back(std::move(cur));
      cur = LeftPath{};
    }
  }
  return out;
}

bool has_bridges(const LeftPath& p) {
  std::set<int> moved;
  for (const LeftMove& mv : p.moves) moved.insert(mv.j);
  for (const LeftMove& mv : p.moves) {
    for (int b = mv.i; b < mv.j; ++b) {
      if (!moved.count(b)) return true;
    }
  }
  return false;
}

bool is_subpath(const LeftPath& p, const LeftPath& q) {
  for (const LeftMove& mv : p.moves) {
    if (std::find(q.moves.begin(), q.moves.end(), mv) == q.moves.end()) {
      return false;
    }
  }
  return true;
}

namespace {

void bridgeless_dfs(const WeightDiagram& d, int k,
                    std::vector<std::pair<int, int>>& acc,
                    std::vector<LeftPath>& found) {
  int next_j = static_cast<int>(acc.size()) + 1;
  if (next_j > k) {
    found.push_back(resolve_left_path(d, acc));
    return;
  }
  for (const LeftMove& c : left_move_candidates(d, next_j)) {
    acc.emplace_back(c.i, next_j);
    if (validate_left_path(d, acc).ok) bridgeless_dfs(d, k, acc, found);
    acc.pop_back();
  }
}

}  // namespace

LeftPath bridgeless_path(const WeightDiagram& d, int k) {
  const int r = cross_count(d);
  if (k < 0 || k > r) {
    throw domain_error("bridgeless_path: k out of range 0.." +
                       std::to_string(r));
  }
  // Any path moving exactly the first k crosses is automatically
  // bridgeless; there is exactly one such path, asserted here.
  std::vector<std::pair<int, int>> acc;
  std::vector<LeftPath> found;
  bridgeless_dfs(d, k, acc, found);
  if (found.size() != 1) {
    throw domain_error("expected a unique path moving the first " +
                       std::to_string(k) + " crosses, found " +
                       std::to_string(found.size()));
  }
  return found.front();
}

LeftPath bottom_path(const WeightDiagram& d) {
  return bridgeless_path(d, cross_count(d));
}

std::string path_to_string(const LeftPath& p) {
  if (p.moves.empty()) return "L0";
  std::ostringstream os;
  bool first = true;
  for (const LeftMove& mv : p.moves) {
    if (!first) os << " ";
    first = false;
    if (mv.i < 10 && mv.j < 10) {
      os << "L" << mv.i << mv.j;
    } else {
      os << "L" << mv.i << "." << mv.j;
    }
  }
  return os.str();
}

std::vector<std::pair<int, int>> parse_moves(std::string_view text) {
  std::vector<std::pair<int, int>> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::string t = token;
    token.clear();
    if (t == "L0" || t == "l0") return;  // empty path marker
    if (t.size() < 3 || (t[0] != 'L' && t[0] != 'l')) {
      throw domain_error("bad move token '" + t + "'");
    }
    std::string body = t.substr(1);
    auto dot = body.find('.');
    int i, j;
    try {
      if (dot != std::string::npos) {
        i = std::stoi(body.substr(0, dot));
        j = std::stoi(body.substr(dot + 1));
      } else if (body.size() == 2) {
        i = body[0] - '0';
        j = body[1] - '0';
        if (!std::isdigit(static_cast<unsigned char>(body[0])) ||
            !std::isdigit(static_cast<unsigned char>(body[1]))) {
          throw std::invalid_argument(body);
        }
      } else {
        throw std::invalid_argument(body);
      }
    } catch (const std::exception&) {
      throw domain_error("bad move token '" + t + "'");
    }
    out.emplace_back(i, j);
  };
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '\t') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return out;
}

RightPath parse_theta(std::string_view text) {
  RightPath p;
  for (char c : text) {
    if (c == '0') {
      p.theta.push_back(0);
    } else if (c == '1') {
      p.theta.push_back(1);
    } else if (c != ' ') {
      throw domain_error(std::string("bad theta character '") + c + "'");
    }
  }
  return p;
}

std::string theta_to_string(const RightPath& theta) {
  std::string s;
  for (int b : theta.theta) s.push_back(b ? '1' : '0');
  return s;
}

}  // namespace kac
