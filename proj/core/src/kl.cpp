#include "kac/kl.hpp"

#include <algorithm>
#include <deque>

#include "kac/enumeration.hpp"

namespace kac {

int ClosurePoset::find(const Weight& w) const {
  auto it = index.find(format_weight(w));
  return it == index.end() ? -1 : it->second;
}

QPoly jantzen_poly(const Weight& lam, const Weight& mu) {
  require_dominant(lam);
  require_dominant(mu);
  if (lam.m != mu.m || lam.n != mu.n) return QPoly::zero();
  for (const auto& [w, len] : primitive_weights(lam)) {
    if (w == mu) return QPoly::monomial(1, len);
  }
  return QPoly::zero();
}

ClosurePoset closure_set(const Weight& lam, int depth_bound) {
  require_dominant(lam);
  if (depth_bound < 0) {
    depth_bound = 2 * atypicality(lam).r + 1;
  }
  struct Item {
    Weight w;
    int depth;
  };
  ClosurePoset s;
  std::map<std::string, int> depth_of;
  std::deque<Item> queue{{lam, 0}};
  depth_of[format_weight(lam)] = 0;
  std::vector<Weight> collected{lam};
  std::map<std::string, char> expanded_map;
  while (!queue.empty()) {
    Item it = queue.front();
    queue.pop_front();
    std::string key = format_weight(it.w);
    if (it.depth >= depth_bound) {
      expanded_map[key] = 0;
      s.truncated = true;
      continue;
    }
    expanded_map[key] = 1;
    for (const auto& [child, len] : primitive_weights(it.w)) {
      if (len == 0) continue;  // the weight itself
      std::string ck = format_weight(child);
      if (!depth_of.count(ck)) {
        depth_of[ck] = it.depth + 1;
        collected.push_back(child);
        queue.push_back({child, it.depth + 1});
      }
    }
  }
  std::sort(collected.begin(), collected.end(), weight_order_before);
  s.weights = std::move(collected);
  for (int i = 0; i < static_cast<int>(s.weights.size()); ++i) {
    std::string key = format_weight(s.weights[i]);
    s.index[key] = i;
    s.expanded.push_back(expanded_map[key]);
  }
  return s;
}

std::vector<std::vector<QPoly>> inverse_kl_matrix(const ClosurePoset& s) {
  const int n = static_cast<int>(s.weights.size());
  std::vector<std::vector<QPoly>> a(n, std::vector<QPoly>(n));
  for (int i = 0; i < n; ++i) {
    a[i][i] = QPoly::one();
    for (const auto& [w, len] : primitive_weights(s.weights[i])) {
      if (len == 0) continue;
      int k = s.find(w);
      if (k >= 0) a[i][k] = QPoly::monomial(1, len);
    }
  }
  return a;
}

KLMatrix kl_matrix(const ClosurePoset& s) {
  const int n = static_cast<int>(s.weights.size());
  auto a = inverse_kl_matrix(s);
  KLMatrix out;
  out.p.assign(n, std::vector<QPoly>(n));
  out.reliable.assign(n, std::vector<char>(n, 0));
  // A is unitriangular in the largest-first order, so P = A^{-1} comes
  // from forward substitution along each row:
  //   p_{ik} = -sum_{i <= t < k} p_{it} a_{tk}.
  for (int i = 0; i < n; ++i) {
    out.p[i][i] = QPoly::one();
    for (int k = i + 1; k < n; ++k) {
      QPoly acc;
      for (int t = i; t < k; ++t) {
        if (!out.p[i][t].is_zero() && !a[t][k].is_zero()) {
          acc = acc + out.p[i][t] * a[t][k];
        }
      }
      out.p[i][k] = -acc;
    }
  }
  // An entry (i, k) is exact when every weight on an a-chain from i
  // toward k was fully expanded, i.e. no contribution was cut off.
  for (int k = 0; k < n; ++k) {
    for (int i = k; i >= 0; --i) {
      if (i == k) {
        out.reliable[i][k] = 1;
        continue;
      }
      if (!s.expanded[i]) continue;
      bool ok = true;
      for (const auto& [w, len] : primitive_weights(s.weights[i])) {
        if (len == 0) continue;
        auto cmp = leq(s.weights[k], w);
        if (!cmp) continue;  // below mu: cannot contribute to (i, k)
        int t = s.find(w);
        if (t < 0 || !out.reliable[t][k]) {
          ok = false;
          break;
        }
      }
      out.reliable[i][k] = ok;
    }
  }
  return out;
}

}  // namespace kac
