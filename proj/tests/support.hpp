#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "kac/osp.hpp"
#include "kac/weight.hpp"

namespace kac_test {

inline const char* kExample = "rho:7,5,4,2,1|1,2,4,7,8,10";

// Random dominant gl(m|n) weight with m, n <= 4 (so atypicality <= 4).
// The rho-value sequences share exactly k values for a uniformly drawn
// k, so every atypicality degree is exercised.
inline kac::Weight random_weight(std::mt19937& rng) {
  std::uniform_int_distribution<int> dim(1, 4);
  int m = dim(rng), n = dim(rng);
  std::uniform_int_distribution<int> deg(0, std::min(m, n));
  int k = deg(rng);
  std::vector<int> pool;
  for (int v = -3; v <= 10; ++v) pool.push_back(v);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::set<int> left(pool.begin(), pool.begin() + k);
  std::set<int> right = left;
  size_t next = k;
  while (static_cast<int>(left.size()) < m) left.insert(pool[next++]);
  while (static_cast<int>(right.size()) < n) right.insert(pool[next++]);
  kac::RhoWeight rw;
  rw.m = m;
  rw.n = n;
  rw.left.assign(left.begin(), left.end());
  rw.right.assign(right.begin(), right.end());
  return kac::from_rho(rw);
}

inline kac::OspWeight random_osp_weight(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> eps(-6, 6);
  std::uniform_int_distribution<int> d(0, 6);
  kac::OspWeight w;
  w.n = n;
  w.eps = eps(rng);
  for (int i = 0; i < n; ++i) w.deltas.push_back(d(rng));
  std::sort(w.deltas.begin(), w.deltas.end(), std::greater<>());
  return w;
}

}  // namespace kac_test
