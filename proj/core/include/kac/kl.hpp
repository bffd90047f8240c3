#pragma once

#include <map>
#include <string>
#include <vector>

#include "kac/qpoly.hpp"
#include "kac/weight.hpp"

namespace kac {

/// Finite weight set closed (up to a depth bound) under taking path
/// weights, linearly ordered largest first.
struct ClosurePoset {
  std::vector<Weight> weights;            // largest first
  std::map<std::string, int> index;       // format_weight -> position
  std::vector<char> expanded;             // path weights fully included?
  bool truncated = false;

  int find(const Weight& w) const;        // -1 when absent
};

/// q^length(P) when mu is the weight of path P of lam, else 0.
QPoly jantzen_poly(const Weight& lam, const Weight& mu);

/// Breadth-first saturation under path weights, cut at depth_bound
/// (default 2r+1); truncation flagged.
ClosurePoset closure_set(const Weight& lam, int depth_bound = -1);

/// Unitriangular matrix A with entries a_{lam,mu} = jantzen_poly.
std::vector<std::vector<QPoly>> inverse_kl_matrix(const ClosurePoset& s);

struct KLMatrix {
  std::vector<std::vector<QPoly>> p;
  /// reliable[i][k]: every chain from weight i down to weight k lies in
  /// the poset, so the entry is exact despite truncation.
  std::vector<std::vector<char>> reliable;
};

/// Exact inverse of the A matrix on the poset.
KLMatrix kl_matrix(const ClosurePoset& s);

}  // namespace kac
