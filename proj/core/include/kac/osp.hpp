#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kac/qpoly.hpp"
#include "kac/weight.hpp"

namespace kac {

/// Integral osp(2|2n) weight: eps coordinate plus n delta coordinates.
struct OspWeight {
  int n = 0;
  int eps = 0;
  std::vector<int> deltas;  // deltas[j-1] = coefficient of delta_j

  friend bool operator==(const OspWeight&, const OspWeight&) = default;
};

/// Odd positive root eps + sign*delta_j, sign in {-1, +1}.
struct OspRoot {
  int sign = 0;
  int j = 0;

  friend bool operator==(const OspRoot&, const OspRoot&) = default;
};

bool osp_is_dominant(const OspWeight& w);
void osp_require_dominant(const OspWeight& w);

/// The unique odd positive root gamma with (lambda+rho, gamma) = 0, or
/// absent when typical.  Asserts at most one exists.
std::optional<OspRoot> osp_atypical_root(const OspWeight& w);

/// Highest weight of the bottom composition factor: subtract k*gamma
/// until l-regular, then reflect into the dominant chamber by the unique
/// signed permutation.
OspWeight osp_lambda_one(const OspWeight& w);

/// Independent oracle: exhaustive search over k and all 2^n n! signed
/// permutations; asserts uniqueness of the Weyl element.
OspWeight osp_lambda_one_bruteforce(const OspWeight& w, int max_k = 64);

struct OspStructure {
  bool atypical = false;
  std::vector<OspWeight> factors;  // lambda, then lambda^(1) when atypical
  int jantzen_length = 0;
  std::vector<QPoly> a_polys;           // a_{lam,lam^(i)}, i = 0..
  std::vector<QPoly> p_polys;           // p_{lam,lam^(i)} along the chain
  std::vector<OspWeight> chain;         // lambda^(0..depth)
};

OspStructure osp_structure(const OspWeight& w, int depth = 6);

/// "<eps>;<d1,...,dn>"
OspWeight parse_osp_weight(int n, std::string_view text);
std::string format_osp_weight(const OspWeight& w);

}  // namespace kac
