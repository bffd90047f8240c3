#pragma once

#include <optional>
#include <vector>

#include "kac/moves.hpp"

#include <json.hpp>

namespace kac {

struct PathEntry {
  LeftPath path;
  Weight weight;
  int length = 0;
};

/// All left paths of a diagram, lexicographic by (j-sequence, i-sequence).
struct PathSet {
  WeightDiagram base;
  std::vector<PathEntry> paths;
};

PathSet enumerate_paths(const WeightDiagram& d);

/// Distinct (weight, path length) pairs for the composition factors of
/// the Kac module of w.
std::vector<std::pair<Weight, int>> primitive_weights(const Weight& w);

/// Searches all theta in {0,1}^r for lam = R_theta(mu).
std::optional<RightPath> brundan_check(const Weight& lam, const Weight& mu);

struct Code {
  std::vector<int> entries;
  std::optional<int> label;

  friend bool operator==(const Code&, const Code&) = default;
};

Code path_to_code(const LeftPath& p, int r);

nlohmann::json pathset_to_json(const Weight& w, const PathSet& ps);

}  // namespace kac
