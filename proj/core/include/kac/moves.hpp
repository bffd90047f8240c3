#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kac/diagram.hpp"

namespace kac {

/// Single left move L_{i,j}: the j-th cross relocated to `target`, with
/// j-i crosses (and equally many empties) strictly in between.
struct LeftMove {
  int i = 0;
  int j = 0;
  int target = 0;

  friend bool operator==(const LeftMove&, const LeftMove&) = default;
};

/// Validated left path: moves with strictly increasing j, applied
/// independently to the base diagram.
struct LeftPath {
  std::vector<LeftMove> moves;

  int length() const { return static_cast<int>(moves.size()); }
  friend bool operator==(const LeftPath&, const LeftPath&) = default;
};

/// Right-move selector theta in {0,1}^r.
struct RightPath {
  std::vector<int> theta;
};

struct PathValidity {
  bool ok = false;
  std::string reason;
};

struct PathStats {
  int length = 0;
  bool has_range = false;
  int lo = 0;  // i_0 = min i
  int hi = 0;  // j_k
  int depth = 0;
};

/// Right move of the i-th cross: (j, target vertex).
std::pair<int, int> right_move(const WeightDiagram& d, int i);

/// All admissible left moves of the j-th cross, nearest target first.
std::vector<LeftMove> left_move_candidates(const WeightDiagram& d, int j);

/// Conditions (1)-(3) of the path definition plus pairwise-distinct
/// targets; the blocking-cross count of condition (3) is taken with the
/// earlier moves applied, which is what makes the enumeration agree with
/// the raising-operator characterization.  The diagnostic names the
/// first violation.
PathValidity validate_left_path(const WeightDiagram& d,
                                const std::vector<std::pair<int, int>>& moves);

/// Validates and fills in targets; throws on invalid input.
LeftPath resolve_left_path(const WeightDiagram& d,
                           const std::vector<std::pair<int, int>>& moves);

Weight apply_left_path(const WeightDiagram& d, const LeftPath& p);
WeightDiagram apply_left_path_diagram(const WeightDiagram& d, const LeftPath& p);

Weight apply_right_path(const WeightDiagram& d, const RightPath& theta);

PathStats path_stats(const LeftPath& p);

/// Decomposition into indecomposable blocks (disjoint sum).
std::vector<LeftPath> blocks(const LeftPath& p);

/// Some cross inside a move's span [i_a, j_a) is itself unmoved.
bool has_bridges(const LeftPath& p);

/// p's moves are a subset of q's moves (p is assumed valid).
bool is_subpath(const LeftPath& p, const LeftPath& q);

/// The unique length-r path (bottom composition factor).
LeftPath bottom_path(const WeightDiagram& d);

/// The unique bridgeless path moving exactly the first k crosses.
LeftPath bridgeless_path(const WeightDiagram& d, int k);

/// "L11 L12"; indices >= 10 are written "Li.j".
std::string path_to_string(const LeftPath& p);
std::vector<std::pair<int, int>> parse_moves(std::string_view text);
RightPath parse_theta(std::string_view text);
std::string theta_to_string(const RightPath& theta);

}  // namespace kac
