#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kac/enumeration.hpp"

namespace kac {

/// Primitive weight graph of a Kac module: vertices are the left paths,
/// skeleton edges the direct-derivation covers, layers the Jantzen
/// (= Loewy) layers indexed by path length.
struct PrimitiveWeightGraph {
  PathSet vertices;
  int r = 0;
  std::vector<std::pair<int, int>> skeleton;  // (u, v), length(v) = length(u)+1
  std::vector<std::vector<int>> adjacency;    // skeleton out-edges per vertex
  int source = -1;  // empty path
  int bottom = -1;  // unique length-r path
};

PrimitiveWeightGraph build_graph(const Weight& w);

/// Irreflexive transitive closure of the skeleton; closure[u][v] true
/// iff v is derived from u.
std::vector<std::vector<char>> derived_closure(const PrimitiveWeightGraph& g);

/// Layer k = vertices of path length k, k = 0..r.
std::vector<std::vector<int>> jantzen_layers(const PrimitiveWeightGraph& g);

/// Longest chain in the skeleton with a witness vertex sequence.
std::pair<int, std::vector<int>> max_chain(const PrimitiveWeightGraph& g);

/// The chain L_empty -> L_[1,1] -> ... -> L_[1,r] as vertex indices.
std::vector<int> canonical_chain(const PrimitiveWeightGraph& g);

std::string export_dot(const PrimitiveWeightGraph& g);
nlohmann::json export_json(const PrimitiveWeightGraph& g);

}  // namespace kac
