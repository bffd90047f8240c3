#pragma once

#include <string>
#include <vector>

#include "kac/diagram.hpp"

namespace kac {

/// Height vector h_s = lambda_{i_s} - j_s + s, one entry per atypical
/// pair, in increasing shared-value order.
std::vector<int> height_vector(const Weight& w);

/// The gl(r|r) core weight of w's block; maximally atypical.
Weight reduce_formula(const Weight& w);

/// Deletes all < and > vertices and re-indexes v -> v - #{deleted < v}.
/// Hard-asserts agreement with reduce_formula.
WeightDiagram reduce_surgery(const WeightDiagram& d);

struct InvarianceReport {
  bool ok = true;
  std::vector<std::string> failures;
  int path_count = 0;
  std::vector<int> length_histogram;
  Weight core;
};

/// Verifies that reduction preserves the path set (same move structure),
/// layer histogram, skeleton graph and per-pair Jantzen polynomials.
InvarianceReport check_block_invariance(const Weight& w);

}  // namespace kac
