#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kac/weight.hpp"

namespace kac {

enum class Symbol : char { Empty = '.', Less = '<', Greater = '>', Cross = 'x' };

/// Weight diagram: the integer line decorated with x, <, > at finitely
/// many vertices (everything else empty).  Immutable after construction.
class WeightDiagram {
 public:
  WeightDiagram() = default;

  static WeightDiagram of(const Weight& w);

  Weight weight() const;

  Symbol at(int vertex) const;

  /// #crosses minus #empties strictly between s and t.  Requires s < t.
  int count_ell(int s, int t) const;

  /// Vertices carrying a cross, increasing; size = atypicality degree.
  std::vector<int> cross_positions() const;

  int m() const { return m_; }
  int n() const { return n_; }

  int min_vertex() const;  // smallest non-empty vertex (0 when blank)
  int max_vertex() const;

  /// "@<start>:<symbols>", e.g. "@1:xx.x>.x<.<".
  std::string to_string() const;
  static WeightDiagram parse(std::string_view text);

  const std::map<int, Symbol>& symbols() const { return symbols_; }

  friend bool operator==(const WeightDiagram& a, const WeightDiagram& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::map<int, Symbol> symbols_;  // finite support, no Empty entries
  int m_ = 0;
  int n_ = 0;
};

WeightDiagram diagram_of(const Weight& w);
Weight weight_of(const WeightDiagram& d);

}  // namespace kac
