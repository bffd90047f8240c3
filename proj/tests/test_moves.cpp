#include <doctest.h>

#include "kac/moves.hpp"
#include "support.hpp"

using namespace kac;

namespace {

WeightDiagram example() {
  return diagram_of(parse_weight(kac_test::kExample));
}

}  // namespace

TEST_CASE("right move of the first cross") {
  // x at 1 travels to 11, jumping the crosses at 2, 4, 7.
  auto [j, target] = right_move(example(), 1);
  CHECK(j == 4);
  CHECK(target == 11);
}

TEST_CASE("left move candidates of the last cross") {
  std::vector<LeftMove> c = left_move_candidates(example(), 4);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == LeftMove{4, 4, 6});
  CHECK(c[1] == LeftMove{3, 4, 3});
  CHECK(c[2] == LeftMove{1, 4, -1});
}

TEST_CASE("bottom path targets") {
  LeftPath p = resolve_left_path(example(), {{1, 1}, {1, 2}, {3, 3}, {4, 4}});
  std::vector<int> targets;
  for (const LeftMove& mv : p.moves) targets.push_back(mv.target);
  CHECK(targets == std::vector<int>{0, -1, 3, 6});
  CHECK(p == bottom_path(example()));
}

TEST_CASE("path validation rejects bad move lists") {
  WeightDiagram d = example();
  // Moves of crosses 3 and 4 collide on the empty vertex 3.
  CHECK(!validate_left_path(d, {{3, 3}, {3, 4}}).ok);
  // j must strictly increase.
  CHECK(!validate_left_path(d, {{3, 3}, {1, 1}}).ok);
  // Unmoved cross strictly inside a span blocks the overlap rule:
  // L13 requires the earlier j's to cover positions hit by its span.
  CHECK(!validate_left_path(d, {{1, 3}}).ok);
  CHECK(validate_left_path(d, {{1, 1}, {1, 3}}).ok);
  CHECK_THROWS_AS(resolve_left_path(d, {{3, 3}, {3, 4}}), domain_error);
}

TEST_CASE("a blocking cross is cleared by moving it below the obstruction") {
  // L12 moves the second cross below the first; only then may L13 jump
  // the first cross even though the base-diagram count would forbid it.
  WeightDiagram d = WeightDiagram::parse("@0:>..<x.xx");
  CHECK(!validate_left_path(d, {{1, 3}}).ok);
  CHECK(!validate_left_path(d, {{2, 2}, {1, 3}}).ok);
  CHECK(validate_left_path(d, {{1, 2}, {1, 3}}).ok);
  LeftPath p = resolve_left_path(d, {{1, 2}, {1, 3}});
  CHECK(apply_left_path_diagram(d, p) == WeightDiagram::parse("@0:>xx<x"));
}

TEST_CASE("block decomposition") {
  WeightDiagram d = example();
  LeftPath p = resolve_left_path(d, {{1, 1}, {1, 2}, {3, 3}, {4, 4}});
  std::vector<LeftPath> b = blocks(p);
  REQUIRE(b.size() == 3);
  CHECK(b[0].length() == 2);  // L11 L12
  CHECK(b[1].length() == 1);  // L33
  CHECK(b[2].length() == 1);  // L44
}

TEST_CASE("bridges") {
  WeightDiagram d = example();
  CHECK(has_bridges(resolve_left_path(d, {{1, 1}, {1, 3}})));
  CHECK(!has_bridges(resolve_left_path(d, {{1, 1}, {1, 2}})));
  CHECK(!has_bridges(resolve_left_path(d, {})));
  CHECK(!has_bridges(bottom_path(d)));
}

TEST_CASE("unique bridgeless path per prefix of crosses") {
  WeightDiagram d = example();
  std::vector<std::vector<std::pair<int, int>>> expect = {
      {},
      {{1, 1}},
      {{1, 1}, {1, 2}},
      {{1, 1}, {1, 2}, {3, 3}},
      {{1, 1}, {1, 2}, {3, 3}, {4, 4}},
  };
  for (int k = 0; k <= 4; ++k) {
    LeftPath p = bridgeless_path(d, k);
    CHECK(p == resolve_left_path(d, expect[k]));
    CHECK(!has_bridges(p));
    // Each one extends the previous (subpath chain).
    if (k > 0) CHECK(is_subpath(bridgeless_path(d, k - 1), p));
  }
  CHECK(bridgeless_path(d, 4) == bottom_path(d));
}

TEST_CASE("path statistics") {
  WeightDiagram d = example();
  PathStats s = path_stats(resolve_left_path(d, {{1, 1}, {1, 3}}));
  CHECK(s.length == 2);
  CHECK(s.has_range);
  CHECK(s.lo == 1);
  CHECK(s.hi == 3);
  CHECK(s.depth == 2);
  CHECK(!path_stats(LeftPath{}).has_range);
}

TEST_CASE("path text round trip") {
  WeightDiagram d = example();
  LeftPath p = bottom_path(d);
  CHECK(path_to_string(p) == "L11 L12 L33 L44");
  CHECK(resolve_left_path(d, parse_moves("L11 L12 L33 L44")) == p);
  CHECK(path_to_string(LeftPath{}) == "L0");
  RightPath theta = parse_theta("1011");
  CHECK(theta.theta == std::vector<int>{1, 0, 1, 1});
  CHECK(theta_to_string(theta) == "1011");
  CHECK_THROWS_AS(parse_theta("1,0"), domain_error);
  CHECK_THROWS_AS(parse_moves("L1"), domain_error);
}
