#include <doctest.h>

#include <algorithm>
#include <set>

#include "kac/enumeration.hpp"
#include "support.hpp"

using namespace kac;

namespace {

WeightDiagram example() {
  return diagram_of(parse_weight(kac_test::kExample));
}

// The full path list of the worked example, frozen.
const std::vector<std::string> kPaths = {
    "L0",
    "L11",
    "L11 L12",
    "L33",
    "L11 L33",
    "L11 L12 L33",
    "L11 L13",
    "L44",
    "L11 L44",
    "L11 L12 L44",
    "L33 L44",
    "L11 L33 L44",
    "L11 L12 L33 L44",
    "L11 L13 L44",
    "L34",
    "L11 L34",
    "L11 L12 L34",
    "L11 L14",
    "L11 L33 L14",
};

struct CodeRow {
  std::string path;
  std::vector<int> entries;
  std::optional<int> label;
};

const std::vector<CodeRow> kCodes = {
    {"L0", {0, 0, 0, 0}, {}},
    {"L11", {1, 0, 0, 0}, {}},
    {"L11 L12", {1, 2, 0, 0}, 2},
    {"L33", {0, 0, 3, 0}, {}},
    {"L11 L33", {1, 0, 3, 0}, {}},
    {"L11 L12 L33", {1, 2, 3, 0}, 2},
    {"L11 L13", {1, 3, 3, 0}, 3},
    {"L44", {0, 0, 0, 4}, {}},
    {"L11 L44", {1, 0, 0, 4}, {}},
    {"L11 L12 L44", {1, 2, 0, 4}, 2},
    {"L33 L44", {0, 0, 3, 4}, {}},
    {"L11 L33 L44", {1, 0, 3, 4}, {}},
    {"L11 L12 L33 L44", {1, 2, 3, 4}, 2},
    {"L11 L13 L44", {1, 3, 3, 4}, 3},
    {"L34", {0, 0, 4, 4}, {}},
    {"L11 L34", {1, 0, 4, 4}, {}},
    {"L11 L12 L34", {1, 2, 4, 4}, 2},
    {"L11 L14", {1, 4, 4, 4}, 4},
    {"L11 L33 L14", {1, 4, 3, 4}, 4},
};

}  // namespace

TEST_CASE("the example has exactly the 19 known paths") {
  PathSet ps = enumerate_paths(example());
  std::set<std::string> got, want(kPaths.begin(), kPaths.end());
  for (const PathEntry& e : ps.paths) got.insert(path_to_string(e.path));
  CHECK(got == want);
  CHECK(ps.paths.size() == 19);
}

TEST_CASE("path lengths form the layer histogram (1,4,7,6,1)") {
  PathSet ps = enumerate_paths(example());
  std::vector<int> hist(5, 0);
  for (const PathEntry& e : ps.paths) hist[e.length]++;
  CHECK(hist == std::vector<int>{1, 4, 7, 6, 1});
}

TEST_CASE("path weights are dominant and pairwise distinct") {
  PathSet ps = enumerate_paths(example());
  std::set<std::string> seen;
  for (const PathEntry& e : ps.paths) {
    CHECK(is_dominant(e.weight));
    CHECK(seen.insert(format_weight(e.weight)).second);
  }
}

TEST_CASE("indecomposable blocks are bridgeless iff length exceeds depth by one") {
  PathSet ps = enumerate_paths(example());
  for (const PathEntry& e : ps.paths) {
    for (const LeftPath& b : blocks(e.path)) {
      PathStats s = path_stats(b);
      CHECK(!has_bridges(b) == (s.length == s.depth + 1));
    }
  }
}

TEST_CASE("every factor passes the raising-operator check") {
  Weight lam = parse_weight(kac_test::kExample);
  PathSet ps = enumerate_paths(example());
  for (const PathEntry& e : ps.paths) {
    auto theta = brundan_check(lam, e.weight);
    REQUIRE(theta.has_value());
    int raises = static_cast<int>(
        std::count(theta->theta.begin(), theta->theta.end(), 1));
    CHECK(raises == e.length);
  }
  // A weight outside the block cannot be raised back to lambda.
  Weight below = translate(ps.paths.back().weight, -1);
  CHECK(!brundan_check(lam, below).has_value());
}

TEST_CASE("codes match the reference table") {
  PathSet ps = enumerate_paths(example());
  std::map<std::string, const PathEntry*> by_name;
  for (const PathEntry& e : ps.paths) by_name[path_to_string(e.path)] = &e;
  for (const CodeRow& row : kCodes) {
    REQUIRE(by_name.count(row.path));
    Code c = path_to_code(by_name[row.path]->path, 4);
    CHECK(c.entries == row.entries);
    CHECK(c.label == row.label);
  }
}

TEST_CASE("json export carries every path with its code") {
  Weight w = parse_weight(kac_test::kExample);
  PathSet ps = enumerate_paths(diagram_of(w));
  nlohmann::json j = pathset_to_json(w, ps);
  REQUIRE(j.contains("paths"));
  CHECK(j["paths"].size() == 19);
  for (const auto& p : j["paths"]) {
    CHECK(p.contains("moves"));
    CHECK(p.contains("length"));
    CHECK(p.contains("weight"));
    CHECK(p.contains("code"));
  }
}

TEST_CASE("enumeration is deterministic") {
  PathSet a = enumerate_paths(example());
  PathSet b = enumerate_paths(example());
  REQUIRE(a.paths.size() == b.paths.size());
  for (size_t i = 0; i < a.paths.size(); ++i) {
    CHECK(a.paths[i].path == b.paths[i].path);
  }
}
