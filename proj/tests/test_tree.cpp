#include "quartet/tree.hpp"

#include <set>

#include "doctest.h"
#include "quartet/errors.hpp"
#include "quartet/rng.hpp"
#include "quartet/search.hpp"
#include "test_oracles.hpp"

using namespace quartet;

TEST_SUITE_BEGIN("tree");

TEST_CASE("single quartet layout") {
  const Tree t = Tree::single_quartet();
  CHECK(t.leaf_count() == 4);
  CHECK(t.node_count() == 6);
  for (int leaf = 0; leaf < 4; ++leaf) CHECK(t.degree(leaf) == 1);
  for (int internal = 4; internal < 6; ++internal) CHECK(t.degree(internal) == 3);
  CHECK(t.valid());
}

TEST_CASE("construction rejects bad edge lists") {
  CHECK_THROWS_AS(Tree(3, {}), input_error);
  // missing edge
  CHECK_THROWS_AS(Tree(4, {{0, 4}, {1, 4}, {4, 5}, {2, 5}}), input_error);
  // leaf with degree 2
  CHECK_THROWS_AS(Tree(4, {{0, 4}, {1, 4}, {0, 5}, {2, 5}, {3, 5}}), input_error);
  // disconnected ring cannot even reach full degree without duplicates
  CHECK_THROWS_AS(Tree(4, {{0, 4}, {1, 4}, {4, 5}, {2, 5}, {3, 5}, {4, 5}}), input_error);
}

TEST_CASE("leaf distances on the single quartet") {
  // 0 and 1 share internal node 4; 2 and 3 share node 5.
  const Tree t = Tree::single_quartet();
  const auto d = t.leaf_distances();
  const int n = 4;
  CHECK(d[0 * n + 1] == 2);
  CHECK(d[0 * n + 2] == 3);
  CHECK(d[0 * n + 3] == 3);
  CHECK(d[2 * n + 3] == 2);
  for (int a = 0; a < n; ++a) CHECK(d[a * n + a] == 0);
}

TEST_CASE("leaf distances match the DFS oracle") {
  Rng rng(2024);
  for (int n : {5, 8, 18}) {
    const Tree t = random_tree(n, rng);
    const auto d = t.leaf_distances();
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        CHECK(d[a * n + b] == testing::dfs_leaf_distance(t, a, b));
        CHECK(d[a * n + b] == d[b * n + a]);
        if (a != b) CHECK(d[a * n + b] >= 2);
      }
    }
  }
}

TEST_CASE("builder covers every choice sequence with valid trees") {
  TreeBuilder builder(6);
  std::set<std::vector<std::pair<int, int>>> edge_sets;
  std::vector<int> choices(3);
  int count = 0;
  for (choices[0] = 0; choices[0] < TreeBuilder::choices_for_leaf(3); ++choices[0])
    for (choices[1] = 0; choices[1] < TreeBuilder::choices_for_leaf(4); ++choices[1])
      for (choices[2] = 0; choices[2] < TreeBuilder::choices_for_leaf(5); ++choices[2]) {
        const Tree t = builder.build(choices);
        CHECK(t.valid());
        edge_sets.insert(t.edges());
        ++count;
      }
  CHECK(count == 3 * 5 * 7);
}

TEST_CASE("random trees satisfy the invariants") {
  Rng rng(7);
  for (int n : {4, 7, 10}) {
    for (int rep = 0; rep < 50; ++rep) {
      const Tree t = random_tree(n, rng);
      CHECK(t.node_count() == 2 * n - 2);
      CHECK(t.valid());
    }
  }
  CHECK_THROWS_AS(random_tree(3, rng), input_error);
}

TEST_SUITE_END();
