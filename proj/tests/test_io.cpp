#include <sstream>

#include "doctest.h"
#include "quartet/cost_model.hpp"
#include "quartet/datagen.hpp"
#include "quartet/errors.hpp"
#include "quartet/matrix_io.hpp"
#include "quartet/newick.hpp"
#include "quartet/rng.hpp"
#include "quartet/scoring.hpp"
#include "quartet/search.hpp"

using namespace quartet;

TEST_SUITE_BEGIN("io");

TEST_CASE("matrix files round-trip exactly") {
  Rng rng(193);
  const auto [tree, matrix] = random_tree_metric(7, rng);
  const std::string text = format_matrix(matrix);
  std::istringstream in(text);
  const DistanceMatrix parsed = parse_matrix(in);
  CHECK(parsed.labels() == matrix.labels());
  CHECK(parsed.entries() == matrix.entries());  // bit-exact
  CHECK(format_matrix(parsed) == text);
}

TEST_CASE("matrix parser accepts scientific notation") {
  std::istringstream in(
      "4\n"
      "a 0 1e-1 2.5E-1 0.3\n"
      "b 1e-1 0 0.25 0.35\n"
      "c 2.5E-1 0.25 0 4.5e-1\n"
      "d 0.3 0.35 4.5e-1 0\n");
  const DistanceMatrix m = parse_matrix(in);
  CHECK(m.at(0, 1) == 0.1);
  CHECK(m.at(0, 2) == 0.25);
}

TEST_CASE("matrix parse errors name the offending line") {
  SUBCASE("bad count") {
    std::istringstream in("zero\n");
    CHECK_THROWS_WITH_AS(parse_matrix(in), doctest::Contains("line 1"), input_error);
  }
  SUBCASE("short row") {
    std::istringstream in("4\na 0 0.1 0.2 0.3\nb 0.1 0 0.4\n");
    CHECK_THROWS_WITH_AS(parse_matrix(in), doctest::Contains("line 3"), input_error);
  }
  SUBCASE("long row") {
    std::istringstream in("4\na 0 0.1 0.2 0.3 0.9\n");
    CHECK_THROWS_WITH_AS(parse_matrix(in), doctest::Contains("line 2"), input_error);
  }
  SUBCASE("bad number") {
    std::istringstream in("4\na 0 0.1 x 0.3\n");
    CHECK_THROWS_WITH_AS(parse_matrix(in), doctest::Contains("line 2"), input_error);
  }
  SUBCASE("missing rows") {
    std::istringstream in("4\na 0 0.1 0.2 0.3\n");
    CHECK_THROWS_WITH_AS(parse_matrix(in), doctest::Contains("line 3"), input_error);
  }
}

TEST_CASE("newick emission round-trips the quartet set") {
  Rng rng(197);
  for (int n : {4, 5, 9, 14}) {
    const Tree t = random_tree(n, rng);
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = alpha_label(i);
    const std::string text = emit_newick(t, labels);
    CHECK(text.back() == ';');
    const Tree parsed = parse_newick(text, labels);
    CHECK(embedded_quartet_set(parsed) == embedded_quartet_set(t));
    // label-discovery variant: alpha labels sort in id order here
    const auto [tree2, labels2] = parse_newick(text);
    CHECK(labels2 == labels);
    CHECK(embedded_quartet_set(tree2) == embedded_quartet_set(t));
  }
}

TEST_CASE("emission is canonical: equal trees emit equal text") {
  // The same topology assembled with different internal ids and edge order.
  const Tree a(5, {{0, 5}, {1, 5}, {5, 6}, {4, 6}, {6, 7}, {2, 7}, {3, 7}});
  const Tree b(5, {{3, 5}, {2, 5}, {5, 6}, {4, 6}, {0, 7}, {1, 7}, {7, 6}});
  REQUIRE(embedded_quartet_set(a) == embedded_quartet_set(b));
  const std::vector<std::string> labels{"u", "v", "w", "x", "y"};
  CHECK(emit_newick(a, labels) == emit_newick(b, labels));
}

TEST_CASE("newick parser handles rooted binary input and branch lengths") {
  const std::vector<std::string> labels{"a", "b", "c", "d"};
  const Tree t = parse_newick("((a:0.1,b:0.2):0.05,(c,d));", labels);
  CHECK(t.valid());
  CHECK(consistent_topology(t, Quartet{{0, 1, 2, 3}}).p == Pairing::small_second);
}

TEST_CASE("newick parse failures") {
  const std::vector<std::string> labels{"a", "b", "c", "d"};
  CHECK_THROWS_AS(parse_newick("((a,b),(c,d))", labels), input_error);   // missing ';'
  CHECK_THROWS_AS(parse_newick("((a,b),(c,e));", labels), input_error);  // unknown leaf
  CHECK_THROWS_AS(parse_newick("(a,b,c,d);", labels), input_error);      // quadfurcation
}

TEST_CASE("graph emission lists every node and edge") {
  Rng rng(199);
  const Tree t = random_tree(6, rng);
  std::vector<std::string> labels{"a", "b", "c", "d", "e", "f"};
  const std::string text = emit_graph(t, labels);
  std::istringstream in(text);
  std::string kind;
  int nodes = 0, edges = 0;
  std::string x, y;
  while (in >> kind) {
    if (kind == "node") {
      in >> x;
      ++nodes;
    } else if (kind == "edge") {
      in >> x >> y;
      ++edges;
    }
  }
  CHECK(nodes == 10);  // 2n-2
  CHECK(edges == 9);   // 2n-3
}

TEST_CASE("weight files parse and build the reflected table") {
  std::ostringstream text;
  text << "quartets 5\n";
  text << "labels u v w x y\n";
  // the five-object gap instance written as weights w = 1 - cost
  const double eps = 0.1;
  text << "0 1 2 3 " << eps << "\n";   // 01|23 costs 1-eps
  text << "0 2 1 3 1\n0 3 1 2 1\n";    // remaining pairings of {0,1,2,3} cost 0
  text << "0 1 2 4 1\n0 1 3 4 1\n0 4 2 3 1\n1 4 2 3 1\n";  // the free splits
  // everything else defaults to weight 0 = cost 1
  std::istringstream in(text.str());
  const auto [list, labels] = parse_weights(in);
  CHECK(labels == std::vector<std::string>{"u", "v", "w", "x", "y"});
  const auto table = costs_from_weights(list);
  const auto expected = no_perfect_tree_table(eps);
  REQUIRE(table.costs().size() == expected.costs().size());
  for (std::size_t i = 0; i < table.costs().size(); ++i)
    CHECK(table.costs()[i] == doctest::Approx(expected.costs()[i]).epsilon(1e-12));
}

TEST_CASE("weight file errors") {
  SUBCASE("bad header") {
    std::istringstream in("matrix 5\n");
    CHECK_THROWS_AS(parse_weights(in), input_error);
  }
  SUBCASE("bad entry") {
    std::istringstream in("quartets 5\n0 1 2 0.5\n");
    CHECK_THROWS_WITH_AS(parse_weights(in), doctest::Contains("line 2"), input_error);
  }
  SUBCASE("repeated ids") {
    std::istringstream in("quartets 5\n0 1 1 3 0.5\n");
    CHECK_THROWS_WITH_AS(parse_weights(in), doctest::Contains("line 2"), input_error);
  }
}

TEST_SUITE_END();
