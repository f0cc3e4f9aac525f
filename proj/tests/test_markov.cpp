#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "latgerm/json_io.hpp"
#include "latgerm/markov.hpp"

using namespace latgerm;

TEST_CASE("the defining equation") {
  CHECK(is_markov(1, 1, 1));
  CHECK(is_markov(2, 1, 1));
  CHECK(is_markov(1, 2, 5));
  CHECK_FALSE(is_markov(2, 2, 2));
  CHECK_THROWS_WITH_AS(is_markov(0, 1, 1), doctest::Contains("NonPositiveEntry"), DomainError);
}

TEST_CASE("per-slot mutation") {
  CHECK(mutate_triple(MarkovTriple(1, 1, 1), 3) == MarkovTriple(1, 1, 2));
  CHECK(mutate_triple(MarkovTriple(1, 2, 5), 1) == MarkovTriple(29, 2, 5));
  CHECK(mutate_triple(MarkovTriple(1, 1, 2), 3) == MarkovTriple(1, 1, 1));
}

TEST_CASE("tree up to thirty") {
  MarkovTree tree = markov_tree(30);
  std::set<std::array<Int, 3>> got;
  for (const auto& node : tree.nodes) got.insert(node.triple);
  std::set<std::array<Int, 3>> expected{
      {1, 1, 1}, {1, 1, 2}, {1, 2, 5}, {1, 5, 13}, {2, 5, 29}};
  CHECK(got == expected);
}

TEST_CASE("tree with trivial bound") {
  MarkovTree tree = markov_tree(1);
  REQUIRE(tree.nodes.size() == 1);
  CHECK(tree.nodes[0].triple == std::array<Int, 3>{1, 1, 1});
}

TEST_CASE("mutation closure and involution over the enumerated tree") {
  MarkovTree tree = markov_tree(1000);
  for (const auto& node : tree.nodes) {
    MarkovTriple t(node.triple[0], node.triple[1], node.triple[2]);
    for (int slot = 1; slot <= 3; ++slot) {
      MarkovTriple child = mutate_triple(t, slot);  // constructor revalidates
      CHECK(mutate_triple(child, slot) == t);
    }
  }
}

TEST_CASE("deterministic serialization") {
  CHECK(markov_tree_to_json(markov_tree(200)) == markov_tree_to_json(markov_tree(200)));
}

TEST_CASE("paths reach their triples") {
  MarkovTree tree = markov_tree(600);
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    std::array<Int, 3> t{1, 1, 1};
    for (int slot : tree.path_to(i)) {
      MarkovTriple cur(t[0], t[1], t[2]);
      t = mutate_triple(cur, slot).sorted();
    }
    CHECK(t == tree.nodes[i].triple);

    // The canonical descent path reaches the same triple.
    std::array<Int, 3> via_descent{1, 1, 1};
    for (int slot : markov_path(MarkovTriple(tree.nodes[i].triple[0], tree.nodes[i].triple[1],
                                             tree.nodes[i].triple[2]))) {
      MarkovTriple cur(via_descent[0], via_descent[1], via_descent[2]);
      via_descent = mutate_triple(cur, slot).sorted();
    }
    CHECK(via_descent == tree.nodes[i].triple);
  }
}
