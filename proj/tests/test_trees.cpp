#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "conc2/oracle.hpp"
#include "conc2/trees.hpp"

using namespace conc2;

namespace {

NumericalSemigroup gen(std::vector<int> gens) {
  return NumericalSemigroup::from_generators(std::move(gens));
}

std::vector<NumericalSemigroup> child_sets(const std::vector<TreeNode>& nodes) {
  std::vector<NumericalSemigroup> out;
  for (const auto& n : nodes) out.push_back(n.semigroup);
  return out;
}

}  // namespace

TEST_CASE("sons in the full tree") {
  auto kids = children_multiplicity_tree(gen({3, 4, 5}));
  REQUIRE(kids.size() == 2);
  CHECK(kids[0].semigroup == gen({3, 5, 7}));
  CHECK(kids[0].removed == 4);
  CHECK(kids[1].semigroup == gen({3, 4}));
  CHECK(kids[1].removed == 5);

  CHECK(children_multiplicity_tree(gen({4, 5, 7})).empty());

  auto kids2 = children_multiplicity_tree(gen({3, 5, 7}));
  REQUIRE(kids2.size() == 1);
  CHECK(kids2[0].semigroup == gen({3, 5}));
  CHECK(kids2[0].removed == 7);

  CHECK_THROWS_AS(children_multiplicity_tree(gen({3, 7, 8})),
                  ConcentrationTooHighError);
}

TEST_CASE("sons in the elementary tree") {
  auto kids = children_elementary_tree(gen({4, 5, 6, 7}));
  REQUIRE(kids.size() == 3);
  CHECK(kids[0].semigroup == gen({4, 6, 7, 9}));
  CHECK(kids[1].semigroup == gen({4, 5, 7}));
  CHECK(kids[2].semigroup == gen({4, 5, 6}));

  CHECK(children_elementary_tree(gen({4, 6, 9, 11})).empty());

  auto kids2 = children_elementary_tree(gen({4, 6, 7, 9}));
  REQUIRE(kids2.size() == 1);
  CHECK(kids2[0].semigroup == gen({4, 6, 9, 11}));
  CHECK(kids2[0].removed == 7);

  CHECK_THROWS_AS(children_elementary_tree(gen({3, 5})), NotElementaryError);
}

TEST_CASE("genus level sets") {
  auto level5 = enumerate_by_genus(4, 5);
  CHECK(level5 == std::vector<NumericalSemigroup>{gen({4, 6, 9, 11}),
                                                  gen({4, 6, 7})});
  auto level4 = enumerate_by_genus(4, 4);
  std::set<NumericalSemigroup> expect4{gen({4, 6, 7, 9}), gen({4, 5, 7}),
                                       gen({4, 5, 6})};
  CHECK(std::set<NumericalSemigroup>(level4.begin(), level4.end()) == expect4);

  CHECK(enumerate_by_genus(4, 3) ==
        std::vector<NumericalSemigroup>{NumericalSemigroup::ordinary(4)});

  auto level3 = enumerate_by_genus(3, 3);
  std::set<NumericalSemigroup> expect3{gen({3, 5, 7}), gen({3, 4})};
  CHECK(std::set<NumericalSemigroup>(level3.begin(), level3.end()) == expect3);

  CHECK_THROWS_AS(enumerate_by_genus(4, 2), InvalidGenusRangeError);
  CHECK_THROWS_AS(enumerate_by_genus(1, 5), InvalidGenusRangeError);
}

TEST_CASE("walk_tree") {
  EnumerationRequest req;
  req.multiplicity = 3;
  auto nodes = walk_tree(req);
  REQUIRE(nodes.size() == 4);
  auto sets = child_sets(nodes);
  std::set<NumericalSemigroup> got(sets.begin(), sets.end());
  std::set<NumericalSemigroup> expect{gen({3, 4, 5}), gen({3, 5, 7}),
                                      gen({3, 4}), gen({3, 5})};
  CHECK(got == expect);
  // parents precede children
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    REQUIRE(nodes[i].parent.has_value());
    CHECK(*nodes[i].parent < i);
    CHECK(nodes[i].removed == nodes[i].semigroup.frobenius());
    CHECK(nodes[i].depth == nodes[*nodes[i].parent].depth + 1);
  }

  req.mode = EnumerationMode::elementary_tree;
  req.multiplicity = 4;
  CHECK(walk_tree(req).size() == 5);

  EnumerationRequest even;
  even.multiplicity = 2;
  CHECK_THROWS_AS(walk_tree(even), EvenMultiplicityInfiniteError);
  even.max_genus = 4;
  auto m2 = walk_tree(even);
  auto sets2 = child_sets(m2);
  std::set<NumericalSemigroup> got2(sets2.begin(), sets2.end());
  std::set<NumericalSemigroup> expect2{NumericalSemigroup::ordinary(2),
                                       gen({2, 5}), gen({2, 7}), gen({2, 9})};
  CHECK(got2 == expect2);
}

TEST_CASE("depth equals genus minus (m-1) in the full tree") {
  EnumerationRequest req;
  req.multiplicity = 5;
  for (const auto& node : walk_tree(req)) {
    CHECK(node.depth == node.semigroup.genus() - 4);
  }
}

TEST_CASE("count and height") {
  CHECK(count_c2(3) == 3);
  CHECK_THROWS_AS(count_c2(2), EvenMultiplicityInfiniteError);
  CHECK(tree_height(3, TreeVariant::multiplicity) == 2);
  CHECK(tree_height(4, TreeVariant::elementary) == 2);
  CHECK_THROWS_AS(tree_height(4, TreeVariant::multiplicity),
                  EvenMultiplicityInfiniteError);

  // oracle count of C2[5]: brute force over all semigroups, then match
  auto universe = all_semigroups_by_genus(16);
  auto oracle = oracle_filter(universe, [](const NumericalSemigroup& s) {
    return s.multiplicity() == 5 && s.concentration() == 2;
  });
  // the whole family fits below the ceiling: the deepest level is empty
  CHECK(enumerate_by_genus(5, 15).empty());
  CHECK(count_c2(5) == static_cast<long long>(oracle.size()));
  CHECK(count_c2(5, 4) == count_c2(5));

  // genus spectrum of C2[5] is an interval {5, ..., 4 + height}
  std::set<int> genera;
  for (const auto& s : oracle) genera.insert(s.genus());
  CHECK(*genera.begin() == 5);
  CHECK(*genera.rbegin() == 4 + tree_height(5, TreeVariant::multiplicity));
  CHECK(static_cast<int>(genera.size()) ==
        tree_height(5, TreeVariant::multiplicity));
}

TEST_CASE("level sets agree with the oracle") {
  auto universe = all_semigroups_by_genus(12);
  for (int m = 2; m <= 9; ++m) {
    for (int g = m - 1; g <= 12; ++g) {
      auto produced = enumerate_by_genus(m, g);
      auto expected = oracle_filter(universe, [&](const NumericalSemigroup& s) {
        return s.multiplicity() == m && s.concentration() <= 2 && s.genus() == g;
      });
      CAPTURE(m);
      CAPTURE(g);
      CHECK(produced == expected);
    }
  }
}

TEST_CASE("minimum genus level of C2[m]") {
  for (int m = 2; m <= 9; ++m) {
    auto level = enumerate_by_genus(m, m);
    CHECK(static_cast<int>(level.size()) == m - 1);
    std::set<NumericalSemigroup> expect;
    auto root = NumericalSemigroup::ordinary(m);
    for (int i = 1; i <= m - 1; ++i) {
      expect.insert(root.remove_element(m + i));
    }
    CHECK(std::set<NumericalSemigroup>(level.begin(), level.end()) == expect);
  }
}

TEST_CASE("even multiplicity levels never die out") {
  for (int m : {2, 4, 6, 8}) {
    for (int g = m; g <= m + 12; ++g) {
      CAPTURE(m);
      CAPTURE(g);
      CHECK_FALSE(enumerate_by_genus(m, g).empty());
    }
  }
}

TEST_CASE("elementary tree embeds in the full tree") {
  for (int m : {3, 4, 5, 6}) {
    EnumerationRequest full;
    full.multiplicity = m;
    full.max_genus = 2 * m - 1;
    auto full_nodes = walk_tree(full);

    EnumerationRequest elem;
    elem.mode = EnumerationMode::elementary_tree;
    elem.multiplicity = m;
    for (const auto& node : walk_tree(elem)) {
      auto it = std::find_if(full_nodes.begin(), full_nodes.end(),
                             [&](const TreeNode& f) {
                               return f.semigroup == node.semigroup;
                             });
      REQUIRE(it != full_nodes.end());
      CHECK(it->depth == node.depth);
      // elementary sons = full-tree sons with removed element <= 2m-1
      auto full_kids = children_multiplicity_tree(node.semigroup);
      std::erase_if(full_kids, [&](const TreeNode& k) {
        return *k.removed > 2 * m - 1;
      });
      auto elem_kids = children_elementary_tree(node.semigroup);
      CHECK(child_sets(full_kids) == child_sets(elem_kids));
    }
  }
}

TEST_CASE("every node ascends to the root by filling the Frobenius gap") {
  EnumerationRequest req;
  req.multiplicity = 7;
  auto root = NumericalSemigroup::ordinary(7);
  for (const auto& node : walk_tree(req)) {
    NumericalSemigroup s = node.semigroup;
    int steps = 0;
    while (!(s == root)) {
      s = s.add_frobenius();
      ++steps;
      REQUIRE(steps <= node.depth);
    }
    CHECK(steps == node.depth);
  }
}

TEST_CASE("walks are deterministic") {
  EnumerationRequest req;
  req.mode = EnumerationMode::multiplicity_tree;
  req.multiplicity = 6;
  req.max_genus = 12;
  auto a = walk_tree(req);
  auto b = walk_tree(req);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].semigroup == b[i].semigroup);
    CHECK(a[i].removed == b[i].removed);
  }
}
