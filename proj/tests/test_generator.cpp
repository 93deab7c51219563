#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>

#include "ortree/generator.hpp"
#include "ortree/oracle.hpp"

using ortree::Delta;
using ortree::OrderedTree;

namespace {
OrderedTree T(std::initializer_list<int> levels) { return OrderedTree::from_levels(levels); }

std::vector<std::string> as_text(const std::vector<OrderedTree>& trees) {
  std::vector<std::string> out;
  for (const auto& t : trees) out.push_back(ortree::encode_levels(t));
  return out;
}
}  // namespace

TEST_SUITE("generator") {
  TEST_CASE("small levels") {
    CHECK(ortree::gray_code(1) == std::vector<OrderedTree>{T({1})});
    CHECK(ortree::gray_code(2) == std::vector<OrderedTree>{T({1, 2})});
    CHECK(ortree::gray_code(3) == std::vector<OrderedTree>{T({1, 2, 2}), T({1, 2, 3})});
    CHECK(as_text(ortree::gray_code(4)) ==
          std::vector<std::string>{"1,2,2,2", "1,2,2,3", "1,2,3,3", "1,2,3,4", "1,2,3,2"});
    CHECK_THROWS_AS(ortree::GrayCode(0), std::invalid_argument);
  }

  TEST_CASE("regression snapshot for five vertices") {
    // Recorded from a separate prototype of the same case rules; Gray and
    // complete by brute force.
    CHECK(as_text(ortree::gray_code(5)) ==
          std::vector<std::string>{"1,2,2,2,2", "1,2,2,2,3", "1,2,2,3,3", "1,2,2,3,2",
                                   "1,2,2,3,4", "1,2,3,3,4", "1,2,3,3,3", "1,2,3,3,2",
                                   "1,2,3,4,3", "1,2,3,4,5", "1,2,3,4,4", "1,2,3,4,2",
                                   "1,2,3,2,2", "1,2,3,2,3"});
  }

  TEST_CASE("first tree is the star, last trees are recorded") {
    const std::vector<std::string> last{"1,2,3", "1,2,3,2", "1,2,3,2,3", "1,2,3,2,3,3",
                                        "1,2,3,2,3,3,2", "1,2,3,2,3,3,2,3",
                                        "1,2,3,2,3,3,2,3,3", "1,2,3,2,3,3,2,3,3,2"};
    for (std::size_t n = 3; n <= 10; ++n) {
      const auto code = ortree::gray_code(n);
      std::vector<int> star(n, 2);
      star[0] = 1;
      CHECK(code.front() == OrderedTree::from_levels(star));
      CHECK(ortree::encode_levels(code.back()) == last[n - 3]);
    }
  }

  TEST_CASE("streaming iterator and counters") {
    ortree::GrayCode code(6);
    std::size_t count = 0;
    for (const OrderedTree& tree : code) {
      CHECK(tree.size() == 6);
      ++count;
    }
    CHECK(count == 42);
    CHECK(code.emitted() == 42);
    CHECK(code.next() == nullptr);
    CHECK(code.live_high_water().size() == 6);
  }

  TEST_CASE("delta stream") {
    CHECK(ortree::delta_stream(3) == std::vector<Delta>{{2, 3, 3}});
    const auto d4 = ortree::delta_stream(4);
    REQUIRE(d4.size() == 4);
    CHECK(d4.front() == Delta{2, 4, 3});
    CHECK(ortree::delta_stream(5).size() == 13);
    CHECK(ortree::delta_stream(1).empty());
  }

  TEST_CASE("delta replay reproduces the code") {
    for (std::size_t n = 1; n <= 10; ++n) {
      ortree::DeltaStream stream(n);
      const auto code = ortree::gray_code(n);
      OrderedTree current = stream.first();
      REQUIRE(current == code.front());
      std::size_t i = 1;
      while (const auto d = stream.next()) {
        current = ortree::apply_delta(current, *d);
        REQUIRE(current == code.at(i++));
      }
      CHECK(i == code.size());
    }
  }

  TEST_CASE("ancestors of the top level visit every lower level in order") {
    const std::size_t n = 10;
    const auto top = ortree::gray_code(n);
    for (std::size_t k = 1; k < n; ++k) {
      std::vector<OrderedTree> ancestors;
      for (const auto& tree : top) {
        OrderedTree a = tree;
        while (a.size() > k) a = ortree::parent(a);
        if (ancestors.empty() || ancestors.back() != a) ancestors.push_back(a);
      }
      CHECK(ancestors == ortree::gray_code(k));
    }
  }

  TEST_CASE("on_emit sees every level in Gray order") {
    const std::size_t n = 8;
    std::vector<std::vector<OrderedTree>> levels(n);
    ortree::GeneratorOptions options;
    options.on_emit = [&](std::size_t level, const OrderedTree& t) {
      levels[level - 1].push_back(t);
    };
    ortree::GrayCode code(n, std::move(options));
    while (code.next() != nullptr) {
    }
    for (std::size_t k = 1; k <= n; ++k) CHECK(levels[k - 1] == ortree::gray_code(k));
  }

  TEST_CASE("unchecked mode emits the same sequence") {
    for (std::size_t n = 1; n <= 10; ++n)
      CHECK(ortree::gray_code(n, {.checked = false}) == ortree::gray_code(n));
  }

  TEST_CASE("live trees stay within three per level") {
    for (std::size_t n = 1; n <= 12; ++n) {
      ortree::GrayCode code(n, {.checked = false});
      while (code.next() != nullptr) {
      }
      CHECK(code.max_live_per_level() <= 3);
      CHECK(code.max_live_total() <= 3 * n);
    }
  }

  TEST_CASE("family tree") {
    const auto f2 = ortree::build_family_tree(2);
    REQUIRE(f2.levels.size() == 2);
    CHECK(f2.levels[0].front().tree == T({1}));
    CHECK(f2.levels[0].front().children == std::vector<std::size_t>{0});
    CHECK(f2.levels[1].front().tree == T({1, 2}));

    const auto f5 = ortree::build_family_tree(5);
    std::vector<std::size_t> sizes;
    for (const auto& level : f5.levels) sizes.push_back(level.size());
    CHECK(sizes == std::vector<std::size_t>{1, 1, 2, 5, 14});
    CHECK(f5.node_count() == 23);

    CHECK_THROWS_AS(ortree::build_family_tree(40), ortree::CapExceeded);
    CHECK_NOTHROW(ortree::build_family_tree(3, 3));
  }

  TEST_CASE("family tree links match parents and level order") {
    const std::size_t n = 8;
    const auto family = ortree::build_family_tree(n);
    for (std::size_t k = 1; k <= n; ++k) {
      const auto& level = family.levels[k - 1];
      std::vector<OrderedTree> trees;
      for (const auto& node : level) trees.push_back(node.tree);
      CHECK(trees == ortree::gray_code(k));
      if (k == n) continue;
      std::vector<std::size_t> concatenated;
      for (const auto& node : level) {
        CHECK(node.children.size() == static_cast<std::size_t>(node.tree.rpl() + 1));
        for (const std::size_t c : node.children) {
          CHECK(ortree::parent(family.levels[k][c].tree) == node.tree);
          concatenated.push_back(c);
        }
      }
      // Children lists tile the next level left to right.
      for (std::size_t i = 0; i < concatenated.size(); ++i) CHECK(concatenated[i] == i);
    }
  }

  TEST_CASE("dot export") {
    const auto dot2 = ortree::export_dot(ortree::build_family_tree(2));
    CHECK(dot2.find("\"()\" [label=\"1\"]") != std::string::npos);
    CHECK(dot2.find("\"(())\" [label=\"1,2\"]") != std::string::npos);
    CHECK(dot2.find("\"()\" -> \"(())\";") != std::string::npos);
    CHECK(std::count(dot2.begin(), dot2.end(), '>') == 1);

    const auto dot5 = ortree::export_dot(ortree::build_family_tree(5));
    std::istringstream lines(dot5);
    std::size_t nodes = 0, edges = 0;
    for (std::string line; std::getline(lines, line);) {
      if (line.find("[label=") != std::string::npos) ++nodes;
      if (line.find("->") != std::string::npos) ++edges;
    }
    CHECK(nodes == 23);
    CHECK(edges == 22);
    CHECK(dot5 == ortree::export_dot(ortree::build_family_tree(5)));
    CHECK(dot5.rfind("digraph", 0) == 0);
    CHECK(dot5.find("ordering=out") != std::string::npos);
  }
}
