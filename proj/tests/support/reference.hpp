#pragma once

// Test-only reference implementations. These work on an explicit pointer
// tree (or on raw integer vectors) and share nothing with the library but
// the OrderedTree value type, so they can serve as independent oracles.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "ortree/tree.hpp"

namespace ortree::reference {

struct Node {
  std::vector<Node> kids;
  friend bool operator==(const Node&, const Node&) = default;
};

inline Node build(const OrderedTree& tree) {
  Node root;
  std::vector<Node*> path{&root};
  const auto levels = tree.levels();
  for (std::size_t j = 1; j < levels.size(); ++j) {
    const std::size_t depth = levels[j];
    path.resize(depth - 1);
    path.back()->kids.emplace_back();
    path.push_back(&path.back()->kids.back());
  }
  return root;
}

inline void flatten(const Node& node, int level, std::vector<int>& out) {
  out.push_back(level);
  for (const Node& kid : node.kids) flatten(kid, level + 1, out);
}

inline OrderedTree to_tree(const Node& root) {
  std::vector<int> levels;
  flatten(root, 1, levels);
  return OrderedTree::from_levels(levels);
}

/// Walks the structure: root's last child has exactly one child, a leaf.
inline bool pony_tail(const OrderedTree& tree) {
  const Node root = build(tree);
  if (root.kids.empty()) return false;
  const Node& last = root.kids.back();
  return last.kids.size() == 1 && last.kids.front().kids.empty();
}

inline void collect_removals(Node& root, Node& node, std::vector<OrderedTree>& out,
                             const Node* skip) {
  for (std::size_t i = 0; i < node.kids.size(); ++i) {
    if (node.kids[i].kids.empty()) {
      if (&node.kids[i] == skip) continue;
      Node removed = node.kids[i];
      node.kids.erase(node.kids.begin() + static_cast<std::ptrdiff_t>(i));
      out.push_back(to_tree(root));
      node.kids.insert(node.kids.begin() + static_cast<std::ptrdiff_t>(i), removed);
    } else {
      collect_removals(root, node.kids[i], out, skip);
    }
  }
}

/// Every tree obtained by deleting one leaf (the root is never deleted).
inline std::set<OrderedTree> leaf_removals(const OrderedTree& tree) {
  Node root = build(tree);
  std::vector<OrderedTree> out;
  collect_removals(root, root, out, nullptr);
  return {out.begin(), out.end()};
}

/// T and U differ by one delete-and-append move iff deleting a leaf from
/// each can reach a common tree.
inline bool adjacent(const OrderedTree& t, const OrderedTree& u) {
  if (t == u || t.size() != u.size() || t.size() < 2) return false;
  const auto a = leaf_removals(t);
  const auto b = leaf_removals(u);
  return std::any_of(a.begin(), a.end(), [&](const OrderedTree& x) { return b.count(x) > 0; });
}

/// Structural copying: grow T by a rightmost leaf under the rightmost-path
/// vertex at level rpl(U), then delete any other leaf.
inline bool copying(const OrderedTree& t, const OrderedTree& u) {
  const int level = static_cast<int>(u.back()) - 1;
  if (level < 1 || level > static_cast<int>(t.back())) return false;
  Node root = build(t);
  Node* at = &root;
  for (int depth = 1; depth < level; ++depth) at = &at->kids.back();
  at->kids.emplace_back();
  const Node* appended = &at->kids.back();
  std::vector<OrderedTree> out;
  collect_removals(root, root, out, appended);
  return std::find(out.begin(), out.end(), u) != out.end();
}

/// Filters all of {1..n}^n by the level-step rule.
inline std::vector<OrderedTree> enumerate_by_filter(int n) {
  std::vector<OrderedTree> out;
  std::vector<int> seq(static_cast<std::size_t>(n), 1);
  while (true) {
    bool ok = seq[0] == 1;
    for (int j = 1; ok && j < n; ++j) ok = seq[j] >= 2 && seq[j] <= seq[j - 1] + 1;
    if (ok) out.push_back(OrderedTree::from_levels(seq));
    int j = n - 1;
    while (j >= 0 && seq[j] == n) seq[j--] = 1;
    if (j < 0) break;
    ++seq[j];
  }
  return out;
}

/// C(m+1) = sum C(i) C(m-i).
inline std::vector<std::uint64_t> catalan_by_recurrence(int count) {
  std::vector<std::uint64_t> c{1};
  for (int m = 0; m + 1 < count; ++m) {
    std::uint64_t next = 0;
    for (int i = 0; i <= m; ++i) next += c[i] * c[m - i];
    c.push_back(next);
  }
  return c;
}

struct Triple {
  int remove_at, insert_at, insert_level;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Every (remove_at, insert_at, insert_level) that deletes a leaf, inserts a
/// leaf, and produces U, in lexicographic order. Sequences are built in
/// full and filtered, without pruning.
inline std::vector<Triple> all_triples(const OrderedTree& t, const OrderedTree& u) {
  std::vector<Triple> out;
  const std::vector<int> src = t.to_vector();
  const int n = static_cast<int>(src.size());
  for (int r = 1; r <= n; ++r) {
    if (!(r == n || src[r] <= src[r - 1])) continue;
    std::vector<int> shortened = src;
    shortened.erase(shortened.begin() + (r - 1));
    if (shortened.empty()) continue;
    for (int p = 1; p <= n; ++p) {
      for (int level = 1; level <= n + 1; ++level) {
        std::vector<int> cand = shortened;
        cand.insert(cand.begin() + (p - 1), level);
        bool valid = cand[0] == 1;
        for (int j = 1; valid && j < n; ++j) valid = cand[j] >= 2 && cand[j] <= cand[j - 1] + 1;
        if (!valid) continue;
        const bool inserted_leaf = p == n || cand[p] <= cand[p - 1];
        if (inserted_leaf && cand == u.to_vector()) out.push_back({r, p, level});
      }
    }
  }
  return out;
}

}  // namespace ortree::reference
