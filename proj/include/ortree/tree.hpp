#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ortree {

using Level = std::uint8_t;

/// Raised when a level sequence does not describe an ordered tree.
/// `index()` is the 1-based position of the offending entry (0 for an
/// empty sequence).
class InvalidTree : public std::invalid_argument {
 public:
  InvalidTree(const std::string& what, std::size_t index)
      : std::invalid_argument(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// An ordered tree stored as its preorder level sequence (root has level 1).
///
/// The level sequence is a canonical form: two trees are equal iff their
/// sequences are. Instances are immutable once built, so `parent` and
/// `child` return new values.
class OrderedTree {
 public:
  /// Throws InvalidTree unless levels[0] == 1 and 2 <= levels[j] <= levels[j-1]+1.
  static OrderedTree from_levels(std::span<const int> levels);
  static OrderedTree from_levels(std::initializer_list<int> levels);

  /// Skips validation. Caller guarantees the invariants.
  static OrderedTree from_valid(std::vector<Level> levels);

  /// The single-vertex tree.
  static OrderedTree trivial();

  OrderedTree(const OrderedTree& other);
  OrderedTree& operator=(const OrderedTree& other);
  OrderedTree(OrderedTree&&) noexcept = default;
  OrderedTree& operator=(OrderedTree&&) noexcept = default;
  ~OrderedTree() = default;

  std::size_t size() const noexcept { return levels_.size(); }
  std::span<const Level> levels() const noexcept { return levels_; }
  /// 1-based access, matching the level-sequence convention.
  int level(std::size_t index) const { return levels_.at(index - 1); }
  int back() const noexcept { return levels_.back(); }

  /// Number of edges on the rightmost path.
  int rpl() const noexcept { return static_cast<int>(levels_.back()) - 1; }

  /// True if the vertex at 1-based `index` has no children.
  bool is_leaf(std::size_t index) const;

  std::vector<int> to_vector() const;

  friend bool operator==(const OrderedTree&, const OrderedTree&) = default;
  friend std::strong_ordering operator<=>(const OrderedTree& a,
                                          const OrderedTree& b) {
    return a.levels_ <=> b.levels_;
  }

 private:
  explicit OrderedTree(std::vector<Level> levels);
  std::vector<Level> levels_;
};

/// Validates `levels` and returns the tree (alias of OrderedTree::from_levels).
OrderedTree validate(std::span<const int> levels);

int rpl(const OrderedTree& tree);

/// Removes the rightmost leaf. Throws std::invalid_argument on the
/// one-vertex tree, which has no parent in the family tree.
OrderedTree parent(const OrderedTree& tree);

/// Appends a new rightmost child to the vertex at level `i` on the
/// rightmost path. Valid for 1 <= i <= rpl(tree)+1; the result has rpl i.
OrderedTree child(const OrderedTree& tree, int i);

/// Balanced-parentheses encoding: a vertex is "(" + children + ")".
std::string encode_parens(const OrderedTree& tree);
OrderedTree decode_parens(std::string_view text);

/// Comma-separated level sequence, e.g. "1,2,2,3".
std::string encode_levels(const OrderedTree& tree);
OrderedTree decode_levels(std::string_view text);

/// Accepts either textual encoding, picking by the first character.
OrderedTree parse_tree(std::string_view text);

/// All trees of one vertex count, without duplicates.
struct LevelSet {
  std::size_t k = 0;
  std::vector<OrderedTree> trees;
};

namespace work {
/// Level entries written by OrderedTree construction and copying on the
/// calling thread. Instrumentation only.
std::uint64_t vertex_writes() noexcept;
void reset_vertex_writes() noexcept;
}  // namespace work

}  // namespace ortree

template <>
struct std::hash<ortree::OrderedTree> {
  std::size_t operator()(const ortree::OrderedTree& tree) const noexcept;
};
