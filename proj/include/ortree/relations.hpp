#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ortree/tree.hpp"

namespace ortree {

/// One delete-and-append move: drop the leaf at `remove_at` (1-based index
/// into the source sequence), then insert a leaf with level `insert_level`
/// at `insert_at` (1-based position in the shortened sequence).
struct Delta {
  int remove_at = 0;
  int insert_at = 0;
  int insert_level = 0;

  friend bool operator==(const Delta&, const Delta&) = default;
  friend auto operator<=>(const Delta&, const Delta&) = default;
};

/// "remove_at insert_at insert_level".
std::string format_delta(const Delta& d);
Delta parse_delta(std::string_view text);

/// The rightmost child of the root has exactly one child, which is a leaf.
bool has_pony_tail(const OrderedTree& tree);

/// T is copying U: appending child(T, rpl(U)) and then removing some other
/// leaf yields U. Throws std::invalid_argument on a size mismatch or T == U.
bool is_copying(const OrderedTree& t, const OrderedTree& u);

/// True iff some Delta turns T into U. Throws std::invalid_argument on a
/// size mismatch; equal trees are not adjacent.
bool is_adjacent(const OrderedTree& t, const OrderedTree& u);

/// Lexicographically least (remove_at, insert_at, insert_level) turning T
/// into U, or nullopt if none exists.
std::optional<Delta> find_delta(const OrderedTree& t, const OrderedTree& u);

/// As find_delta, but throws std::invalid_argument("not adjacent").
Delta delta(const OrderedTree& t, const OrderedTree& u);

/// Throws std::invalid_argument when `remove_at` is not a removable leaf,
/// the inserted vertex would not be a leaf, or the result is not a tree.
OrderedTree apply_delta(const OrderedTree& t, const Delta& d);

/// 1-based indices of the leaves whose removal leaves a non-empty tree.
std::vector<int> removable_leaves(const OrderedTree& tree);

}  // namespace ortree
