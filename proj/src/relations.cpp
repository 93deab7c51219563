#include "ortree/relations.hpp"

#include <sstream>
#include <stdexcept>

namespace ortree {

namespace {

void require_same_size(const OrderedTree& t, const OrderedTree& u, const char* op) {
  if (t.size() != u.size())
    throw std::invalid_argument(std::string(op) + ": trees have different sizes (" +
                                std::to_string(t.size()) + " vs " +
                                std::to_string(u.size()) + ")");
}

// Entry `i` (0-based) of T after removing 0-based index `removed`.
int shortened_at(std::span<const Level> t, std::size_t removed, std::size_t i) {
  return i < removed ? t[i] : t[i + 1];
}

// Does (T minus `removed`) with `level` inserted at 0-based `pos` equal U?
bool candidate_equals(std::span<const Level> t, std::size_t removed, std::size_t pos,
                      int level, std::span<const Level> u) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    int v;
    if (i < pos)
      v = shortened_at(t, removed, i);
    else if (i == pos)
      v = level;
    else
      v = shortened_at(t, removed, i - 1);
    if (v != u[i]) return false;
  }
  return true;
}

}  // namespace

std::string format_delta(const Delta& d) {
  return std::to_string(d.remove_at) + ' ' + std::to_string(d.insert_at) + ' ' +
         std::to_string(d.insert_level);
}

Delta parse_delta(std::string_view text) {
  std::istringstream in{std::string(text)};
  Delta d;
  std::string rest;
  if (!(in >> d.remove_at >> d.insert_at >> d.insert_level) || (in >> rest))
    throw std::invalid_argument("malformed delta '" + std::string(text) +
                                "': expected three integers");
  return d;
}

bool has_pony_tail(const OrderedTree& tree) {
  const auto levels = tree.levels();
  const auto n = levels.size();
  return n >= 3 && levels[n - 2] == 2 && levels[n - 1] == 3;
}

std::vector<int> removable_leaves(const OrderedTree& tree) {
  std::vector<int> out;
  if (tree.size() < 2) return out;
  for (std::size_t j = 2; j <= tree.size(); ++j)
    if (tree.is_leaf(j)) out.push_back(static_cast<int>(j));
  return out;
}

bool is_copying(const OrderedTree& t, const OrderedTree& u) {
  require_same_size(t, u, "is_copying");
  if (t == u) throw std::invalid_argument("is_copying: trees must be distinct");
  const int level = u.rpl();
  if (level < 1 || level > t.rpl() + 1) return false;
  const OrderedTree grown = child(t, level);
  const auto levels = grown.levels();
  const auto appended = static_cast<int>(grown.size());
  for (const int leaf : removable_leaves(grown)) {
    if (leaf == appended) continue;
    std::vector<Level> removed;
    removed.reserve(levels.size() - 1);
    removed.insert(removed.end(), levels.begin(), levels.begin() + (leaf - 1));
    removed.insert(removed.end(), levels.begin() + leaf, levels.end());
    if (OrderedTree::from_valid(std::move(removed)) == u) return true;
  }
  return false;
}

std::optional<Delta> find_delta(const OrderedTree& t, const OrderedTree& u) {
  require_same_size(t, u, "delta");
  if (t == u) return std::nullopt;
  const auto tl = t.levels();
  const auto ul = u.levels();
  const std::size_t n = t.size();
  for (const int leaf : removable_leaves(t)) {
    const std::size_t removed = static_cast<std::size_t>(leaf) - 1;
    // The shortened sequence has n-1 entries; position 1 is the root.
    for (std::size_t pos = 1; pos < n; ++pos) {
      const int before = shortened_at(tl, removed, pos - 1);
      const bool at_end = pos == n - 1;
      const int after = at_end ? 0 : shortened_at(tl, removed, pos);
      for (int level = 2; level <= before + 1; ++level) {
        if (!at_end && after > level) continue;  // would adopt `after` as a child
        if (candidate_equals(tl, removed, pos, level, ul))
          return Delta{leaf, static_cast<int>(pos) + 1, level};
      }
    }
  }
  return std::nullopt;
}

bool is_adjacent(const OrderedTree& t, const OrderedTree& u) {
  return find_delta(t, u).has_value();
}

Delta delta(const OrderedTree& t, const OrderedTree& u) {
  if (auto d = find_delta(t, u)) return *d;
  throw std::invalid_argument("not adjacent");
}

OrderedTree apply_delta(const OrderedTree& t, const Delta& d) {
  const auto n = static_cast<int>(t.size());
  if (n < 2) throw std::invalid_argument("apply_delta: tree has no removable leaf");
  if (d.remove_at < 2 || d.remove_at > n || !t.is_leaf(d.remove_at))
    throw std::invalid_argument("apply_delta: index " + std::to_string(d.remove_at) +
                                " is not a removable leaf");
  const auto levels = t.levels();
  std::vector<int> seq;
  seq.reserve(levels.size());
  for (int j = 0; j < n; ++j)
    if (j != d.remove_at - 1) seq.push_back(levels[j]);
  if (d.insert_at < 1 || d.insert_at > n)
    throw std::invalid_argument("apply_delta: insert position " +
                                std::to_string(d.insert_at) + " out of range");
  const auto pos = static_cast<std::size_t>(d.insert_at - 1);
  if (pos < seq.size() && seq[pos] > d.insert_level)
    throw std::invalid_argument("apply_delta: inserted vertex would not be a leaf");
  seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(pos), d.insert_level);
  try {
    return OrderedTree::from_levels(seq);
  } catch (const InvalidTree& e) {
    throw std::invalid_argument(std::string("apply_delta: result is not a tree: ") +
                                e.what());
  }
}

}  // namespace ortree
