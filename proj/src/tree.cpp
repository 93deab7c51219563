#include "ortree/tree.hpp"

#include <charconv>
#include <limits>

namespace ortree {

namespace {

thread_local std::uint64_t g_vertex_writes = 0;

constexpr int kMaxLevel = std::numeric_limits<Level>::max();

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' ||
                        s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

namespace work {
std::uint64_t vertex_writes() noexcept { return g_vertex_writes; }
void reset_vertex_writes() noexcept { g_vertex_writes = 0; }
}  // namespace work

OrderedTree::OrderedTree(std::vector<Level> levels) : levels_(std::move(levels)) {
  g_vertex_writes += levels_.size();
}

OrderedTree::OrderedTree(const OrderedTree& other) : levels_(other.levels_) {
  g_vertex_writes += levels_.size();
}

OrderedTree& OrderedTree::operator=(const OrderedTree& other) {
  if (this != &other) {
    levels_ = other.levels_;
    g_vertex_writes += levels_.size();
  }
  return *this;
}

OrderedTree OrderedTree::from_levels(std::span<const int> levels) {
  if (levels.empty()) throw InvalidTree("empty level sequence", 0);
  if (levels[0] != 1) throw InvalidTree("root level must be 1 (index 1)", 1);
  std::vector<Level> out;
  out.reserve(levels.size());
  out.push_back(1);
  for (std::size_t j = 1; j < levels.size(); ++j) {
    const int value = levels[j];
    const auto index = std::to_string(j + 1);
    if (value < 2)
      throw InvalidTree("level " + std::to_string(value) + " at index " + index +
                            " is below 2",
                        j + 1);
    if (value > levels[j - 1] + 1)
      throw InvalidTree("jump from level " + std::to_string(levels[j - 1]) +
                            " to " + std::to_string(value) + " at index " + index,
                        j + 1);
    if (value > kMaxLevel)
      throw InvalidTree("level exceeds " + std::to_string(kMaxLevel) +
                            " at index " + index,
                        j + 1);
    out.push_back(static_cast<Level>(value));
  }
  return OrderedTree(std::move(out));
}

OrderedTree OrderedTree::from_levels(std::initializer_list<int> levels) {
  return from_levels(std::span<const int>(levels.begin(), levels.size()));
}

OrderedTree OrderedTree::from_valid(std::vector<Level> levels) {
  return OrderedTree(std::move(levels));
}

OrderedTree OrderedTree::trivial() { return OrderedTree(std::vector<Level>{1}); }

bool OrderedTree::is_leaf(std::size_t index) const {
  if (index == 0 || index > levels_.size())
    throw std::out_of_range("vertex index " + std::to_string(index) + " out of range");
  return index == levels_.size() || levels_[index] <= levels_[index - 1];
}

std::vector<int> OrderedTree::to_vector() const {
  return {levels_.begin(), levels_.end()};
}

OrderedTree validate(std::span<const int> levels) {
  return OrderedTree::from_levels(levels);
}

int rpl(const OrderedTree& tree) { return tree.rpl(); }

OrderedTree parent(const OrderedTree& tree) {
  if (tree.size() < 2)
    throw std::invalid_argument("the one-vertex tree has no parent");
  const auto prefix = tree.levels().first(tree.size() - 1);
  return OrderedTree::from_valid({prefix.begin(), prefix.end()});
}

OrderedTree child(const OrderedTree& tree, int i) {
  const int limit = tree.rpl() + 1;
  if (i < 1 || i > limit)
    throw std::out_of_range("child index " + std::to_string(i) + " outside 1.." +
                            std::to_string(limit));
  if (i + 1 > kMaxLevel) throw std::length_error("tree too deep");
  const auto levels = tree.levels();
  std::vector<Level> out(levels.begin(), levels.end());
  out.push_back(static_cast<Level>(i + 1));
  return OrderedTree::from_valid(std::move(out));
}

std::string encode_parens(const OrderedTree& tree) {
  // Each vertex opens one paren; close parens as the level drops back.
  std::string out;
  out.reserve(2 * tree.size());
  int depth = 0;
  for (const Level level : tree.levels()) {
    for (; depth >= level; --depth) out.push_back(')');
    out.push_back('(');
    depth = level;
  }
  for (; depth > 0; --depth) out.push_back(')');
  return out;
}

OrderedTree decode_parens(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw InvalidTree("empty parenthesis string", 0);
  std::vector<Level> levels;
  int depth = 0;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '(') {
      if (depth == 0 && !levels.empty())
        throw InvalidTree("more than one root at position " + std::to_string(pos + 1),
                          pos + 1);
      ++depth;
      if (depth > kMaxLevel) throw InvalidTree("tree too deep", pos + 1);
      levels.push_back(static_cast<Level>(depth));
    } else if (c == ')') {
      if (depth == 0)
        throw InvalidTree("unbalanced ')' at position " + std::to_string(pos + 1),
                          pos + 1);
      --depth;
    } else {
      throw InvalidTree("unexpected character at position " + std::to_string(pos + 1),
                        pos + 1);
    }
  }
  if (depth != 0) throw InvalidTree("unbalanced: missing ')'", text.size());
  return OrderedTree::from_valid(std::move(levels));
}

std::string encode_levels(const OrderedTree& tree) {
  std::string out;
  for (const Level level : tree.levels()) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(level);
  }
  return out;
}

OrderedTree decode_levels(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw InvalidTree("empty level sequence", 0);
  std::vector<int> values;
  while (true) {
    const auto comma = text.find(',');
    const auto field = trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
      throw InvalidTree("malformed level '" + std::string(field) + "' at index " +
                            std::to_string(values.size() + 1),
                        values.size() + 1);
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return OrderedTree::from_levels(values);
}

OrderedTree parse_tree(std::string_view text) {
  const auto t = trim(text);
  if (!t.empty() && (t.front() == '(' || t.front() == ')')) return decode_parens(t);
  return decode_levels(t);
}

}  // namespace ortree

std::size_t std::hash<ortree::OrderedTree>::operator()(
    const ortree::OrderedTree& tree) const noexcept {
  // FNV-1a over the level bytes.
  std::size_t h = 14695981039346656037ull;
  for (const auto level : tree.levels()) {
    h ^= level;
    h *= 1099511628211ull;
  }
  return h;
}
