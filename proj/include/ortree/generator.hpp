#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ortree/ordering.hpp"
#include "ortree/relations.hpp"
#include "ortree/tree.hpp"

namespace ortree {

class CapExceeded : public std::length_error {
 public:
  CapExceeded(std::size_t n, std::size_t cap)
      : std::length_error("n=" + std::to_string(n) + " exceeds the cap of " +
                          std::to_string(cap)),
        n_(n),
        cap_(cap) {}
  std::size_t n() const noexcept { return n_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

struct GeneratorOptions {
  /// Run the brute-force adjacency check on every step boundary.
  bool checked = true;
  CaseHistogram* histogram = nullptr;
  /// Called for every tree any level of the stack emits, in emission order.
  std::function<void(std::size_t level, const OrderedTree&)> on_emit;
  /// Called with each parent tree and the child order chosen for it.
  std::function<void(const OrderedTree& parent, const StepPlan&)> on_plan;
};

/// Streams the Gray code of one level, pulling parents from the level
/// below with one tree of lookahead.
///
/// Children of the current parent are kept as child indices and built one
/// at a time, so the generator holds at most the current parent, the
/// lookahead parent, and the tree it last emitted.
class LevelGenerator {
 public:
  LevelGenerator(std::size_t level, std::unique_ptr<LevelGenerator> source,
                 std::shared_ptr<const GeneratorOptions> options);

  /// The next tree, or nullptr when the level is exhausted. The pointer is
  /// valid until the following call.
  const OrderedTree* next();

  std::size_t level() const noexcept { return level_; }
  const LevelGenerator* source() const noexcept { return source_.get(); }

  /// OrderedTree values held from level()-1 (current and lookahead parent).
  std::size_t held_parents() const noexcept {
    return (current_ ? 1 : 0) + (lookahead_ ? 1 : 0);
  }
  /// OrderedTree values held from level() (the last emitted tree).
  std::size_t held_emitted() const noexcept { return emitted_ ? 1 : 0; }

 private:
  bool advance();

  std::size_t level_;
  std::unique_ptr<LevelGenerator> source_;
  std::shared_ptr<const GeneratorOptions> options_;
  std::optional<OrderedTree> current_;
  std::optional<OrderedTree> lookahead_;
  std::optional<OrderedTree> emitted_;
  std::vector<int> pending_;  // child indices of current_, reversed
  int next_leftmost_ = 1;
  bool started_ = false;
  bool done_ = false;
};

/// The Gray code for all ordered trees with n vertices, produced on the fly.
class GrayCode {
 public:
  explicit GrayCode(std::size_t n, GeneratorOptions options = {});

  const OrderedTree* next();

  std::size_t n() const noexcept { return n_; }
  std::uint64_t emitted() const noexcept { return emitted_; }

  /// Highest number of OrderedTree values of each level (index level-1)
  /// held by the stack at once.
  const std::vector<std::size_t>& live_high_water() const noexcept {
    return high_water_;
  }
  std::size_t max_live_per_level() const;
  std::size_t max_live_total() const noexcept { return max_total_; }

  class iterator {
   public:
    using value_type = OrderedTree;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(GrayCode* code) : code_(code), current_(code->next()) {}
    const OrderedTree& operator*() const { return *current_; }
    const OrderedTree* operator->() const { return current_; }
    iterator& operator++() {
      current_ = code_->next();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.current_ == nullptr;
    }

   private:
    GrayCode* code_ = nullptr;
    const OrderedTree* current_ = nullptr;
  };

  /// Single pass: begin() starts consuming the stream.
  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  void record_live();

  std::size_t n_;
  std::unique_ptr<LevelGenerator> top_;
  std::uint64_t emitted_ = 0;
  std::vector<std::size_t> high_water_;
  std::vector<std::size_t> scratch_;
  std::size_t max_total_ = 0;
};

/// The Gray code as the first tree followed by one Delta per step.
class DeltaStream {
 public:
  explicit DeltaStream(std::size_t n, GeneratorOptions options = {});

  const OrderedTree& first() const { return *first_; }
  std::optional<Delta> next();

 private:
  GrayCode code_;
  std::optional<OrderedTree> first_;
  std::optional<OrderedTree> previous_;
};

std::vector<OrderedTree> gray_code(std::size_t n, GeneratorOptions options = {});
std::vector<Delta> delta_stream(std::size_t n, GeneratorOptions options = {});

inline constexpr std::size_t kFamilyTreeCap = 12;

struct FamilyNode {
  OrderedTree tree;
  std::size_t parent = 0;  // index into the previous level
  std::vector<std::size_t> children;
};

/// Every ordered tree with 1..n vertices, linked to its parent, with the
/// children of each node in Gray-code order. levels[k-1] lists S_k.
struct FamilyTree {
  std::size_t n = 0;
  std::vector<std::vector<FamilyNode>> levels;

  std::size_t node_count() const;
};

FamilyTree build_family_tree(std::size_t n, std::size_t cap = kFamilyTreeCap,
                             GeneratorOptions options = {});

/// Graphviz digraph; node ids are parenthesis encodings and edges appear in
/// left-to-right child order (ordering=out).
std::string export_dot(const FamilyTree& family);

}  // namespace ortree
