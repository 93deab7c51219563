#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ortree/tree.hpp"

namespace ortree {

/// Which branch of the step rule fixed a tree's child order.
///
/// Naming follows the case table: the digit is the rpl split
/// (1: both 1, 2: current 1, 3: next 1, 4: both > 1), the letter the
/// pony-tail/copying or leftmost-child split, and the trailing digit whether
/// the leftmost child is child(T,1). kLast marks the final tree of a level.
enum class CaseId : std::uint8_t {
  k1a,
  k1b,
  k2a1,
  k2a2,
  k2b1,
  k2b2,
  k2c1,
  k2c2,
  k3a1,
  k3a2,
  k3b1,
  k3b2,
  k3c1,
  k3c1Other,
  k3c2,
  k4a1,
  k4a2,
  k4b1Lt,
  k4b1EqRplT,
  k4b1EqOther,
  k4b2,
  k4b3,
  kLast,
};

inline constexpr std::size_t kCaseCount = static_cast<std::size_t>(CaseId::kLast) + 1;

std::string_view to_string(CaseId id);
std::optional<CaseId> case_from_string(std::string_view label);

/// 3a1, 3c1 without mutual copying, and 4b3 never occur in a correct run.
constexpr bool is_forbidden(CaseId id) {
  return id == CaseId::k3a1 || id == CaseId::k3c1Other || id == CaseId::k4b3;
}

inline constexpr std::array<CaseId, kCaseCount> all_cases() {
  std::array<CaseId, kCaseCount> out{};
  for (std::size_t i = 0; i < kCaseCount; ++i) out[i] = static_cast<CaseId>(i);
  return out;
}

/// Hit counts per CaseId.
class CaseHistogram {
 public:
  void add(CaseId id, std::uint64_t count = 1) {
    counts_[static_cast<std::size_t>(id)] += count;
  }
  std::uint64_t operator[](CaseId id) const {
    return counts_[static_cast<std::size_t>(id)];
  }
  std::uint64_t forbidden_hits() const;
  std::uint64_t total() const;
  void merge(const CaseHistogram& other);

  /// One "label count" line per CaseId, in enum order.
  void write(std::ostream& out) const;

 private:
  std::array<std::uint64_t, kCaseCount> counts_{};
};

class OrderingError : public std::logic_error {
 public:
  enum class Kind { CaseExhaustion, ForbiddenCase, AdjacencyViolation };
  OrderingError(Kind kind, const std::string& what)
      : std::logic_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Step decision in child-index form: `order` lists j for child(T_i, j)
/// left to right, and the next tree's leftmost child is
/// child(T_{i+1}, next_leftmost). next_leftmost is 0 for kLast.
struct StepPlan {
  CaseId id = CaseId::kLast;
  std::vector<int> order;
  int next_leftmost = 0;
};

/// Step decision as trees.
struct StepDecision {
  CaseId id = CaseId::kLast;
  std::vector<OrderedTree> children_of_current;
  std::optional<OrderedTree> leftmost_of_next;
};

/// Picks the branch for step i without rejecting forbidden labels. Throws
/// OrderingError(CaseExhaustion) when no branch applies.
/// `leftmost_index` is j such that the current leftmost child is child(current, j).
CaseId classify_case(const OrderedTree& current, const OrderedTree& next,
                     int leftmost_index);

/// As classify_case, taking the leftmost child as a tree, and additionally
/// throwing OrderingError(ForbiddenCase) for forbidden labels.
CaseId classify(const OrderedTree& current, const OrderedTree& next,
                const OrderedTree& leftmost);

struct StepOptions {
  /// Verify boundary adjacency with the brute-force relation.
  bool checked = true;
  /// When set, every classified label is counted here, forbidden ones
  /// included, before any error is raised.
  CaseHistogram* histogram = nullptr;
};

StepPlan plan_step(const OrderedTree& current, const OrderedTree& next,
                   int leftmost_index, const StepOptions& options = {});

/// Child order for the last tree of a level: the leftmost child, then the
/// rest by decreasing rpl.
StepPlan plan_last(const OrderedTree& last, int leftmost_index,
                   CaseHistogram* histogram = nullptr);

StepDecision step(const OrderedTree& current, const OrderedTree& next,
                  const OrderedTree& leftmost, const StepOptions& options = {});

std::vector<OrderedTree> finalize_last(const OrderedTree& last,
                                       const OrderedTree& leftmost);

/// Loop invariant on three consecutive trees of one level:
///  (rpl(a) = rpl(c) = 1 and rpl(b) > 1) implies b has the pony-tail and c
///  is copying b; and rpl(a) = rpl(c) >= 2 implies rpl(a) > rpl(b).
bool check_co1(const OrderedTree& a, const OrderedTree& b, const OrderedTree& c);

/// The same invariant applied to a window of the level being built.
bool check_co2(std::span<const OrderedTree, 3> window);

/// Index j with tree == child(parent, j). Throws std::invalid_argument if
/// `tree` is not a child of `parent`.
int child_index(const OrderedTree& parent, const OrderedTree& tree);

}  // namespace ortree
