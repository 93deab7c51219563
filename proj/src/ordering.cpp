#include "ortree/ordering.hpp"

#include <algorithm>
#include <numeric>

#include "ortree/relations.hpp"

namespace ortree {

namespace {

constexpr std::array<std::string_view, kCaseCount> kLabels = {
    "1a",  "1b",  "2a1",       "2a2", "2b1",    "2b2",         "2c1",
    "2c2", "3a1", "3a2",       "3b1", "3b2",    "3c1",         "3c1_other",
    "3c2", "4a1", "4a2",       "4b1_lt", "4b1_eq_rplT", "4b1_eq_other", "4b2",
    "4b3", "LAST",
};

enum class Middle { Decreasing, Increasing };

// What a case prescribes: the rightmost child of the current tree, the
// leftmost child of the next tree (both as child indices), and how the
// remaining children are arranged between them.
struct Rule {
  CaseId id;
  int rightmost = 0;
  int next_leftmost = 0;
  Middle middle = Middle::Decreasing;
};

Rule decide(const OrderedTree& current, const OrderedTree& next, int leftmost) {
  const int a = current.rpl();
  const int b = next.rpl();
  const bool first_is_c1 = leftmost == 1;

  if (a == 1 && b == 1) {
    return first_is_c1 ? Rule{CaseId::k1a, 2, 2} : Rule{CaseId::k1b, 1, 1};
  }

  if (a == 1) {
    if (!has_pony_tail(next))
      return first_is_c1 ? Rule{CaseId::k2a1, 2, 1} : Rule{CaseId::k2a2, 1, 1};
    if (is_copying(current, next))
      return first_is_c1 ? Rule{CaseId::k2b1, 2, 2} : Rule{CaseId::k2b2, 1, 1};
    if (is_copying(next, current))
      return first_is_c1 ? Rule{CaseId::k2c1, 2, 1} : Rule{CaseId::k2c2, 1, 1};
    throw OrderingError(OrderingError::Kind::CaseExhaustion,
                        "case exhaustion in case 2 at " + encode_levels(current) +
                            " -> " + encode_levels(next));
  }

  if (b == 1) {
    if (!has_pony_tail(current))
      return first_is_c1 ? Rule{CaseId::k3a1} : Rule{CaseId::k3a2, 1, 1};
    if (is_copying(next, current))
      return first_is_c1 ? Rule{CaseId::k3b1, 2, 2} : Rule{CaseId::k3b2, 1, 1};
    if (is_copying(current, next)) {
      if (!first_is_c1) return Rule{CaseId::k3c2, 1, 1};
      // Mutual copying is already taken by 3b1 above; kept for the table.
      return is_copying(next, current) ? Rule{CaseId::k3c1, 2, 2}
                                       : Rule{CaseId::k3c1Other};
    }
    throw OrderingError(OrderingError::Kind::CaseExhaustion,
                        "case exhaustion in case 3 at " + encode_levels(current) +
                            " -> " + encode_levels(next));
  }

  if (first_is_c1) {
    if (a <= b) return {CaseId::k4a1, a, a, Middle::Increasing};
    return {CaseId::k4a2, b, b, Middle::Increasing};
  }
  if (a < b) return {CaseId::k4b1Lt, 1, a};
  if (a == b) {
    if (leftmost == a) return {CaseId::k4b1EqRplT, a + 1, a + 1};
    return {CaseId::k4b1EqOther, a, a};
  }
  if (leftmost == b) return {CaseId::k4b3};
  return {CaseId::k4b2, b, b};
}

void check_step_inputs(const OrderedTree& current, const OrderedTree& next,
                       int leftmost) {
  if (current.size() != next.size())
    throw std::invalid_argument("step: consecutive trees differ in size");
  if (current == next) throw std::invalid_argument("step: consecutive trees are equal");
  if (current.rpl() < 1 || next.rpl() < 1)
    throw std::invalid_argument("step: trees must have at least two vertices");
  if (leftmost < 1 || leftmost > current.rpl() + 1)
    throw std::invalid_argument("step: leftmost child index " +
                                std::to_string(leftmost) + " out of range");
}

std::vector<OrderedTree> materialize(const OrderedTree& tree,
                                     const std::vector<int>& order) {
  std::vector<OrderedTree> out;
  out.reserve(order.size());
  for (const int j : order) out.push_back(child(tree, j));
  return out;
}

}  // namespace

std::string_view to_string(CaseId id) { return kLabels[static_cast<std::size_t>(id)]; }

std::optional<CaseId> case_from_string(std::string_view label) {
  for (std::size_t i = 0; i < kCaseCount; ++i)
    if (kLabels[i] == label) return static_cast<CaseId>(i);
  return std::nullopt;
}

std::uint64_t CaseHistogram::forbidden_hits() const {
  std::uint64_t hits = 0;
  for (const CaseId id : all_cases())
    if (is_forbidden(id)) hits += (*this)[id];
  return hits;
}

std::uint64_t CaseHistogram::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

void CaseHistogram::merge(const CaseHistogram& other) {
  for (std::size_t i = 0; i < kCaseCount; ++i) counts_[i] += other.counts_[i];
}

void CaseHistogram::write(std::ostream& out) const {
  for (const CaseId id : all_cases()) out << to_string(id) << ' ' << (*this)[id] << '\n';
}

int child_index(const OrderedTree& parent_tree, const OrderedTree& tree) {
  if (tree.size() != parent_tree.size() + 1 ||
      !std::equal(parent_tree.levels().begin(), parent_tree.levels().end(),
                  tree.levels().begin()))
    throw std::invalid_argument(encode_levels(tree) + " is not a child of " +
                                encode_levels(parent_tree));
  return tree.rpl();
}

CaseId classify_case(const OrderedTree& current, const OrderedTree& next,
                     int leftmost_index) {
  check_step_inputs(current, next, leftmost_index);
  return decide(current, next, leftmost_index).id;
}

CaseId classify(const OrderedTree& current, const OrderedTree& next,
                const OrderedTree& leftmost) {
  const CaseId id = classify_case(current, next, child_index(current, leftmost));
  if (is_forbidden(id))
    throw OrderingError(OrderingError::Kind::ForbiddenCase,
                        "forbidden case " + std::string(to_string(id)) + " selected");
  return id;
}

StepPlan plan_step(const OrderedTree& current, const OrderedTree& next,
                   int leftmost_index, const StepOptions& options) {
  check_step_inputs(current, next, leftmost_index);
  const Rule rule = decide(current, next, leftmost_index);
  if (options.histogram) options.histogram->add(rule.id);
  if (is_forbidden(rule.id))
    throw OrderingError(OrderingError::Kind::ForbiddenCase,
                        "forbidden case " + std::string(to_string(rule.id)) + " at " +
                            encode_levels(current) + " -> " + encode_levels(next));

  const int count = current.rpl() + 1;
  if (rule.rightmost == leftmost_index)
    throw OrderingError(OrderingError::Kind::CaseExhaustion,
                        "case " + std::string(to_string(rule.id)) +
                            " puts the leftmost child on the right");

  StepPlan plan{rule.id, {}, rule.next_leftmost};
  plan.order.reserve(static_cast<std::size_t>(count));
  plan.order.push_back(leftmost_index);
  // Child j has rpl j, so index order is rpl order.
  if (rule.middle == Middle::Increasing) {
    for (int j = 1; j <= count; ++j)
      if (j != leftmost_index && j != rule.rightmost) plan.order.push_back(j);
  } else {
    for (int j = count; j >= 1; --j)
      if (j != leftmost_index && j != rule.rightmost) plan.order.push_back(j);
  }
  plan.order.push_back(rule.rightmost);

  if (options.checked &&
      !is_adjacent(child(current, rule.rightmost), child(next, rule.next_leftmost)))
    throw OrderingError(OrderingError::Kind::AdjacencyViolation,
                        "case " + std::string(to_string(rule.id)) +
                            ": boundary pair not adjacent at " +
                            encode_levels(current) + " -> " + encode_levels(next));
  return plan;
}

StepPlan plan_last(const OrderedTree& last, int leftmost_index,
                   CaseHistogram* histogram) {
  const int count = last.rpl() + 1;
  if (leftmost_index < 1 || leftmost_index > count)
    throw std::invalid_argument("leftmost child index " +
                                std::to_string(leftmost_index) + " out of range");
  if (histogram) histogram->add(CaseId::kLast);
  StepPlan plan{CaseId::kLast, {leftmost_index}, 0};
  for (int j = count; j >= 1; --j)
    if (j != leftmost_index) plan.order.push_back(j);
  return plan;
}

StepDecision step(const OrderedTree& current, const OrderedTree& next,
                  const OrderedTree& leftmost, const StepOptions& options) {
  const StepPlan plan =
      plan_step(current, next, child_index(current, leftmost), options);
  return {plan.id, materialize(current, plan.order), child(next, plan.next_leftmost)};
}

std::vector<OrderedTree> finalize_last(const OrderedTree& last,
                                       const OrderedTree& leftmost) {
  return materialize(last, plan_last(last, child_index(last, leftmost)).order);
}

bool check_co1(const OrderedTree& a, const OrderedTree& b, const OrderedTree& c) {
  if (a.size() != b.size() || b.size() != c.size())
    throw std::invalid_argument("check_co1: window trees differ in size");
  const int ra = a.rpl(), rb = b.rpl(), rc = c.rpl();
  if (ra == 1 && rc == 1 && rb > 1) {
    if (!has_pony_tail(b) || !is_copying(c, b)) return false;
  }
  if (ra == rc && ra >= 2 && !(ra > rb)) return false;
  return true;
}

bool check_co2(std::span<const OrderedTree, 3> window) {
  return check_co1(window[0], window[1], window[2]);
}

}  // namespace ortree
