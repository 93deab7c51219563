#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ortree/ordering.hpp"
#include "ortree/tree.hpp"

// Brute-force ground truth. Nothing here depends on the ordering rules;
// the generator is only run and compared against what is enumerated.
namespace ortree {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kOracleCap = 14;
inline constexpr std::size_t kSetCompareCap = 12;

/// Every valid level sequence of length n, in lexicographic order.
LevelSet enumerate_all(std::size_t n, std::size_t cap = kOracleCap);

/// binom(2m, m) / (m + 1), exactly.
BigInt catalan(unsigned m);

struct Checks {
  bool gray = true;
  bool unique = true;
  bool complete = true;
  bool co1 = true;
  bool co2 = true;
  bool cases = true;

  /// Comma-separated subset of gray,unique,complete,co1,co2,cases, or "all".
  static Checks parse(std::string_view text);
  static Checks none() { return {false, false, false, false, false, false}; }
};

struct VerifyOptions {
  Checks checks;
  std::size_t cap = kOracleCap;
  /// Above this n the duplicate/missing comparison is skipped.
  std::size_t set_compare_cap = kSetCompareCap;
};

struct InvariantFailure {
  std::size_t level = 0;
  std::uint64_t window = 0;  // 1-based index of the window's first tree
  std::string which;         // "co1" or "co2"
};

struct VerificationReport {
  std::size_t n = 0;
  std::uint64_t total = 0;
  std::uint64_t expected = 0;
  std::vector<OrderedTree> duplicates;
  std::vector<OrderedTree> missing;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> adjacency_failures;
  std::vector<InvariantFailure> invariant_failures;
  CaseHistogram case_histogram;
  std::uint64_t forbidden_case_hits = 0;
  std::optional<std::string> generation_error;
  bool set_compared = false;
  std::uint64_t pairs_checked = 0;
  std::uint64_t windows_checked = 0;

  bool pass() const;
  /// "PASS n=<n> total=<t> expected=<e> ..." on one line.
  std::string summary() const;
  /// Multi-line details; does not repeat summary().
  void write(std::ostream& out) const;
};

/// Runs the checked generator for n and audits it. Failures are reported,
/// not thrown; only n == 0 and a cap overrun throw.
VerificationReport verify(std::size_t n, const VerifyOptions& options = {});

}  // namespace ortree
