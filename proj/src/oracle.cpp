#include "ortree/oracle.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>

#include "ortree/generator.hpp"
#include "ortree/relations.hpp"

namespace ortree {

namespace {

void extend(std::vector<Level>& prefix, std::size_t n, std::vector<OrderedTree>& out) {
  if (prefix.size() == n) {
    out.push_back(OrderedTree::from_valid(prefix));
    return;
  }
  const int top = prefix.back() + 1;
  for (int level = 2; level <= top; ++level) {
    prefix.push_back(static_cast<Level>(level));
    extend(prefix, n, out);
    prefix.pop_back();
  }
}

}  // namespace

LevelSet enumerate_all(std::size_t n, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  if (n > cap) throw CapExceeded(n, cap);
  LevelSet set{n, {}};
  std::vector<Level> prefix{1};
  prefix.reserve(n);
  extend(prefix, n, set.trees);
  return set;
}

BigInt catalan(unsigned m) {
  // binom(2m, m) built as binom(m+i, i) for i = 1..m; each step is exact.
  BigInt binom = 1;
  for (unsigned i = 1; i <= m; ++i) binom = binom * (m + i) / i;
  return binom / (m + 1);
}

Checks Checks::parse(std::string_view text) {
  Checks checks = none();
  if (text == "all") return Checks{};
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto name = text.substr(0, comma);
    if (name == "gray")
      checks.gray = true;
    else if (name == "unique")
      checks.unique = true;
    else if (name == "complete")
      checks.complete = true;
    else if (name == "co1")
      checks.co1 = true;
    else if (name == "co2")
      checks.co2 = true;
    else if (name == "cases")
      checks.cases = true;
    else
      throw std::invalid_argument("unknown check '" + std::string(name) + "'");
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return checks;
}

bool VerificationReport::pass() const {
  return !generation_error && duplicates.empty() && missing.empty() &&
         adjacency_failures.empty() && invariant_failures.empty() &&
         total == expected && forbidden_case_hits == 0;
}

std::string VerificationReport::summary() const {
  std::ostringstream out;
  out << (pass() ? "PASS" : "FAIL") << " n=" << n << " total=" << total
      << " expected=" << expected << " duplicates=" << duplicates.size()
      << " missing=" << missing.size()
      << " adjacency_failures=" << adjacency_failures.size()
      << " invariant_failures=" << invariant_failures.size()
      << " forbidden_case_hits=" << forbidden_case_hits
      << " set_compared=" << (set_compared ? "yes" : "no");
  if (generation_error) out << " error=\"" << *generation_error << '"';
  return out.str();
}

void VerificationReport::write(std::ostream& out) const {
  out << "n: " << n << '\n'
      << "trees generated: " << total << '\n'
      << "expected (Catalan): " << expected << '\n'
      << "adjacent pairs checked: " << pairs_checked << '\n'
      << "invariant windows checked: " << windows_checked << '\n';
  if (!set_compared) out << "set comparison: skipped\n";
  constexpr std::size_t kShow = 10;
  const auto list = [&](const char* name, const std::vector<OrderedTree>& trees) {
    out << name << ": " << trees.size() << '\n';
    for (std::size_t i = 0; i < std::min(trees.size(), kShow); ++i)
      out << "  " << encode_levels(trees[i]) << '\n';
  };
  list("duplicates", duplicates);
  list("missing", missing);
  out << "adjacency failures: " << adjacency_failures.size() << '\n';
  for (std::size_t i = 0; i < std::min(adjacency_failures.size(), kShow); ++i)
    out << "  " << adjacency_failures[i].first << " -> " << adjacency_failures[i].second
        << '\n';
  out << "invariant failures: " << invariant_failures.size() << '\n';
  for (std::size_t i = 0; i < std::min(invariant_failures.size(), kShow); ++i)
    out << "  level " << invariant_failures[i].level << " window "
        << invariant_failures[i].window << " " << invariant_failures[i].which << '\n';
  out << "forbidden case hits: " << forbidden_case_hits << '\n';
  if (generation_error) out << "generation error: " << *generation_error << '\n';
  out << "case histogram:\n";
  std::ostringstream hist;
  case_histogram.write(hist);
  std::istringstream lines(hist.str());
  for (std::string line; std::getline(lines, line);) out << "  " << line << '\n';
}

VerificationReport verify(std::size_t n, const VerifyOptions& options) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  if (n > options.cap) throw CapExceeded(n, options.cap);
  const Checks& checks = options.checks;

  VerificationReport report;
  report.n = n;
  report.expected = catalan(static_cast<unsigned>(n - 1)).convert_to<std::uint64_t>();
  report.set_compared = (checks.unique || checks.complete) && n <= options.set_compare_cap;

  std::vector<std::deque<OrderedTree>> windows(n);
  std::vector<std::uint64_t> emitted(n, 0);
  std::vector<OrderedTree> collected;
  std::optional<OrderedTree> previous;

  GeneratorOptions gen;
  gen.checked = true;
  gen.histogram = &report.case_histogram;
  gen.on_emit = [&](std::size_t level, const OrderedTree& tree) {
    const std::size_t k = level - 1;
    ++emitted[k];
    // co1 constrains levels that feed a step; co2 the levels steps build.
    const bool want_co1 = checks.co1 && level < n;
    const bool want_co2 = checks.co2 && level >= 2;
    if (!want_co1 && !want_co2) return;
    auto& window = windows[k];
    window.push_back(tree);
    if (window.size() > 3) window.pop_front();
    if (window.size() < 3) return;
    ++report.windows_checked;
    const std::array<OrderedTree, 3> triple{window[0], window[1], window[2]};
    const std::uint64_t start = emitted[k] - 2;
    if (want_co1 && !check_co1(triple[0], triple[1], triple[2]))
      report.invariant_failures.push_back({level, start, "co1"});
    if (want_co2 && !check_co2(triple))
      report.invariant_failures.push_back({level, start, "co2"});
  };

  try {
    GrayCode code(n, std::move(gen));
    while (const OrderedTree* tree = code.next()) {
      ++report.total;
      if (checks.gray && previous) {
        ++report.pairs_checked;
        if (!is_adjacent(*previous, *tree))
          report.adjacency_failures.emplace_back(report.total - 1, report.total);
      }
      if (checks.gray) previous = *tree;
      if (report.set_compared) collected.push_back(*tree);
    }
  } catch (const std::exception& e) {
    report.generation_error = e.what();
  }

  if (checks.cases) report.forbidden_case_hits = report.case_histogram.forbidden_hits();

  if (report.set_compared) {
    std::sort(collected.begin(), collected.end());
    if (checks.unique) {
      for (std::size_t i = 1; i < collected.size(); ++i)
        if (collected[i] == collected[i - 1] &&
            (report.duplicates.empty() || report.duplicates.back() != collected[i]))
          report.duplicates.push_back(collected[i]);
    }
    if (checks.complete) {
      const LevelSet all = enumerate_all(n, options.cap);
      std::set_difference(all.trees.begin(), all.trees.end(), collected.begin(),
                          collected.end(), std::back_inserter(report.missing));
    }
  }
  return report;
}

}  // namespace ortree
