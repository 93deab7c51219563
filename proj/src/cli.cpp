#include "ortree/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>

#include "ortree/generator.hpp"
#include "ortree/oracle.hpp"

namespace ortree::cli {

namespace {

struct Settings {
  std::size_t n = 0;
  std::string format = "levels";
  std::optional<std::uint64_t> limit;
  std::string checks = "all";
  bool allow_large = false;
  bool unchecked = false;
  std::string output;
};

int gen(const Settings& s, std::ostream& out) {
  GeneratorOptions options;
  options.checked = !s.unchecked;
  const std::uint64_t limit = s.limit.value_or(UINT64_MAX);
  if (limit == 0) return kExitOk;

  if (s.format == "delta") {
    DeltaStream stream(s.n, std::move(options));
    out << encode_levels(stream.first()) << std::endl;
    for (std::uint64_t written = 1; written < limit; ++written) {
      const auto d = stream.next();
      if (!d) break;
      out << format_delta(*d) << std::endl;
    }
    return kExitOk;
  }

  const bool parens = s.format == "parens";
  GrayCode code(s.n, std::move(options));
  std::uint64_t written = 0;
  for (const OrderedTree& tree : code) {
    out << (parens ? encode_parens(tree) : encode_levels(tree)) << std::endl;
    if (++written >= limit) break;
  }
  return kExitOk;
}

int verify_cmd(const Settings& s, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.checks = Checks::parse(s.checks);
  if (s.allow_large && s.n > options.cap) {
    err << "warning: n=" << s.n << " is above the oracle cap of " << options.cap
        << "; memory and time grow with the Catalan numbers\n";
    options.cap = s.n;
  }
  const VerificationReport report = verify(s.n, options);
  out << report.summary() << '\n';
  report.write(out);
  out.flush();
  return report.pass() ? kExitOk : kExitVerifyFailed;
}

int count_cmd(const Settings& s, std::ostream& out) {
  out << catalan(static_cast<unsigned>(s.n - 1)) << '\n';
  return kExitOk;
}

int dot_cmd(const Settings& s, std::ostream& out, std::ostream& err) {
  std::size_t cap = kFamilyTreeCap;
  if (s.allow_large && s.n > cap) {
    err << "warning: n=" << s.n << " is above the family-tree cap of " << cap << '\n';
    cap = s.n;
  }
  GeneratorOptions options;
  options.checked = !s.unchecked;
  out << export_dot(build_family_tree(s.n, cap, std::move(options)));
  return kExitOk;
}

int bench_cmd(const Settings& s, std::ostream& out) {
  GeneratorOptions options;
  options.checked = !s.unchecked;
  const std::uint64_t limit = s.limit.value_or(UINT64_MAX);

  work::reset_vertex_writes();
  const auto start = std::chrono::steady_clock::now();
  GrayCode code(s.n, std::move(options));
  std::uint64_t trees = 0;
  while (trees < limit && code.next() != nullptr) ++trees;
  const auto stop = std::chrono::steady_clock::now();
  const std::uint64_t writes = work::vertex_writes();

  const double seconds = std::chrono::duration<double>(stop - start).count();
  const double per_tree = trees ? static_cast<double>(writes) / trees : 0.0;
  const double n2 = static_cast<double>(s.n) * static_cast<double>(s.n);
  out << "n: " << s.n << '\n'
      << "checked: " << (s.unchecked ? "no" : "yes") << '\n'
      << "trees: " << trees << '\n'
      << std::fixed << std::setprecision(6) << "seconds: " << seconds << '\n'
      << std::setprecision(1)
      << "trees_per_second: " << (seconds > 0 ? trees / seconds : 0.0) << '\n'
      << "vertex_writes: " << writes << '\n'
      << std::setprecision(3) << "vertex_writes_per_tree: " << per_tree << '\n'
      << "vertex_writes_per_tree_over_n2: " << per_tree / n2 << '\n'
      << "max_live_trees_per_level: " << code.max_live_per_level() << '\n'
      << "max_live_trees_total: " << code.max_live_total() << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gray code for ordered trees: each tree differs from the previous "
               "one by removing a leaf and appending a leaf."};
  app.name("ortree");
  app.require_subcommand(1);

  Settings s;
  const auto add_n = [&](CLI::App* cmd) {
    cmd->add_option("--n,-n", s.n, "number of vertices")
        ->required()
        ->check(CLI::PositiveNumber);
  };
  const auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output,-o", s.output, "write to this file instead of stdout");
  };

  auto* gen_cmd = app.add_subcommand("gen", "stream the Gray code");
  add_n(gen_cmd);
  gen_cmd->add_option("--format", s.format, "levels | parens | delta")
      ->check(CLI::IsMember({"levels", "parens", "delta"}));
  gen_cmd->add_option("--limit", s.limit, "stop after this many records")
      ->check(CLI::NonNegativeNumber);
  gen_cmd->add_flag("--unchecked", s.unchecked, "skip the defensive adjacency checks");
  add_output(gen_cmd);

  auto* verify_sub = app.add_subcommand("verify", "audit the Gray code against brute force");
  add_n(verify_sub);
  verify_sub->add_option("--checks", s.checks,
                         "comma-separated subset of gray,unique,complete,co1,co2,cases");
  verify_sub->add_flag("--allow-large", s.allow_large, "lift the n <= 14 cap");
  add_output(verify_sub);

  auto* count_sub = app.add_subcommand("count", "print the number of trees with n vertices");
  add_n(count_sub);
  add_output(count_sub);

  auto* dot_sub = app.add_subcommand("dot", "write the ordered family tree as Graphviz DOT");
  add_n(dot_sub);
  dot_sub->add_flag("--allow-large", s.allow_large, "lift the n <= 12 cap");
  dot_sub->add_flag("--unchecked", s.unchecked, "skip the defensive adjacency checks");
  add_output(dot_sub);

  auto* bench_sub = app.add_subcommand("bench", "time generation and count vertex writes");
  add_n(bench_sub);
  bench_sub->add_option("--limit", s.limit, "stop after this many trees")
      ->check(CLI::NonNegativeNumber);
  bench_sub->add_flag("--unchecked", s.unchecked, "skip the defensive adjacency checks");
  add_output(bench_sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!s.output.empty()) {
    file.open(s.output);
    if (!file) {
      err << "error: cannot open " << s.output << " for writing\n";
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    if (*gen_cmd) return gen(s, *sink);
    if (*verify_sub) return verify_cmd(s, *sink, err);
    if (*count_sub) return count_cmd(s, *sink);
    if (*dot_sub) return dot_cmd(s, *sink, err);
    if (*bench_sub) return bench_cmd(s, *sink);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (use --allow-large to override)\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}

}  // namespace ortree::cli
