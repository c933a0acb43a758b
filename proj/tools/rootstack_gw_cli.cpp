// Command-line front end.  Several commands can be composed in one
// invocation ("table ... cache export --file warm.tsv"); they share one
// memo store, so later commands see everything earlier ones computed.
//
// Exit codes: 0 success, 1 a verification suite failed, 2 usage or file
// format errors, 3 broken internal invariants (cycles, depth bound,
// conflicting cache values).

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rootstack/cache_io.hpp"
#include "rootstack/errors.hpp"
#include "rootstack/records.hpp"
#include "rootstack/verify.hpp"

namespace {

using namespace rootstack;

constexpr int kHelpShown = -1;

const std::set<std::string>& command_names() {
  static const std::set<std::string> names = {"compute", "general", "table",
                                              "verify", "cache"};
  return names;
}

bool option_takes_value(const std::string& token) {
  if (token.rfind("--", 0) != 0) return false;
  if (token.find('=') != std::string::npos) return false;
  return token != "--json" && token != "--help";
}

// Splits argv into one segment per command so commands can be chained.
// Option values are never mistaken for command names because every value
// option consumes the following token.
std::vector<std::vector<std::string>> split_segments(
    const std::vector<std::string>& args) {
  std::vector<std::vector<std::string>> segments;
  std::vector<std::string> current;
  bool expect_value = false;
  for (const auto& token : args) {
    if (expect_value) {
      current.push_back(token);
      expect_value = false;
      continue;
    }
    if (command_names().count(token)) {
      if (!current.empty()) segments.push_back(std::move(current));
      current.clear();
      current.push_back(token);
      continue;
    }
    if (current.empty())
      throw UsageError("expected a command (compute, general, table, verify, "
                       "cache), got \"" +
                       token + "\"");
    current.push_back(token);
    if (option_takes_value(token)) expect_value = true;
  }
  if (expect_value)
    throw UsageError("option \"" + current.back() + "\" is missing its value");
  if (!current.empty()) segments.push_back(std::move(current));
  return segments;
}

int run_verify(MemoStore& store, const std::string& suite,
               std::vector<int> deltas, int q_max, int y_max, int k_max,
               int d_max, bool json) {
  const SuiteReport report =
      run_suite(store, suite, std::move(deltas), q_max, y_max, k_max, d_max);
  std::cout << (json ? report_to_json(report) : report_to_text(report));
  return report.passed() ? 0 : 1;
}

int run_segment(const std::vector<std::string>& segment, MemoStore& store) {
  CLI::App app{"Exact genus-0 orbifold Gromov-Witten invariants of the "
               "projective plane rooted to order 2 along a plane curve"};
  app.name("rootstack-gw");
  app.require_subcommand(1);

  int delta = 1, degree = 1, n2 = 0, n3 = 0, n4 = 0, max_n3 = 0;
  bool json = false;
  std::vector<int> n_general, deltas;
  int q_max = -1, y_max = -1, k_max = -1, d_max = -1;
  std::string format = "csv", suite, mode, file;

  auto* compute = app.add_subcommand(
      "compute", "One invariant I_d(T2^n2 T3^n3 T4^n4)");
  compute->add_option("--delta", delta, "degree of the rooting curve")
      ->required();
  compute->add_option("--degree", degree, "curve class degree d")->required();
  compute->add_option("--n2", n2, "plane point insertions")->required();
  compute->add_option("--n3", n3, "untwisted curve point insertions")
      ->required();
  compute->add_option("--n4", n4, "twisted curve point insertions")
      ->required();
  compute->add_flag("--json", json, "emit a JSON record");

  auto* general = app.add_subcommand(
      "general", "An invariant with unit/hyperplane insertions, degree >= 0");
  general->add_option("--delta", delta, "degree of the rooting curve")
      ->required();
  general->add_option("--degree", degree, "curve class degree d >= 0")
      ->required();
  general->add_option("--n", n_general, "insertion counts n0,n1,n2,n3,n4")
      ->required()
      ->delimiter(',')
      ->expected(5);
  general->add_flag("--json", json, "emit a JSON record");

  auto* table = app.add_subcommand(
      "table", "All admissible invariants of one degree with n3 <= --max-n3");
  table->add_option("--delta", delta, "degree of the rooting curve")
      ->required();
  table->add_option("--degree", degree, "curve class degree d")->required();
  table->add_option("--max-n3", max_n3, "bound on untwisted insertions")
      ->required();
  table->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify
      ->add_option("--suite", suite,
                   "closed-forms | bases | pinned | relations | wdvv | cross")
      ->required()
      ->check(CLI::IsMember({"closed-forms", "bases", "pinned", "relations",
                             "wdvv", "cross"}));
  verify->add_option("--delta", deltas, "comma-separated curve degrees")
      ->delimiter(',');
  verify->add_option("--q-max", q_max, "series truncation in Q");
  verify->add_option("--y-max", y_max, "series truncation in y");
  verify->add_option("--k-max", k_max, "closed-form family bound");
  verify->add_option("--d-max", d_max, "curve degree bound");
  verify->add_flag("--json", json, "emit a JSON report");

  auto* cache = app.add_subcommand(
      "cache", "Export the memo store, or seed it from a file");
  cache->add_option("mode", mode, "export or import")
      ->required()
      ->check(CLI::IsMember({"export", "import"}));
  cache->add_option("--file", file, "cache file path")->required();

  try {
    std::vector<std::string> reversed(segment.rbegin(), segment.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kHelpShown;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (compute->parsed()) {
    const ResultRecord record = compute_record(
        store, GeometryConfig(delta), InvariantKey(degree, n2, n3, n4));
    std::cout << (json ? to_json(record) : to_string(record.value) + "\n");
    return 0;
  }
  if (general->parsed()) {
    const ResultRecord record = general_record(
        store, GeometryConfig(delta),
        GeneralKey(degree, n_general[0], n_general[1], n_general[2],
                   n_general[3], n_general[4]));
    std::cout << (json ? to_json(record) : to_string(record.value) + "\n");
    return 0;
  }
  if (table->parsed()) {
    const auto rows =
        admissible_table(store, GeometryConfig(delta), degree, max_n3);
    std::cout << (format == "json" ? table_to_json(rows) : table_to_csv(rows));
    return 0;
  }
  if (verify->parsed())
    return run_verify(store, suite, deltas, q_max, y_max, k_max, d_max, json);
  if (cache->parsed()) {
    if (mode == "export") {
      std::ofstream out(file, std::ios::binary);
      if (!out) throw UsageError("cannot open \"" + file + "\" for writing");
      export_cache(store, out);
      if (!out) throw UsageError("failed writing \"" + file + "\"");
    } else {
      std::ifstream in(file, std::ios::binary);
      if (!in) throw UsageError("cannot open \"" + file + "\"");
      import_cache(store, in);
    }
    return 0;
  }
  throw UsageError("no command given");
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    if (args.empty()) throw UsageError(
        "usage: rootstack-gw {compute|general|table|verify|cache} [options] "
        "(run with --help for details)");
    MemoStore store;
    if (args[0] == "-h" || args[0] == "--help") {
      run_segment({"--help"}, store);
      return 0;
    }

    int exit_code = 0;
    for (const auto& segment : split_segments(args)) {
      const int code = run_segment(segment, store);
      if (code == kHelpShown) return 0;
      if (code >= 2) return code;
      exit_code = std::max(exit_code, code);
    }
    return exit_code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
