//
// siteswap_cli.cpp
//
// Command-line surface over the siteswap library: validate, count,
// enumerate, decompose, construct and table subcommands with text, JSON and
// CSV output.
//
// Exit codes: 0 success, 1 domain-invalid input, 2 usage or parse error,
// 3 node budget exceeded.
//

#include "siteswap/closed_forms.hpp"
#include "siteswap/enumeration.hpp"
#include "siteswap/exact_math.hpp"
#include "siteswap/notation.hpp"
#include "siteswap/pattern.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;
using siteswap::CountMethod;
using siteswap::CountQuery;
using siteswap::EnumerationSpec;
using siteswap::ExactInt;
using siteswap::JugglingPattern;
using siteswap::ThrowSequence;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::int64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(values[i]);
  }
  return out;
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

struct ValidateArgs {
  std::string pattern;
  std::string format = "text";
};

int cmd_validate(const ValidateArgs& args) {
  const ThrowSequence seq = siteswap::parse(args.pattern);
  const auto report = siteswap::validate(seq);

  if (args.format == "json") {
    ordered_json doc;
    doc["pattern"] = args.pattern;
    doc["valid"] = report.valid;
    doc["balls"] = report.valid ? ordered_json(std::to_string(report.balls))
                                : ordered_json(nullptr);
    auto violations = ordered_json::array();
    for (const auto& c : report.collisions)
      violations.push_back({{"type", "landing-collision"},
                            {"beats", {c.first_beat, c.second_beat}},
                            {"slot", c.slot}});
    if (report.sum_remainder != 0)
      violations.push_back(
          {{"type", "sum-remainder"},
           {"remainder", std::to_string(report.sum_remainder)}});
    doc["violations"] = std::move(violations);
    emit(doc);
  } else {
    std::cout << "pattern: " << args.pattern << "\n";
    std::cout << "valid: " << (report.valid ? "true" : "false") << "\n";
    if (report.valid) {
      std::cout << "balls: " << report.balls << "\n";
    } else {
      for (const auto& message : report.violation_messages())
        std::cout << "violation: " << message << "\n";
    }
  }
  return report.valid ? kExitOk : kExitDomain;
}

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

struct CountArgs {
  std::size_t period = 1;
  std::optional<std::int64_t> balls;
  bool all_balls = false;
  std::optional<std::int64_t> ceiling;
  std::string method = "auto";
  std::uint64_t budget = siteswap::kDefaultNodeBudget;
  std::string format = "text";
};

CountMethod parse_method(const std::string& name) {
  if (name == "auto") return CountMethod::automatic;
  if (name == "closed" || name == "closed-form") return CountMethod::closed_form;
  if (name == "oracle") return CountMethod::oracle;
  if (name == "both") return CountMethod::both;
  throw UsageError("unknown method '" + name + "'");
}

int cmd_count(const CountArgs& args) {
  if (args.balls.has_value() == args.all_balls)
    throw UsageError("exactly one of --balls and --all-balls is required");
  if (args.all_balls && !args.ceiling)
    throw UsageError("--all-balls requires --ceiling");

  CountQuery query;
  query.period = args.period;
  query.balls = args.balls;
  query.ceiling = args.ceiling;
  query.method = parse_method(args.method);
  query.node_budget = args.budget;

  const auto result = siteswap::count(query);

  if (args.format == "json") {
    ordered_json doc;
    doc["query"] = {
        {"period", args.period},
        {"balls", args.all_balls ? ordered_json("all")
                                 : ordered_json(std::to_string(*args.balls))},
        {"ceiling", args.ceiling ? ordered_json(std::to_string(*args.ceiling))
                                 : ordered_json(nullptr)},
        {"method", std::string(to_string(parse_method(args.method)))},
    };
    doc["count"] = result.count.str();
    doc["branch"] = std::string(to_string(result.branch));
    doc["cross_checked"] = result.cross_checked;
    emit(doc);
  } else {
    std::cout << "count: " << result.count.str() << "\n";
    std::cout << "branch: " << to_string(result.branch) << "\n";
    std::cout << "cross-checked: " << (result.cross_checked ? "true" : "false")
              << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

struct EnumerateArgs {
  std::size_t period = 1;
  std::optional<std::int64_t> balls;
  bool all_balls = false;
  std::optional<std::int64_t> ceiling;
  std::uint64_t limit = 0;  // 0: unlimited
  std::uint64_t budget = siteswap::kDefaultNodeBudget;
  std::string format = "text";
};

int cmd_enumerate(const EnumerateArgs& args) {
  if (args.balls.has_value() == args.all_balls)
    throw UsageError("exactly one of --balls and --all-balls is required");
  if (args.all_balls && !args.ceiling)
    throw UsageError("--all-balls requires --ceiling");

  EnumerationSpec spec;
  spec.period = args.period;
  spec.balls = args.balls;
  spec.ceiling = args.ceiling;
  spec.node_budget = args.budget;

  const bool limited = args.limit > 0;
  std::uint64_t total = 0;
  bool truncated = false;
  const auto want = [&](std::uint64_t seen) {
    return !limited || seen <= args.limit;
  };

  if (args.format == "csv") {
    for (std::size_t i = 0; i < args.period; ++i)
      std::cout << (i > 0 ? "," : "") << "h" << i;
    std::cout << "\n";
    siteswap::enumerate_patterns(spec, [&](const JugglingPattern& p) {
      ++total;
      if (want(total))
        std::cout << join(p.heights()) << "\n";
      else
        truncated = true;
      return true;
    });
  } else if (args.format == "json") {
    ordered_json patterns = ordered_json::array();
    siteswap::enumerate_patterns(spec, [&](const JugglingPattern& p) {
      ++total;
      if (want(total))
        patterns.push_back(siteswap::render_auto(p.sequence()));
      else
        truncated = true;
      return true;
    });
    ordered_json doc;
    doc["patterns"] = std::move(patterns);
    doc["truncated"] = truncated;
    doc["total"] = std::to_string(total);
    emit(doc);
  } else {
    siteswap::enumerate_patterns(spec, [&](const JugglingPattern& p) {
      ++total;
      if (want(total))
        std::cout << siteswap::render_auto(p.sequence()) << "\n";
      else
        truncated = true;
      return true;
    });
    if (truncated)
      std::cout << "# truncated: showing " << args.limit << " of " << total
                << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// decompose / construct
// ---------------------------------------------------------------------------

struct DecomposeArgs {
  std::string pattern;
  std::string format = "text";
};

int cmd_decompose(const DecomposeArgs& args) {
  const auto pattern = JugglingPattern::checked(siteswap::parse(args.pattern));
  const auto d = siteswap::decompose(pattern);

  if (args.format == "json") {
    ordered_json doc;
    doc["pattern"] = args.pattern;
    doc["perm"] = d.perm;
    auto b_vec = ordered_json::array();
    for (const auto b : d.b_vec) b_vec.push_back(std::to_string(b));
    doc["b_vec"] = std::move(b_vec);
    doc["descents"] = d.descents;
    emit(doc);
  } else {
    std::cout << "pattern: " << args.pattern << "\n";
    std::cout << "perm: " << join(d.perm) << "\n";
    std::cout << "b_vec: " << join(d.b_vec) << "\n";
    std::cout << "descents: " << d.descents << "\n";
  }
  return kExitOk;
}

struct ConstructArgs {
  std::string perm;
  std::string bvec;
  std::string format = "text";
};

int cmd_construct(const ConstructArgs& args) {
  const auto perm = siteswap::parse(args.perm).heights;
  const auto b_vec = siteswap::parse(args.bvec).heights;
  const auto pattern = siteswap::construct(perm, b_vec);
  const std::string rendered = siteswap::render_auto(pattern.sequence());

  if (args.format == "json") {
    ordered_json doc;
    doc["pattern"] = rendered;
    auto heights = ordered_json::array();
    for (const auto h : pattern.heights()) heights.push_back(std::to_string(h));
    doc["heights"] = std::move(heights);
    doc["balls"] = std::to_string(pattern.balls());
    emit(doc);
  } else {
    std::cout << "pattern: " << rendered << "\n";
    std::cout << "balls: " << pattern.balls() << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

struct TableArgs {
  std::string kind;
  std::size_t max_n = 1;
  std::string ceiling_form = "an-1";
  std::int64_t max_b = 6;
  std::int64_t max_a = 3;
  std::uint64_t budget = siteswap::kDefaultNodeBudget;
  std::string format = "text";
};

void table_eulerian(const TableArgs& args) {
  const ExactInt cells =
      ExactInt(args.max_n) * (ExactInt(args.max_n) + 1) / 2;
  if (cells > args.budget)
    throw siteswap::BudgetError("eulerian table of " + cells.str() +
                                " cells exceeds the node budget");
  if (args.format == "csv") {
    std::cout << "n,k,value\n";
    for (std::size_t n = 1; n <= args.max_n; ++n) {
      const auto row = siteswap::eulerian_row(n);
      for (std::size_t k = 0; k < n; ++k)
        std::cout << n << "," << k << "," << row[k].str() << "\n";
    }
  } else if (args.format == "json") {
    ordered_json rows = ordered_json::array();
    for (std::size_t n = 1; n <= args.max_n; ++n) {
      auto row = ordered_json::array();
      for (const auto& value : siteswap::eulerian_row(n))
        row.push_back(value.str());
      rows.push_back(std::move(row));
    }
    ordered_json doc;
    doc["kind"] = "eulerian";
    doc["max_n"] = args.max_n;
    doc["rows"] = std::move(rows);
    emit(doc);
  } else {
    for (std::size_t n = 1; n <= args.max_n; ++n) {
      const auto row = siteswap::eulerian_row(n);
      for (std::size_t k = 0; k < n; ++k)
        std::cout << (k > 0 ? " " : "") << row[k].str();
      std::cout << "\n";
    }
  }
}

void table_rook(const TableArgs& args) {
  struct Entry {
    std::size_t s, n;
    ExactInt value;
  };
  std::vector<Entry> entries;
  for (std::size_t n = 1; n <= args.max_n; ++n)
    for (std::size_t s = 0; s < n && s <= 3; ++s)
      entries.push_back({s, n, siteswap::rook_oracle(s, n, args.budget)});

  if (args.format == "csv") {
    std::cout << "s,n,value\n";
    for (const auto& e : entries)
      std::cout << e.s << "," << e.n << "," << e.value.str() << "\n";
  } else if (args.format == "json") {
    ordered_json list = ordered_json::array();
    for (const auto& e : entries)
      list.push_back({{"s", e.s}, {"n", e.n}, {"value", e.value.str()}});
    ordered_json doc;
    doc["kind"] = "rook";
    doc["entries"] = std::move(list);
    emit(doc);
  } else {
    for (const auto& e : entries)
      std::cout << "rook(" << e.s << "," << e.n << ") = " << e.value.str()
                << "\n";
  }
}

void table_counts_multiple(const TableArgs& args) {
  if (args.format == "csv") std::cout << "n,b,a,ceiling,count\n";
  ordered_json list = ordered_json::array();
  for (std::size_t n = 1; n <= args.max_n; ++n)
    for (std::int64_t a = 1; a <= args.max_a; ++a) {
      const std::int64_t c = a * static_cast<std::int64_t>(n) - 1;
      std::string text_row;
      for (std::int64_t b = 0; b <= args.max_b; ++b) {
        const auto value = siteswap::count_ceiling_multiple(n, b, a);
        if (args.format == "csv") {
          std::cout << n << "," << b << "," << a << "," << c << ","
                    << value.str() << "\n";
        } else if (args.format == "json") {
          list.push_back({{"n", n},
                          {"b", b},
                          {"a", a},
                          {"ceiling", c},
                          {"count", value.str()}});
        } else {
          text_row += (b > 0 ? " " : "") + value.str();
        }
      }
      if (args.format == "text")
        std::cout << "J(n=" << n << ",b=0.." << args.max_b << ",c=" << c
                  << "): " << text_row << "\n";
    }
  if (args.format == "json") {
    ordered_json doc;
    doc["kind"] = "counts";
    doc["ceiling_form"] = "an-1";
    doc["entries"] = std::move(list);
    emit(doc);
  }
}

void table_counts_small(const TableArgs& args) {
  if (args.format == "csv") std::cout << "n,c,count\n";
  ordered_json list = ordered_json::array();
  for (std::size_t n = 1; n <= args.max_n; ++n) {
    std::string text_row;
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(n); ++c) {
      const auto value =
          siteswap::count_all_balls_small_ceiling(n, c, args.budget);
      if (args.format == "csv") {
        std::cout << n << "," << c << "," << value.str() << "\n";
      } else if (args.format == "json") {
        list.push_back({{"n", n}, {"c", c}, {"count", value.str()}});
      } else {
        text_row += (c > 0 ? " " : "") + value.str();
      }
    }
    if (args.format == "text")
      std::cout << "J(n=" << n << ",*,c=0.." << (n - 1) << "): " << text_row
                << "\n";
  }
  if (args.format == "json") {
    ordered_json doc;
    doc["kind"] = "counts";
    doc["ceiling_form"] = "small";
    doc["entries"] = std::move(list);
    emit(doc);
  }
}

int cmd_table(const TableArgs& args) {
  if (args.kind == "eulerian")
    table_eulerian(args);
  else if (args.kind == "rook")
    table_rook(args);
  else if (args.ceiling_form == "small")
    table_counts_small(args);
  else
    table_counts_multiple(args);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact siteswap pattern toolkit"};
  app.require_subcommand(1);

  ValidateArgs validate_args;
  auto* validate_cmd =
      app.add_subcommand("validate", "check a pattern and report its balls");
  validate_cmd->add_option("pattern", validate_args.pattern, "pattern text")
      ->required();
  validate_cmd->add_option("--format", validate_args.format)
      ->check(CLI::IsMember({"text", "json"}));

  CountArgs count_args;
  auto* count_cmd =
      app.add_subcommand("count", "count patterns for a period/balls/ceiling");
  count_cmd->add_option("--period", count_args.period, "pattern period")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* count_balls = count_cmd->add_option("--balls", count_args.balls)
                          ->check(CLI::NonNegativeNumber);
  count_cmd->add_flag("--all-balls", count_args.all_balls)
      ->excludes(count_balls);
  count_cmd->add_option("--ceiling", count_args.ceiling)
      ->check(CLI::NonNegativeNumber);
  count_cmd->add_option("--method", count_args.method)
      ->check(CLI::IsMember({"auto", "closed", "closed-form", "oracle", "both"}));
  count_cmd->add_option("--budget", count_args.budget, "oracle node budget")
      ->envname("SITESWAP_NODE_BUDGET");
  count_cmd->add_option("--format", count_args.format)
      ->check(CLI::IsMember({"text", "json"}));

  EnumerateArgs enumerate_args;
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "list patterns in lexicographic order");
  enumerate_cmd->add_option("--period", enumerate_args.period)
      ->required()
      ->check(CLI::PositiveNumber);
  auto* enum_balls = enumerate_cmd->add_option("--balls", enumerate_args.balls)
                         ->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_flag("--all-balls", enumerate_args.all_balls)
      ->excludes(enum_balls);
  enumerate_cmd->add_option("--ceiling", enumerate_args.ceiling)
      ->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_option("--limit", enumerate_args.limit,
                            "print at most this many patterns");
  enumerate_cmd->add_option("--budget", enumerate_args.budget)
      ->envname("SITESWAP_NODE_BUDGET");
  enumerate_cmd->add_option("--format", enumerate_args.format)
      ->check(CLI::IsMember({"text", "json", "csv"}));

  DecomposeArgs decompose_args;
  auto* decompose_cmd =
      app.add_subcommand("decompose", "split a pattern into P - Q + nB");
  decompose_cmd->add_option("pattern", decompose_args.pattern)->required();
  decompose_cmd->add_option("--format", decompose_args.format)
      ->check(CLI::IsMember({"text", "json"}));

  ConstructArgs construct_args;
  auto* construct_cmd =
      app.add_subcommand("construct", "build a pattern from P and B");
  construct_cmd->add_option("--perm", construct_args.perm)->required();
  construct_cmd->add_option("--bvec", construct_args.bvec)->required();
  construct_cmd->add_option("--format", construct_args.format)
      ->check(CLI::IsMember({"text", "json"}));

  TableArgs table_args;
  auto* table_cmd = app.add_subcommand("table", "emit count tables");
  table_cmd->add_option("--kind", table_args.kind)
      ->required()
      ->check(CLI::IsMember({"eulerian", "rook", "counts"}));
  table_cmd->add_option("--max-n", table_args.max_n)
      ->required()
      ->check(CLI::PositiveNumber);
  table_cmd->add_option("--ceiling-form", table_args.ceiling_form)
      ->check(CLI::IsMember({"an-1", "small"}));
  table_cmd->add_option("--max-b", table_args.max_b)
      ->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--max-a", table_args.max_a)
      ->check(CLI::PositiveNumber);
  table_cmd->add_option("--budget", table_args.budget)
      ->envname("SITESWAP_NODE_BUDGET");
  table_cmd->add_option("--format", table_args.format)
      ->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(validate_args);
    if (*count_cmd) return cmd_count(count_args);
    if (*enumerate_cmd) return cmd_enumerate(enumerate_args);
    if (*decompose_cmd) return cmd_decompose(decompose_args);
    if (*construct_cmd) return cmd_construct(construct_args);
    if (*table_cmd) return cmd_table(table_args);
    std::cerr << "error: no command selected\n";
    return kExitUsage;
  } catch (const siteswap::ParseError& e) {
    std::cerr << "error: parse error at offset " << e.offset() << ": "
              << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const siteswap::NoClosedForm& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const siteswap::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const siteswap::CrossCheckError& e) {
    std::cerr << "error: cross-check failed: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
