#include "rcpower/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "rcpower/certificate_io.hpp"
#include "rcpower/constructions.hpp"
#include "rcpower/dot_export.hpp"
#include "rcpower/errors.hpp"
#include "rcpower/solver.hpp"
#include "rcpower/verifier.hpp"

namespace rcpower::cli {

namespace {

struct Options {
  std::string spec;
  int k = 0;
  std::string method;
  std::string rc_format;
  std::string verify_format;
  std::string output;
  std::string catalog;
  std::size_t max_order = 0;
  std::uint64_t budget_nodes = Budget{}.max_nodes;
  std::uint64_t budget_seconds = 0;
};

Budget budget_of(const Options& o) {
  Budget b;
  b.max_nodes = o.budget_nodes;
  if (o.budget_seconds > 0) b.max_seconds = o.budget_seconds;
  return b;
}

struct Loaded {
  Group group;
  Graph graph;
};

Loaded load(const std::string& spec_text) {
  auto group = build_group(parse_group_spec(spec_text));
  auto graph = build_power_graph(group);
  return {std::move(group), std::move(graph)};
}

std::string certified_document(const Graph& graph, const EdgeColoring& coloring) {
  const auto check = is_rainbow_connected(graph, coloring);
  if (!check) {
    throw Error("coloring failed rainbow validation at pair {" + std::to_string(check.failing->u) +
                ", " + std::to_string(check.failing->v) + "}");
  }
  const auto doc = make_document(graph, coloring, &check.certificate);
  return write_document(doc);
}

int cmd_rc(const Options& o, std::ostream& out) {
  const auto [group, graph] = load(o.spec);
  const auto report = rc_exact(graph, group, budget_of(o));
  if (o.rc_format == "table") {
    out << "group        " << report.group << "\n"
        << "order        " << report.order << "\n"
        << "edges        " << report.edges << "\n"
        << "|M_G|        " << report.m_g << "\n"
        << "lower        " << report.lower.value << " (" << reason_name(report.lower.reason) << ")\n"
        << "upper        " << report.upper << " (" << report.upper_method << ")\n"
        << "exact        " << (report.exact ? std::to_string(*report.exact) : "-") << "\n"
        << "status       " << (report.status == RcStatus::Exact ? "exact" : "interval") << "\n"
        << "nodes        " << report.nodes << "\n";
  } else {
    out << to_json(report).dump(2) << "\n";
  }
  return report.status == RcStatus::Exact ? kSuccess : kInconclusive;
}

int cmd_decide(const Options& o, std::ostream& out) {
  const auto [group, graph] = load(o.spec);
  const auto result = rc_decide(graph, o.k, budget_of(o));
  switch (result.status) {
    case DecideStatus::Found:
      out << certified_document(graph, *result.coloring);
      return kSuccess;
    case DecideStatus::NoColoring:
      out << "NoColoring k=" << o.k << " nodes=" << result.nodes << "\n";
      return kSuccess;
    case DecideStatus::BudgetExceeded:
      out << "BudgetExceeded k=" << o.k << " nodes=" << result.nodes << "\n";
      return kInconclusive;
  }
  return kFailure;
}

int cmd_color(const Options& o, std::ostream& out, std::ostream& err) {
  const auto [group, graph] = load(o.spec);
  const auto method = parse_construction(o.method);
  try {
    const auto coloring = construct_coloring(*method, group, graph);
    out << certified_document(graph, coloring);
    return kSuccess;
  } catch (const NotApplicable& e) {
    out << "NotApplicable: " << e.what() << "\n";
  } catch (const GroupTooSmall& e) {
    out << "NotApplicable: " << e.what() << "\n";
  }
  err << "construction '" << o.method << "' does not apply to " << o.spec << "\n";
  return kFailure;
}

int cmd_graph(const Options& o, std::ostream& out) {
  const auto [group, graph] = load(o.spec);
  if (o.method.empty()) {
    out << to_dot(graph);
  } else {
    const auto coloring = construct_coloring(*parse_construction(o.method), group, graph);
    out << to_dot(graph, &coloring);
  }
  return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto entries = o.catalog.empty() ? default_catalog() : load_catalog(o.catalog);
  std::optional<std::size_t> max_order;
  if (o.max_order > 0) max_order = o.max_order;
  const auto report = verify_catalog(entries, budget_of(o), max_order);
  if (o.verify_format == "json") {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << to_table(report);
  }
  if (report.has_failures()) return kFailure;
  if (report.count(Verdict::Inconclusive) > 0) return kInconclusive;
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rainbow connection numbers of power graphs of finite groups", "rcpower"};
  app.require_subcommand(1);
  Options o;
  std::string graph_format;  // dot is the only format

  const auto add_output = [&o](CLI::App* sub) {
    sub->add_option("--output,-o", o.output, "Write to this file instead of stdout");
  };
  const auto add_budget = [&o](CLI::App* sub) {
    sub->add_option("--budget-nodes", o.budget_nodes, "Search nodes per (graph, k) decision")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget-seconds", o.budget_seconds, "Wall-clock seconds per decision")
        ->check(CLI::PositiveNumber);
  };
  const std::vector<std::string> methods = {"max-m3", "cyclic2", "q8zn", "pnq"};

  auto* rc = app.add_subcommand("rc", "Exact rainbow connection number of the power graph");
  rc->add_option("spec", o.spec, "Group spec, e.g. \"Q:8 x Z:3\"")->required();
  rc->add_option("--format", o.rc_format, "json or table")
      ->check(CLI::IsMember({"json", "table"}))
      ->default_val("json");
  add_budget(rc);
  add_output(rc);

  auto* decide = app.add_subcommand("decide", "Decide whether a rainbow k-coloring exists");
  decide->add_option("spec", o.spec, "Group spec")->required();
  decide->add_option("--k", o.k, "Number of colors")->required()->check(CLI::PositiveNumber);
  add_budget(decide);
  add_output(decide);

  auto* color = app.add_subcommand("color", "Run a constructive coloring and certify it");
  color->add_option("spec", o.spec, "Group spec")->required();
  color->add_option("--method", o.method, "max-m3, cyclic2, q8zn or pnq")
      ->required()
      ->check(CLI::IsMember(methods));
  add_output(color);

  auto* graph = app.add_subcommand("graph", "Export the power graph");
  graph->add_option("spec", o.spec, "Group spec")->required();
  graph->add_option("--format", graph_format, "Output format")
      ->check(CLI::IsMember({"dot"}))
      ->default_val("dot");
  graph->add_option("--method", o.method, "Color edges with this construction")
      ->check(CLI::IsMember(methods));
  add_output(graph);

  auto* verify = app.add_subcommand("verify", "Verify the theorem catalog");
  verify->add_option("--catalog", o.catalog, "Catalog file (default: built-in catalog)");
  verify->add_option("--max-order", o.max_order, "Skip groups larger than this")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", o.verify_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}))
      ->default_val("table");
  add_budget(verify);
  add_output(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  std::ostringstream buffer;
  int code = kSuccess;
  try {
    if (*rc) {
      code = cmd_rc(o, buffer);
    } else if (*decide) {
      code = cmd_decide(o, buffer);
    } else if (*color) {
      code = cmd_color(o, buffer, err);
    } else if (*graph) {
      code = cmd_graph(o, buffer);
    } else {
      code = cmd_verify(o, buffer);
    }
  } catch (const InvalidSpec& e) {
    err << "invalid group spec: " << e.what() << "\n";
    return kUsage;
  } catch (const NotAGroup& e) {
    err << "not a group: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }

  if (o.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) {
      err << "cannot write '" << o.output << "'\n";
      return kUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace rcpower::cli
