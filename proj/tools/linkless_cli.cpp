// Command-line front end over the linkless C interface.
//
//   linkless decide FILE        linkless embeddability with certificate
//   linkless family             the seven graphs reachable from K6
//   linkless web FILE           Kuratowski web and its connectivity
//   linkless invariant FILE     convex diagram and Conway-Gordon sum
//   linkless minor HOST PATTERN minor containment with certificate
//   linkless cycles FILE        simple cycles
//
// Exit status: 0 success, 1 usage or input error, 2 parse error, 3 cap
// exceeded, 4 internal error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "linkless/linkless.h"

namespace {

using Json = nlohmann::ordered_json;

struct GraphDeleter {
  void operator()(lk_graph* g) const { lk_graph_free(g); }
};
using GraphHandle = std::unique_ptr<lk_graph, GraphDeleter>;

struct Failure {
  int status;
  std::string message;
};

int exit_code(lk_status s) {
  switch (s) {
    case LK_OK:
      return 0;
    case LK_ERR_INPUT:
      return 1;
    case LK_ERR_PARSE:
      return 2;
    case LK_ERR_RESOURCE:
      return 3;
    default:
      return 4;
  }
}

void check(lk_status s) {
  if (s != LK_OK) throw Failure{exit_code(s), lk_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{1, "cannot read " + path};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

lk_format format_of(const std::string& name) {
  if (name == "graph6") return LK_FORMAT_GRAPH6;
  if (name == "edge-list") return LK_FORMAT_EDGE_LIST;
  return LK_FORMAT_AUTO;
}

GraphHandle load(const std::string& path, const std::string& format) {
  std::string text = read_file(path);
  lk_graph* raw = nullptr;
  check(lk_graph_parse(text.data(), text.size(), format_of(format), &raw));
  return GraphHandle(raw);
}

// Takes ownership of a C string from the library.
std::string take(char* s) {
  std::string out = s == nullptr ? std::string() : std::string(s);
  lk_string_free(s);
  return out;
}

std::string join(const Json& arr) {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) out += (i ? " " : "") + arr[i].dump();
  return out;
}

std::string text_view(const std::string& command, const Json& doc) {
  std::ostringstream os;
  if (command == "decide") {
    if (doc["embeddable"].get<bool>()) {
      os << "embeddable: yes\n";
    } else {
      os << "embeddable: no\nminor of family member " << doc["family_member"] << "\n";
      for (std::size_t i = 0; i < doc["branch_sets"].size(); ++i) os << "  " << i << ": " << join(doc["branch_sets"][i]) << "\n";
    }
  } else if (command == "family") {
    for (const auto& m : doc["members"]) os << m["graph6"].get<std::string>() << "\n";
  } else if (command == "web") {
    os << "nodes: " << doc["node_count"] << "\nadjacent pairs: " << doc["adjacency"].size()
       << "\nconnected: " << (doc["connected"].get<bool>() ? "yes" : "no") << "\nvertex connectivity: "
       << doc["vertex_connectivity"] << "\n";
  } else if (command == "invariant") {
    os << "crossings: " << doc["diagram"]["crossings"].size() << "\ndisjoint cycle pairs: " << doc["disjoint_cycle_pairs"]
       << "\nconway-gordon sum: " << doc["conway_gordon_sum"] << "\n";
  } else if (command == "minor") {
    os << "minor: " << (doc["is_minor"].get<bool>() ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < doc["branch_sets"].size(); ++i) os << "  " << i << ": " << join(doc["branch_sets"][i]) << "\n";
  } else if (command == "cycles") {
    for (const auto& c : doc["cycles"]) os << join(c) << "\n";
  }
  return os.str();
}

std::vector<std::int64_t> parse_order(const std::string& spec) {
  std::vector<std::int64_t> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Failure{1, "bad --order entry '" + item + "'"};
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linkless embeddability, Petersen family, Kuratowski webs and mod-2 linking"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "auto";
  int cap_vertices = 0;
  std::uint64_t seed = 0;
  std::string order;
  std::string over_rule = "lex";
  std::string output = "json";
  std::string assignment;
  std::string dot_path;

  app.add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"auto", "graph6", "edge-list"}))
      ->envname("LINKLESS_FORMAT");
  app.add_option("--cap-vertices", cap_vertices, "Vertex cap (default: 16 decide/minor, 10 web, 12 cycles)")
      ->check(CLI::PositiveNumber)
      ->envname("LINKLESS_CAP_VERTICES");
  app.add_option("--seed", seed, "Seed for the random over rule")->envname("LINKLESS_SEED");
  app.add_option("--order", order, "Cyclic vertex order, comma separated")->envname("LINKLESS_ORDER");
  app.add_option("--over-rule", over_rule, "Crossing over rule")
      ->check(CLI::IsMember({"lex", "random"}))
      ->envname("LINKLESS_OVER_RULE");
  app.add_option("--output", output, "Output form")->check(CLI::IsMember({"json", "text"}))->envname("LINKLESS_OUTPUT");

  std::string input;
  std::string pattern_path;
  auto* decide = app.add_subcommand("decide", "Decide linkless embeddability");
  decide->add_option("input", input, "Graph file")->required();
  app.add_subcommand("family", "Emit the Petersen family");
  auto* web = app.add_subcommand("web", "Build the Kuratowski web");
  web->add_option("input", input, "Graph file")->required();
  web->add_option("--dot", dot_path, "Also write a DOT rendering here");
  auto* invariant = app.add_subcommand("invariant", "Conway-Gordon sum of a convex diagram");
  invariant->add_option("input", input, "Graph file")->required();
  invariant->add_option("--assignment", assignment, "Diagram JSON fixing every over/under choice");
  auto* minor = app.add_subcommand("minor", "Test whether PATTERN is a minor of HOST");
  minor->add_option("host", input, "Host graph file")->required();
  minor->add_option("pattern", pattern_path, "Pattern graph file")->required();
  auto* cycles = app.add_subcommand("cycles", "Enumerate simple cycles");
  cycles->add_option("input", input, "Graph file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    char* json = nullptr;
    if (command == "decide") {
      check(lk_decide(load(input, format).get(), cap_vertices, &json));
    } else if (command == "family") {
      check(lk_family(&json));
    } else if (command == "web") {
      char* dot = nullptr;
      check(lk_web(load(input, format).get(), cap_vertices, &json, dot_path.empty() ? nullptr : &dot));
      if (!dot_path.empty()) {
        std::ofstream out(dot_path, std::ios::binary);
        out << take(dot);
        if (!out) throw Failure{1, "cannot write " + dot_path};
      }
    } else if (command == "invariant") {
      auto g = load(input, format);
      std::vector<std::int64_t> ids = order.empty() ? std::vector<std::int64_t>{} : parse_order(order);
      std::string assignment_text = assignment.empty() ? std::string() : read_file(assignment);
      lk_diagram_options opts{};
      opts.order = ids.empty() ? nullptr : ids.data();
      opts.order_length = ids.size();
      opts.rule = over_rule == "random" ? LK_OVER_RANDOM : LK_OVER_LEXICOGRAPHIC;
      opts.seed = seed;
      opts.assignment_json = assignment.empty() ? nullptr : assignment_text.c_str();
      opts.cycle_vertex_cap = cap_vertices;
      check(lk_invariant(g.get(), &opts, &json));
    } else if (command == "minor") {
      auto host = load(input, format);
      auto pattern = load(pattern_path, format);
      check(lk_minor(host.get(), pattern.get(), cap_vertices, &json));
    } else if (command == "cycles") {
      check(lk_cycles(load(input, format).get(), cap_vertices, &json));
    }
    std::string doc = take(json);
    if (output == "text") {
      std::cout << text_view(command, Json::parse(doc));
    } else {
      std::cout << doc;
    }
    return 0;
  } catch (const Failure& f) {
    std::cerr << "linkless: " << f.message << "\n";
    return f.status;
  }
}
