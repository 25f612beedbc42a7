#include "critgroup_cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "critgroup/critical_group.hpp"
#include "critgroup/error.hpp"
#include "critgroup/families.hpp"
#include "critgroup/theorems.hpp"
#include "critgroup/transforms.hpp"

namespace critgroup::cli {
namespace {

enum class Format { Json, Text };

struct Options {
  std::string family;
  std::string input;
  std::optional<int> e0;
  std::vector<std::string> primes{"2", "3", "5", "7"};
  int nmax = 4;
  bool strict = false;
  bool summary = false;
  Format format = Format::Json;
  std::string theorem;
  std::string name;
  std::vector<int> params;
  unsigned threads = 0;
};

bool is_input_error(ErrorKind k) {
  return k == ErrorKind::ParseError || k == ErrorKind::InvalidGraph ||
         k == ErrorKind::UnknownFamily || k == ErrorKind::BadParams || k == ErrorKind::NotPrime;
}

struct Input {
  Graph graph;
  std::string name;
};

Input load(const Options& o) {
  if (!o.family.empty()) return {generate_from_spec(o.family), o.family};
  std::ifstream in(o.input);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + o.input + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return {parse_edge_list(buf.str()), o.input};
}

std::string render(const FiniteAbelianGroup& k, Format f) {
  return f == Format::Json ? group_json(k).dump() : k.to_string();
}

std::string render(const TheoremVerdict& v, Format f) {
  if (f == Format::Json) return to_json(v).dump();
  const VerdictStatus s = v.status();
  std::string line = v.theorem + ' ' + v.graph + ' ' +
                     (s == VerdictStatus::Pass       ? "pass"
                      : s == VerdictStatus::Violated ? "VIOLATED"
                                                     : "hypothesis-failed");
  if (!v.reason.empty()) line += " (" + v.reason + ")";
  return line;
}

struct Tally {
  long pass = 0;
  long violated = 0;
  long hypothesis_failed = 0;

  void add(const TheoremVerdict& v) {
    switch (v.status()) {
      case VerdictStatus::Pass: ++pass; break;
      case VerdictStatus::Violated: ++violated; break;
      case VerdictStatus::HypothesisFailed: ++hypothesis_failed; break;
    }
  }
  int exit_code(bool strict) const {
    if (violated > 0 || (strict && hypothesis_failed > 0)) return kExitFailed;
    return kExitOk;
  }
};

TheoremOptions theorem_options(const Options& o) {
  TheoremOptions t;
  t.primes.clear();
  for (const auto& p : o.primes) {
    BigInt value;
    if (value.set_str(p, 10) != 0 || !is_prime(value)) {
      throw Error(ErrorKind::NotPrime, "'" + p + "' is not a prime");
    }
    t.primes.push_back(value);
  }
  t.e0 = o.e0;
  return t;
}

int cmd_compute(const Options& o, std::ostream& out) {
  const Input in = load(o);
  const FiniteAbelianGroup k =
      o.e0 ? line_presentation(in.graph, *o.e0).group() : critical_group(in.graph);
  out << render(k, o.format) << '\n';
  return kExitOk;
}

int cmd_transform(const Options& o, std::ostream& out, bool line) {
  const Input in = load(o);
  out << to_edge_list(line ? line_graph(in.graph) : subdivision(in.graph));
  return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  out << spanning_forest_count(load(o).graph).get_str() << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Input in = load(o);
  Tally tally;
  for (const auto& v : run_theorem(o.theorem, in.graph, in.name, theorem_options(o))) {
    tally.add(v);
    out << render(v, o.format) << '\n';
  }
  return tally.exit_code(o.strict);
}

int cmd_suite(const Options& o, std::ostream& out) {
  const std::vector<Graph> graphs = enumerate_connected(o.nmax);
  const TheoremOptions topts = theorem_options(o);
  const std::vector<std::string> ids = theorem_ids();

  // Per-graph buffers, emitted in enumeration order afterwards.
  std::vector<std::string> text(graphs.size());
  std::vector<Tally> tallies(graphs.size());
  std::vector<std::string> failures(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      const std::string name = compact_descriptor(graphs[i]);
      std::string buf;
      try {
        for (const auto& id : ids) {
          for (const auto& v : run_theorem(id, graphs[i], name, topts)) {
            tallies[i].add(v);
            if (!o.summary || v.status() == VerdictStatus::Violated) {
              buf += render(v, o.format);
              buf += '\n';
            }
          }
        }
      } catch (const std::exception& e) {
        failures[i] = name + ": " + e.what();
      }
      text[i] = std::move(buf);
    }
  };
  unsigned n_threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(std::max<std::size_t>(1, graphs.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  Tally total;
  long errors = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    out << text[i];
    total.pass += tallies[i].pass;
    total.violated += tallies[i].violated;
    total.hypothesis_failed += tallies[i].hypothesis_failed;
    if (!failures[i].empty()) {
      ++errors;
      out << (o.format == Format::Json ? nlohmann::json{{"error", failures[i]}}.dump()
                                       : "error " + failures[i])
          << '\n';
    }
  }
  if (o.format == Format::Json) {
    out << nlohmann::json{{"summary",
                           {{"graphs", graphs.size()},
                            {"pass", total.pass},
                            {"violated", total.violated},
                            {"hypothesis_failed", total.hypothesis_failed},
                            {"errors", errors}}}}
               .dump()
        << '\n';
  } else {
    out << "summary: " << graphs.size() << " graphs, " << total.pass << " pass, "
        << total.violated << " violated, " << total.hypothesis_failed
        << " hypothesis-failed, " << errors << " errors\n";
  }
  return errors > 0 ? kExitFailed : total.exit_code(o.strict);
}

int cmd_family(const Options& o, std::ostream& out) {
  out << to_edge_list(generate_named(o.name, o.params));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Critical groups of graphs, line graphs and subdivisions"};
  app.require_subcommand(1);
  Options o;
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"text", Format::Text}};

  auto add_input = [&](CLI::App* sub) {
    auto* fam = sub->add_option("--family", o.family, "Named graph, e.g. complete:4");
    auto* file = sub->add_option("--input", o.input, "Edge-list file");
    fam->excludes(file);
    sub->add_option("--format", o.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->callback([sub] {
      if (sub->count("--family") + sub->count("--input") != 1) {
        throw CLI::ValidationError("exactly one of --family or --input is required");
      }
    });
  };

  auto* compute = app.add_subcommand("compute", "Critical group as JSON or text");
  add_input(compute);
  compute->add_option("--e0", o.e0, "Compute K(L G) from the edge presentation with this e0");
  auto* line = app.add_subcommand("line", "Line graph as an edge list");
  add_input(line);
  auto* subdivide = app.add_subcommand("subdivide", "Edge subdivision as an edge list");
  add_input(subdivide);
  auto* count = app.add_subcommand("count", "Number of spanning forests");
  add_input(count);

  auto* verify = app.add_subcommand("verify", "Check one theorem on one graph");
  add_input(verify);
  verify->add_option("--theorem", o.theorem, "Theorem id")
      ->required()
      ->check(CLI::IsMember(theorem_ids()));
  verify->add_option("--primes", o.primes, "Primes for 1.2")->delimiter(',');
  verify->add_option("--e0", o.e0, "Single e0 for p3.2");
  verify->add_flag("--strict", o.strict, "Fail when a hypothesis fails");

  auto* suite = app.add_subcommand("suite", "Every theorem over all connected graphs on <= nmax vertices");
  suite->add_option("--nmax", o.nmax, "Largest vertex count")->check(CLI::Range(1, 7));
  suite->add_option("--primes", o.primes, "Primes for 1.2")->delimiter(',');
  suite->add_option("--format", o.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  suite->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  suite->add_flag("--strict", o.strict, "Fail when a hypothesis fails");
  suite->add_flag("--summary", o.summary, "Print only violations and the summary");

  auto* family = app.add_subcommand("family", "Emit a named graph as an edge list");
  family->add_option("--name", o.name, "Family name")->required()->check(CLI::IsMember(family_names()));
  family->add_option("--params", o.params, "Comma-separated integers")->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (compute->parsed()) return cmd_compute(o, out);
    if (line->parsed()) return cmd_transform(o, out, true);
    if (subdivide->parsed()) return cmd_transform(o, out, false);
    if (count->parsed()) return cmd_count(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (suite->parsed()) return cmd_suite(o, out);
    return cmd_family(o, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return is_input_error(e.kind()) ? kExitParse : kExitFailed;
  }
}

}  // namespace critgroup::cli
