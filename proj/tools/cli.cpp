#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "s1fix/decider.hpp"
#include "s1fix/enumeration.hpp"
#include "s1fix/invariants.hpp"
#include "s1fix/multigraph.hpp"

namespace s1fix::cli {

namespace {

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool pretty = false;

  void emit(const Json& j) const { out << (pretty ? j.dump(2) : j.dump()) << '\n'; }
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  buf << file.rdbuf();
  return buf.str();
}

int cmd_check(const Context& ctx, const std::string& file) {
  const Decision d = decide(parse(read_input(file, ctx.in)));
  ctx.emit(to_json(d));
  return d.realizable ? kOk : kNotRealizable;
}

int cmd_trace(const Context& ctx, const std::string& file) {
  const Decision d = decide(parse(read_input(file, ctx.in)));
  if (!d.realizable) {
    ctx.emit(to_json(d));
    return kNotRealizable;
  }
  ctx.emit(to_json(*d.trace));
  return kOk;
}

int cmd_invariants(const Context& ctx, const std::string& file) {
  ctx.emit(to_json(structural_checks(parse(read_input(file, ctx.in)))));
  return kOk;
}

int cmd_enumerate(const Context& ctx, std::size_t points, Weight max_weight, bool with_traces, unsigned jobs) {
  const Corpus corpus = enumerate({points, max_weight}, jobs);
  for (std::size_t i : corpus.canonical_order()) {
    Json j = to_json(corpus.data(i));
    if (with_traces) j["trace"] = to_json(corpus.trace(i));
    ctx.emit(j);
  }
  return kOk;
}

int cmd_spectrum(const Context& ctx, std::size_t points, Weight max_weight) {
  const auto spectrum = signature_spectrum(points, max_weight);
  ctx.emit(Json(std::vector<std::int64_t>(spectrum.begin(), spectrum.end())));
  return kOk;
}

int cmd_classify(const Context& ctx, std::size_t points, Weight max_weight) {
  for (const auto& c : classify_small(points, max_weight)) ctx.emit(to_json(c));
  return kOk;
}

// Graph of a trace, or of the decider's trace for data. Returns nullopt (after
// reporting) when the data is not realizable.
std::optional<Multigraph> load_graph(const Context& ctx, const std::string& data_file,
                                     const std::string& trace_file) {
  if (!trace_file.empty()) return graph_of(parse_trace(read_input(trace_file, ctx.in)));
  const Decision d = decide(parse(read_input(data_file, ctx.in)));
  if (!d.realizable) {
    ctx.err << "s1fix: data is not realizable (" << d.obstruction->check << ")\n";
    return std::nullopt;
  }
  return graph_of(*d.trace);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed point data of circle actions on oriented 4-manifolds", "s1fix"};
  app.require_subcommand(1);
  Context ctx{in, out, err};
  app.add_flag("--pretty", ctx.pretty, "Indent JSON output");

  std::string file, data_file, trace_file;
  std::size_t points = 0;
  Weight max_weight = 1;
  bool with_traces = false;
  unsigned jobs = 1;

  auto* check = app.add_subcommand("check", "Decide realizability; print the decision");
  auto* trace = app.add_subcommand("trace", "Print a construction trace for realizable data");
  auto* invariants = app.add_subcommand("invariants", "Print the invariant report");
  for (auto* sub : {check, trace, invariants}) {
    sub->add_option("file", file, "Data file, or - for standard input")->required();
  }

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every realizable data set within bounds");
  auto* spectrum = app.add_subcommand("spectrum", "Signatures realized by exactly k points");
  auto* classify = app.add_subcommand("classify", "Match small data sets against the closed-form families");
  for (auto* sub : {enumerate_cmd, spectrum, classify}) {
    sub->add_option("--points", points, "Number of fixed points")->required();
    sub->add_option("--max-weight", max_weight, "Largest weight")->required()->check(CLI::PositiveNumber);
  }
  classify->get_option("--points")->check(CLI::Range(2, 4));
  enumerate_cmd->add_flag("--with-traces", with_traces, "Attach a witness trace to each entry");
  enumerate_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* graph = app.add_subcommand("graph", "Print the multigraph of a construction");
  auto* dot = app.add_subcommand("dot", "Print the multigraph of a construction as DOT");
  for (auto* sub : {graph, dot}) {
    auto* d = sub->add_option("--data", data_file, "Data file, or - for standard input");
    auto* t = sub->add_option("--trace", trace_file, "Trace file, or - for standard input");
    d->excludes(t);
    sub->require_option(1);
  }
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "s1fix: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (check->parsed()) return cmd_check(ctx, file);
    if (trace->parsed()) return cmd_trace(ctx, file);
    if (invariants->parsed()) return cmd_invariants(ctx, file);
    if (enumerate_cmd->parsed()) return cmd_enumerate(ctx, points, max_weight, with_traces, jobs);
    if (spectrum->parsed()) return cmd_spectrum(ctx, points, max_weight);
    if (classify->parsed()) return cmd_classify(ctx, points, max_weight);
    if (graph->parsed() || dot->parsed()) {
      const auto g = load_graph(ctx, data_file, trace_file);
      if (!g) return kNotRealizable;
      if (graph->parsed()) ctx.emit(to_json(*g));
      else out << to_dot(*g);
      return kOk;
    }
  } catch (const Error& e) {
    err << "s1fix: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace s1fix::cli
