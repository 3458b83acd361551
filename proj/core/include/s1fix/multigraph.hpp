#pragma once

// Signed, labelled, 2-regular multigraphs attached to dimension-4 circle
// actions: vertices are fixed points, an edge labelled w joins the two poles
// of an isotropy 2-sphere fixed by Z_w.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "s1fix/core.hpp"
#include "s1fix/ops4.hpp"

namespace s1fix {

using VertexId = std::int64_t;

struct Vertex {
  VertexId id;
  Sign sign;
  bool operator==(const Vertex&) const = default;
};

struct Edge {
  VertexId u;
  VertexId v;
  std::int64_t label;  // signed so malformed input can be represented and reported
  bool operator==(const Edge&) const = default;
};

struct Multigraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  const Vertex* find_vertex(VertexId id) const noexcept;
  bool operator==(const Multigraph&) const = default;  // exact, order-sensitive
};

enum class GraphIssueCode { DuplicateVertex, UnknownVertex, Loop, NonPositiveLabel, NotTwoRegular };
std::string_view to_string(GraphIssueCode code);

struct GraphIssue {
  GraphIssueCode code;
  std::string message;
};

struct GraphReport {
  std::vector<GraphIssue> issues;
  bool ok() const noexcept { return issues.empty(); }
  bool has(GraphIssueCode code) const noexcept;
};

GraphReport validate_graph(const Multigraph& graph);

struct PropertyCheck {
  bool passed = true;
  std::string witness;  // empty when passed
};

struct PropertyReport {
  PropertyCheck effective;     // the two labels at every vertex are coprime
  PropertyCheck equal_modulo;  // -s(v1) w(e1) == s(v2) w(e2) mod w(e) for every edge e
  PropertyCheck minimal;       // minimum-label edges join opposite signs

  bool all_passed() const noexcept { return effective.passed && equal_modulo.passed && minimal.passed; }
};

// Throws InvalidGraph if validate_graph fails.
PropertyReport check_properties(const Multigraph& graph);

// Builds the graph of a construction: a sphere contributes two opposite
// vertices joined by edges a and b; blowing up v = (s,{a,b}) splits v into
// v1 = (s,{a,a+b}) and v2 = (s,{b,a+b}) joined by a new edge a+b, with v's
// a-edge moved to v1 and its b-edge to v2. Vertices are numbered 0..k-1 in
// creation order. Throws TraceInvalid.
Multigraph graph_of(const ConstructionTrace& trace);

// Each vertex becomes (sign, incident labels). Throws InvalidGraph.
FixedPointData data_of(const Multigraph& graph);

struct Realization {
  std::optional<ConstructionTrace> trace;  // present iff every property holds
  PropertyReport properties;
};

// Throws InvalidGraph, or InternalInconsistency if the properties hold but the
// decider rejects the induced data.
Realization realize(const Multigraph& graph);

// Deterministic DOT; nodes by id, edges by (min end, max end, label).
std::string to_dot(const Multigraph& graph);

Json to_json(const Multigraph& graph);
Multigraph graph_from_json(const Json& json);
std::string serialize(const Multigraph& graph);
Multigraph parse_graph(std::string_view text);

}  // namespace s1fix
