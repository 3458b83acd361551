#include "s1fix/multigraph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "s1fix/decider.hpp"

namespace s1fix {

const Vertex* Multigraph::find_vertex(VertexId id) const noexcept {
  auto it = std::find_if(vertices.begin(), vertices.end(), [id](const Vertex& v) { return v.id == id; });
  return it == vertices.end() ? nullptr : &*it;
}

std::string_view to_string(GraphIssueCode code) {
  switch (code) {
    case GraphIssueCode::DuplicateVertex: return "DuplicateVertex";
    case GraphIssueCode::UnknownVertex: return "UnknownVertex";
    case GraphIssueCode::Loop: return "Loop";
    case GraphIssueCode::NonPositiveLabel: return "NonPositiveLabel";
    case GraphIssueCode::NotTwoRegular: return "NotTwoRegular";
  }
  return "Unknown";
}

bool GraphReport::has(GraphIssueCode code) const noexcept {
  return std::any_of(issues.begin(), issues.end(), [code](const GraphIssue& i) { return i.code == code; });
}

namespace {

std::string vname(VertexId id) { return "p" + std::to_string(id); }

std::string edge_name(const Multigraph& g, std::size_t e) {
  const Edge& ed = g.edges[e];
  return "edge " + std::to_string(e) + " (" + vname(ed.u) + "-" + vname(ed.v) + ", label " +
         std::to_string(ed.label) + ")";
}

// vertex id -> indices of incident edges (one entry per edge end)
std::map<VertexId, std::vector<std::size_t>> incidence(const Multigraph& g) {
  std::map<VertexId, std::vector<std::size_t>> inc;
  for (const auto& v : g.vertices) inc[v.id];
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    inc[g.edges[e].u].push_back(e);
    if (g.edges[e].v != g.edges[e].u) inc[g.edges[e].v].push_back(e);
  }
  return inc;
}

void require_valid(const Multigraph& g) {
  const GraphReport report = validate_graph(g);
  if (!report.ok()) {
    const auto& i = report.issues.front();
    throw Error(ErrorCode::InvalidGraph, std::string(to_string(i.code)) + ": " + i.message);
  }
}

std::size_t other_edge(const std::vector<std::size_t>& incident, std::size_t e) {
  return incident[0] == e ? incident[1] : incident[0];
}

}  // namespace

GraphReport validate_graph(const Multigraph& g) {
  GraphReport report;
  std::map<VertexId, int> degree;
  for (const auto& v : g.vertices) {
    if (!degree.emplace(v.id, 0).second) {
      report.issues.push_back({GraphIssueCode::DuplicateVertex, "vertex id " + std::to_string(v.id) + " repeated"});
    }
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const Edge& ed = g.edges[e];
    if (ed.label <= 0) report.issues.push_back({GraphIssueCode::NonPositiveLabel, edge_name(g, e)});
    if (ed.u == ed.v) report.issues.push_back({GraphIssueCode::Loop, edge_name(g, e)});
    for (VertexId end : {ed.u, ed.v}) {
      auto it = degree.find(end);
      if (it == degree.end()) {
        report.issues.push_back({GraphIssueCode::UnknownVertex, edge_name(g, e) + " references " + vname(end)});
      } else {
        ++it->second;
      }
    }
  }
  for (const auto& [id, d] : degree) {
    if (d != 2) {
      report.issues.push_back(
          {GraphIssueCode::NotTwoRegular, vname(id) + " has " + std::to_string(d) + " edge ends"});
    }
  }
  return report;
}

PropertyReport check_properties(const Multigraph& g) {
  require_valid(g);
  PropertyReport r;
  const auto inc = incidence(g);
  auto sign_of = [&](VertexId id) { return static_cast<std::int64_t>(to_int(g.find_vertex(id)->sign)); };

  for (const auto& v : g.vertices) {
    const auto& ie = inc.at(v.id);
    const auto l1 = g.edges[ie[0]].label, l2 = g.edges[ie[1]].label;
    if (std::gcd(l1, l2) != 1) {
      r.effective = {false, vname(v.id) + ": labels " + std::to_string(l1) + "," + std::to_string(l2) +
                                " are not coprime"};
      break;
    }
  }

  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const Edge& ed = g.edges[e];
    const auto w1 = g.edges[other_edge(inc.at(ed.u), e)].label;
    const auto w2 = g.edges[other_edge(inc.at(ed.v), e)].label;
    const auto s1 = sign_of(ed.u), s2 = sign_of(ed.v);
    if ((s1 * w1 + s2 * w2) % ed.label != 0) {
      r.equal_modulo = {false, edge_name(g, e) + ": " + std::to_string(-s1 * w1) + " != " +
                                   std::to_string(s2 * w2) + " mod " + std::to_string(ed.label)};
      break;
    }
  }

  if (!g.edges.empty()) {
    const auto min_label =
        std::min_element(g.edges.begin(), g.edges.end(), [](const Edge& x, const Edge& y) { return x.label < y.label; })
            ->label;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      const Edge& ed = g.edges[e];
      if (ed.label == min_label && sign_of(ed.u) == sign_of(ed.v)) {
        r.minimal = {false, edge_name(g, e) + " has the smallest label but joins equal signs"};
        break;
      }
    }
  }
  return r;
}

Multigraph graph_of(const ConstructionTrace& trace) {
  try {
    replay(trace);
  } catch (const Error& e) {
    throw Error(ErrorCode::TraceInvalid, e.message(), e.index());
  }

  std::vector<Vertex> created;
  std::vector<bool> alive;
  std::vector<Edge> edges;
  auto new_vertex = [&](Sign s) {
    created.push_back({static_cast<VertexId>(created.size()), s});
    alive.push_back(true);
    return created.back().id;
  };

  for (std::size_t i = 0; i < trace.size(); ++i) {
    const ConstructionStep& step = trace[i];
    if (step.kind == ConstructionStep::Kind::AddSphere) {
      const VertexId plus = new_vertex(Sign::Plus);
      const VertexId minus = new_vertex(Sign::Minus);
      edges.push_back({plus, minus, step.a});
      edges.push_back({plus, minus, step.b});
      continue;
    }
    // Lowest live vertex with matching sign and labels.
    std::optional<VertexId> target;
    std::size_t ea = 0, eb = 0;
    for (const auto& v : created) {
      if (!alive[static_cast<std::size_t>(v.id)] || v.sign != step.sign) continue;
      std::vector<std::size_t> ie;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].u == v.id || edges[e].v == v.id) ie.push_back(e);
      }
      if (ie.size() != 2) continue;
      std::int64_t l0 = edges[ie[0]].label, l1 = edges[ie[1]].label;
      if (l0 == step.a && l1 == step.b) {
        ea = ie[0], eb = ie[1];
      } else if (l0 == step.b && l1 == step.a) {
        ea = ie[1], eb = ie[0];
      } else {
        continue;
      }
      target = v.id;
      break;
    }
    if (!target) throw Error(ErrorCode::TraceInvalid, "no vertex for " + step.to_string(), i);

    alive[static_cast<std::size_t>(*target)] = false;
    const VertexId v1 = new_vertex(step.sign);
    const VertexId v2 = new_vertex(step.sign);
    auto reattach = [&](Edge& ed, VertexId to) { (ed.u == *target ? ed.u : ed.v) = to; };
    reattach(edges[ea], v1);
    reattach(edges[eb], v2);
    edges.push_back({v1, v2, static_cast<std::int64_t>(step.a) + step.b});
  }

  std::vector<VertexId> renumber(created.size(), -1);
  Multigraph g;
  for (const auto& v : created) {
    if (!alive[static_cast<std::size_t>(v.id)]) continue;
    renumber[static_cast<std::size_t>(v.id)] = static_cast<VertexId>(g.vertices.size());
    g.vertices.push_back({static_cast<VertexId>(g.vertices.size()), v.sign});
  }
  for (const auto& ed : edges) {
    g.edges.push_back({renumber[static_cast<std::size_t>(ed.u)], renumber[static_cast<std::size_t>(ed.v)], ed.label});
  }
  return g;
}

FixedPointData data_of(const Multigraph& g) {
  require_valid(g);
  const auto inc = incidence(g);
  std::vector<FixedPointDatum> points;
  points.reserve(g.vertices.size());
  for (const auto& v : g.vertices) {
    std::vector<Weight> ws;
    for (std::size_t e : inc.at(v.id)) {
      if (g.edges[e].label > std::numeric_limits<Weight>::max()) {
        throw Error(ErrorCode::Overflow, edge_name(g, e) + " label exceeds the weight range");
      }
      ws.push_back(static_cast<Weight>(g.edges[e].label));
    }
    points.emplace_back(v.sign, std::move(ws));
  }
  return FixedPointData(std::move(points));
}

Realization realize(const Multigraph& g) {
  Realization result;
  result.properties = check_properties(g);
  if (!result.properties.all_passed()) return result;

  const FixedPointData data = data_of(g);
  Decision d = decide(data);
  if (!d.realizable) {
    throw Error(ErrorCode::InternalInconsistency,
                "graph satisfies every property but its data " + data.to_string() + " was rejected (" +
                    d.obstruction->check + ")");
  }
  result.trace = std::move(d.trace);
  return result;
}

std::string to_dot(const Multigraph& g) {
  if (g.vertices.empty() && g.edges.empty()) return "graph G { }\n";
  auto node = [](VertexId id) {
    return id < 0 ? "\"" + vname(id) + "\"" : vname(id);
  };
  std::vector<Vertex> vs = g.vertices;
  std::sort(vs.begin(), vs.end(), [](const Vertex& x, const Vertex& y) { return x.id < y.id; });
  std::vector<Edge> es = g.edges;
  for (auto& e : es) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(es.begin(), es.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.u, x.v, x.label) < std::tie(y.u, y.v, y.label); });

  std::string out = "graph G {\n";
  for (const auto& v : vs) {
    out += "  " + node(v.id) + " [label=\"" + vname(v.id) + " [" + to_char(v.sign) + "]\"];\n";
  }
  for (const auto& e : es) {
    out += "  " + node(e.u) + " -- " + node(e.v) + " [label=\"" + std::to_string(e.label) + "\"];\n";
  }
  out += "}\n";
  return out;
}

Json to_json(const Multigraph& g) {
  Json vs = Json::array();
  for (const auto& v : g.vertices) vs.push_back(Json{{"id", v.id}, {"sign", to_int(v.sign)}});
  Json es = Json::array();
  for (const auto& e : g.edges) es.push_back(Json{{"u", e.u}, {"v", e.v}, {"label", e.label}});
  return Json{{"vertices", std::move(vs)}, {"edges", std::move(es)}};
}

Multigraph graph_from_json(const Json& json) {
  if (!json.is_object() || !json.contains("vertices") || !json.contains("edges") ||
      !json.at("vertices").is_array() || !json.at("edges").is_array()) {
    throw Error(ErrorCode::Malformed, "expected {\"vertices\":[..],\"edges\":[..]}", std::nullopt, "/");
  }
  auto integer = [](const Json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_number_integer()) {
      throw Error(ErrorCode::Malformed, std::string("missing integer \"") + key + "\"", std::nullopt, where);
    }
    return obj.at(key).get<std::int64_t>();
  };
  Multigraph g;
  const Json& vs = json.at("vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "/vertices/" + std::to_string(i);
    const VertexId id = integer(vs[i], "id", where);
    const auto s = integer(vs[i], "sign", where);
    if (s != 1 && s != -1) throw Error(ErrorCode::BadSign, "sign must be +1 or -1", i, where + "/sign");
    g.vertices.push_back({id, sign_from_int(s)});
  }
  const Json& es = json.at("edges");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string where = "/edges/" + std::to_string(i);
    g.edges.push_back({integer(es[i], "u", where), integer(es[i], "v", where), integer(es[i], "label", where)});
  }
  return g;
}

std::string serialize(const Multigraph& g) { return to_json(g).dump(); }

Multigraph parse_graph(std::string_view text) { return graph_from_json(parse_json_text(text)); }

}  // namespace s1fix
