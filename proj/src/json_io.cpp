#include "starcol/json_io.hpp"

namespace starcol {

namespace {

using nlohmann::json;

int get_int(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
    throw InputError(std::string("json: missing integer field '") + key + "'");
  return j[key].get<int>();
}

std::vector<Edge> get_edge_list(const json& j, const char* key, int n) {
  if (!j.contains(key) || !j[key].is_array())
    throw InputError(std::string("json: missing array field '") + key + "'");
  std::vector<Edge> out;
  for (const auto& e : j[key]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw InputError(std::string("json: '") + key + "' entries must be [u,v] pairs");
    int u = e[0].get<int>(), v = e[1].get<int>();
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw InputError(std::string("json: '") + key + "' endpoint out of range");
    out.emplace_back(u, v);
  }
  return out;
}

json edge_to_json(Edge e) { return json::array({e.first, e.second}); }

}  // namespace

json to_json(const SimpleGraph& g) {
  json j;
  j["n"] = g.n;
  json edges = json::array();
  for (Edge e : g.edges()) edges.push_back(edge_to_json(e));
  j["edges"] = std::move(edges);
  return j;
}

json to_json(const StarColouring& c) {
  json j;
  j["n"] = c.n;
  json classes = json::array();
  for (const auto& cls : c.classes) {
    json jc = json::array();
    for (Edge e : cls) jc.push_back(edge_to_json(e));
    classes.push_back(std::move(jc));
  }
  j["classes"] = std::move(classes);
  return j;
}

json to_json(const Tournament& t) {
  json j;
  j["n"] = t.n;
  json arcs = json::array();
  for (int v = 0; v < t.n; ++v)
    for (int u = 0; u < v; ++u) {
      if (t.arc(u, v))
        arcs.push_back(json::array({u, v}));
      else
        arcs.push_back(json::array({v, u}));
    }
  j["arcs"] = std::move(arcs);
  return j;
}

json to_json(const RainbowCertificate& cert) {
  json j;
  j["pattern"] = to_json(cert.pattern);
  j["vertex_map"] = cert.vertex_map;
  j["edge_colours"] = cert.edge_colours;
  return j;
}

SimpleGraph graph_from_json(const json& j) {
  int n = get_int(j, "n");
  if (n < 0 || n > 31) throw InputError("json: graph order out of range");
  SimpleGraph g(n);
  for (Edge e : get_edge_list(j, "edges", n)) {
    if (g.has_edge(e.first, e.second)) throw InputError("json: duplicate edge");
    g.add_edge(e.first, e.second);
  }
  return g;
}

StarColouring colouring_from_json(const json& j) {
  int n = get_int(j, "n");
  if (n < 0 || n > 31) throw InputError("json: colouring order out of range");
  if (!j.contains("classes") || !j["classes"].is_array())
    throw InputError("json: missing array field 'classes'");
  StarColouring c;
  c.n = n;
  for (const auto& jc : j["classes"]) {
    if (!jc.is_array()) throw InputError("json: class must be an edge array");
    std::vector<Edge> cls;
    for (const auto& e : jc) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw InputError("json: class entries must be [u,v] pairs");
      int u = e[0].get<int>(), v = e[1].get<int>();
      if (u < 0 || v < 0 || u >= n || v >= n || u == v)
        throw InputError("json: class edge endpoint out of range");
      cls.push_back(mk_edge(u, v));
    }
    c.classes.push_back(std::move(cls));
  }
  return c;
}

Tournament tournament_from_json(const json& j) {
  int n = get_int(j, "n");
  if (n < 0 || n > 31) throw InputError("json: tournament order out of range");
  if (!j.contains("arcs") || !j["arcs"].is_array())
    throw InputError("json: missing array field 'arcs'");
  Tournament t(n);
  std::vector<bool> seen(num_edges(n), false);
  for (const auto& a : j["arcs"]) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
      throw InputError("json: 'arcs' entries must be [from,to] pairs");
    int u = a[0].get<int>(), v = a[1].get<int>();
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw InputError("json: arc endpoint out of range");
    int id = edge_id(std::min(u, v), std::max(u, v));
    if (seen[id]) throw InputError("json: pair oriented twice");
    seen[id] = true;
    t.set_arc(u, v);
  }
  for (int id = 0; id < num_edges(n); ++id)
    if (!seen[id]) throw InputError("json: tournament is missing an arc");
  return t;
}

RainbowCertificate certificate_from_json(const json& j) {
  if (!j.is_object() || !j.contains("pattern")) throw InputError("json: missing field 'pattern'");
  RainbowCertificate cert;
  cert.pattern = graph_from_json(j["pattern"]);
  if (!j.contains("vertex_map") || !j["vertex_map"].is_array())
    throw InputError("json: missing array field 'vertex_map'");
  if (!j.contains("edge_colours") || !j["edge_colours"].is_array())
    throw InputError("json: missing array field 'edge_colours'");
  for (const auto& x : j["vertex_map"]) {
    if (!x.is_number_integer()) throw InputError("json: vertex_map entries must be integers");
    cert.vertex_map.push_back(x.get<int>());
  }
  for (const auto& x : j["edge_colours"]) {
    if (!x.is_number_integer()) throw InputError("json: edge_colours entries must be integers");
    cert.edge_colours.push_back(x.get<int>());
  }
  return cert;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace starcol
