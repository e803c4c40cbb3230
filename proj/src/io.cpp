#include "hyperkit/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace hyperkit {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kKindNames[] = {"hypergraph", "directed_hypergraph",
                                      "multilayer_hypergraph"};

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

// ---- serialization -------------------------------------------------------

json edge_to_json(const Edge& e) { return json(e); }

// Emits the fields shared by plain hypergraphs and multilayer layers.
// Optional blocks (weights, attrs) appear only when non-empty, as aligned
// arrays with null for untouched entries.
void emit_base(json& out, const Hypergraph& h) {
  const std::vector<VertexId> order = h.vertex_list();
  out["vertices"] = json(order);
  json edges = json::array();
  for (const Edge& e : h.edges()) edges.push_back(edge_to_json(e));
  out["edges"] = std::move(edges);

  if (!h.vertex_weights().empty()) {
    json arr = json::array();
    for (VertexId v : order) {
      auto w = h.vertex_weight(v);
      arr.push_back(w ? json(*w) : json(nullptr));
    }
    out["vertex_weights"] = std::move(arr);
  }
  if (!h.edge_weights().empty()) {
    json arr = json::array();
    for (const Edge& e : h.edges()) {
      auto w = h.edge_weight(e);
      arr.push_back(w ? json(*w) : json(nullptr));
    }
    out["edge_weights"] = std::move(arr);
  }
  if (!h.vertex_attrs().empty()) {
    json arr = json::array();
    for (VertexId v : order) {
      auto it = h.vertex_attrs().find(v);
      arr.push_back(it == h.vertex_attrs().end() ? json(nullptr) : json(it->second));
    }
    out["vertex_attrs"] = std::move(arr);
  }
  if (!h.edge_attrs().empty()) {
    json arr = json::array();
    for (const Edge& e : h.edges()) {
      auto it = h.edge_attrs().find(e);
      arr.push_back(it == h.edge_attrs().end() ? json(nullptr) : json(it->second));
    }
    out["edge_attrs"] = std::move(arr);
  }
}

json document_to_json(const HypergraphDocument& doc) {
  json out = json::object();
  out["format_version"] = doc.format_version;
  out["kind"] = kKindNames[static_cast<std::size_t>(doc.kind())];

  switch (doc.kind()) {
    case GraphKind::undirected:
      emit_base(out, std::get<Hypergraph>(doc.graph));
      break;
    case GraphKind::directed: {
      const auto& h = std::get<DirectedHypergraph>(doc.graph);
      emit_base(out, h);
      json pairs = json::array();
      for (const auto& [tail, head] : h.directed_edges()) {
        json p = json::object();
        p["tail"] = edge_to_json(tail);
        p["head"] = edge_to_json(head);
        pairs.push_back(std::move(p));
      }
      out["directed_edges"] = std::move(pairs);
      break;
    }
    case GraphKind::multilayer: {
      const auto& m = std::get<MultilayerHypergraph>(doc.graph);
      json layers = json::array();
      for (const Hypergraph& layer : m.layers()) {
        json l = json::object();
        emit_base(l, layer);
        layers.push_back(std::move(l));
      }
      out["layers"] = std::move(layers);
      json links = json::array();
      for (const auto& link : m.interlinks()) {
        links.push_back(json::array({json::array({link.first.layer, link.first.vertex}),
                                     json::array({link.second.layer, link.second.vertex})}));
      }
      out["interlinks"] = std::move(links);
      break;
    }
  }

  for (const auto& [key, value] : doc.extra_fields.items()) out[key] = value;
  return out;
}

// ---- parsing -------------------------------------------------------------

[[noreturn]] void schema_fail(const std::string& what) { throw SchemaError(what); }

VertexId parse_vertex_id(const json& j, const std::string& where) {
  if (!j.is_number_unsigned() ||
      j.get<std::uint64_t>() > std::numeric_limits<VertexId>::max()) {
    schema_fail(where + " must be a non-negative integer vertex id, got " + j.dump());
  }
  return static_cast<VertexId>(j.get<std::uint64_t>());
}

std::vector<VertexId> parse_member_list(const json& j, const std::string& where) {
  if (!j.is_array()) schema_fail(where + " must be an array of vertex ids");
  if (j.empty()) schema_fail(where + " must contain at least one vertex");
  std::vector<VertexId> members;
  members.reserve(j.size());
  for (const json& item : j) members.push_back(parse_vertex_id(item, where + " member"));
  return members;
}

const json& require_field(const json& doc, const std::string& key, const std::string& where) {
  auto it = doc.find(key);
  if (it == doc.end()) schema_fail(where + " is missing required field '" + key + "'");
  return *it;
}

// Reads vertices/edges and the aligned metadata arrays into `h` (which may be
// the base subobject of a DirectedHypergraph).
void parse_base(const json& doc, Hypergraph& h, const std::string& where) {
  const json& vertices = require_field(doc, "vertices", where);
  if (!vertices.is_array()) schema_fail(where + ".vertices must be an array");
  for (const json& item : vertices) {
    if (!h.add_vertex(parse_vertex_id(item, where + ".vertices entry"))) {
      schema_fail(where + ".vertices contains a duplicate id " + item.dump());
    }
  }

  const json& edges = require_field(doc, "edges", where);
  if (!edges.is_array()) schema_fail(where + ".edges must be an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string at = where + ".edges[" + std::to_string(i) + "]";
    std::vector<VertexId> members = parse_member_list(edges[i], at);
    for (VertexId v : members) {
      if (!h.has_vertex(v)) {
        schema_fail(at + " references unknown vertex " + std::to_string(v));
      }
    }
    if (!h.add_edge(std::move(members))) schema_fail(at + " duplicates an earlier edge");
  }

  const std::vector<VertexId> order = h.vertex_list();
  const std::vector<Edge>& edge_order = h.edges();

  auto parse_weight_array = [&](const char* key, std::size_t expected, auto&& apply) {
    auto it = doc.find(key);
    if (it == doc.end()) return;
    if (!it->is_array() || it->size() != expected) {
      schema_fail(where + "." + key + " must be an array of length " +
                  std::to_string(expected) + " aligned with the canonical order");
    }
    for (std::size_t i = 0; i < expected; ++i) {
      const json& entry = (*it)[i];
      if (entry.is_null()) continue;
      if (!entry.is_number()) {
        schema_fail(where + "." + key + "[" + std::to_string(i) + "] must be a number or null");
      }
      apply(i, entry.get<double>());
    }
  };
  parse_weight_array("vertex_weights", order.size(),
                     [&](std::size_t i, double w) { h.set_vertex_weight(order[i], w); });
  parse_weight_array("edge_weights", edge_order.size(),
                     [&](std::size_t i, double w) { h.set_edge_weight(edge_order[i], w); });

  auto parse_attr_array = [&](const char* key, std::size_t expected, auto&& apply) {
    auto it = doc.find(key);
    if (it == doc.end()) return;
    if (!it->is_array() || it->size() != expected) {
      schema_fail(where + "." + key + " must be an array of length " +
                  std::to_string(expected) + " aligned with the canonical order");
    }
    for (std::size_t i = 0; i < expected; ++i) {
      const json& entry = (*it)[i];
      if (entry.is_null()) continue;
      if (!entry.is_object()) {
        schema_fail(where + "." + key + "[" + std::to_string(i) +
                    "] must be an object of string values or null");
      }
      for (const auto& [k, v] : entry.items()) {
        if (!v.is_string()) {
          schema_fail(where + "." + key + "[" + std::to_string(i) + "]." + k +
                      " must be a string");
        }
        apply(i, k, v.template get<std::string>());
      }
    }
  };
  parse_attr_array("vertex_attrs", order.size(),
                   [&](std::size_t i, const std::string& k, const std::string& v) {
                     h.set_vertex_attr(order[i], k, v);
                   });
  parse_attr_array("edge_attrs", edge_order.size(),
                   [&](std::size_t i, const std::string& k, const std::string& v) {
                     h.set_edge_attr(edge_order[i], k, v);
                   });
}

const char* const kBaseKeys[] = {"vertices", "edges", "vertex_weights",
                                 "edge_weights", "vertex_attrs", "edge_attrs"};

bool is_known_key(GraphKind kind, const std::string& key) {
  if (key == "format_version" || key == "kind") return true;
  if (kind == GraphKind::multilayer) return key == "layers" || key == "interlinks";
  for (const char* base : kBaseKeys) {
    if (key == base) return true;
  }
  return kind == GraphKind::directed && key == "directed_edges";
}

HypergraphDocument json_to_document(const json& j) {
  if (!j.is_object()) schema_fail("document root must be a JSON object");

  HypergraphDocument doc;
  const json& version = require_field(j, "format_version", "document");
  if (!version.is_string()) schema_fail("format_version must be a string");
  doc.format_version = version.get<std::string>();
  const std::string major = doc.format_version.substr(0, doc.format_version.find('.'));
  if (major != "1") {
    schema_fail("unsupported format_version '" + doc.format_version + "', expected 1.x");
  }

  const json& kind = require_field(j, "kind", "document");
  if (!kind.is_string()) schema_fail("kind must be a string");
  const std::string kind_name = kind.get<std::string>();

  if (kind_name == kKindNames[0]) {
    Hypergraph h;
    parse_base(j, h, "document");
    doc.graph = std::move(h);
  } else if (kind_name == kKindNames[1]) {
    DirectedHypergraph h;
    parse_base(j, h, "document");
    const json& pairs = require_field(j, "directed_edges", "document");
    if (!pairs.is_array()) schema_fail("directed_edges must be an array");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const std::string at = "directed_edges[" + std::to_string(i) + "]";
      const json& p = pairs[i];
      if (!p.is_object()) schema_fail(at + " must be an object with tail and head");
      std::vector<VertexId> tail = parse_member_list(require_field(p, "tail", at), at + ".tail");
      std::vector<VertexId> head = parse_member_list(require_field(p, "head", at), at + ".head");
      for (VertexId v : tail) {
        if (!h.has_vertex(v)) schema_fail(at + " references unknown vertex " + std::to_string(v));
      }
      for (VertexId v : head) {
        if (!h.has_vertex(v)) schema_fail(at + " references unknown vertex " + std::to_string(v));
      }
      if (!h.add_directed_edge(std::move(tail), std::move(head))) {
        schema_fail(at + " duplicates an earlier directed edge");
      }
    }
    doc.graph = std::move(h);
  } else if (kind_name == kKindNames[2]) {
    MultilayerHypergraph m;
    const json& layers = require_field(j, "layers", "document");
    if (!layers.is_array()) schema_fail("layers must be an array");
    for (std::size_t i = 0; i < layers.size(); ++i) {
      const std::string at = "layers[" + std::to_string(i) + "]";
      if (!layers[i].is_object()) schema_fail(at + " must be an object");
      Hypergraph layer;
      parse_base(layers[i], layer, at);
      m.add_layer(std::move(layer));
    }
    const json& links = require_field(j, "interlinks", "document");
    if (!links.is_array()) schema_fail("interlinks must be an array");
    for (std::size_t i = 0; i < links.size(); ++i) {
      const std::string at = "interlinks[" + std::to_string(i) + "]";
      const json& link = links[i];
      if (!link.is_array() || link.size() != 2) {
        schema_fail(at + " must be a pair of [layer, vertex] endpoints");
      }
      MultilayerHypergraph::Endpoint ends[2];
      for (int side = 0; side < 2; ++side) {
        const json& ep = link[side];
        if (!ep.is_array() || ep.size() != 2 || !ep[0].is_number_unsigned()) {
          schema_fail(at + " endpoints must be [layer, vertex] index pairs");
        }
        ends[side].layer = ep[0].get<std::size_t>();
        ends[side].vertex = parse_vertex_id(ep[1], at + " vertex");
      }
      try {
        m.add_interlink(ends[0], ends[1]);
      } catch (const Error& e) {
        schema_fail(at + ": " + e.what());
      }
    }
    doc.graph = std::move(m);
  } else {
    schema_fail("unknown kind '" + kind_name +
                "', expected hypergraph, directed_hypergraph, or multilayer_hypergraph");
  }

  const GraphKind parsed_kind = doc.kind();
  for (const auto& [key, value] : j.items()) {
    if (!is_known_key(parsed_kind, key)) doc.extra_fields[key] = value;
  }
  return doc;
}

// ---- file helpers --------------------------------------------------------

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed while writing '" + path.string() + "'");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed while reading '" + path.string() + "'");
  return buffer.str();
}

}  // namespace

HypergraphDocument HypergraphDocument::wrap(Hypergraph h) {
  HypergraphDocument doc;
  doc.graph = std::move(h);
  return doc;
}

HypergraphDocument HypergraphDocument::wrap(DirectedHypergraph h) {
  HypergraphDocument doc;
  doc.graph = std::move(h);
  return doc;
}

HypergraphDocument HypergraphDocument::wrap(MultilayerHypergraph h) {
  HypergraphDocument doc;
  doc.graph = std::move(h);
  return doc;
}

const Hypergraph& HypergraphDocument::base() const {
  switch (kind()) {
    case GraphKind::undirected:
      return std::get<Hypergraph>(graph);
    case GraphKind::directed:
      return std::get<DirectedHypergraph>(graph);
    case GraphKind::multilayer:
      break;
  }
  throw SchemaError("a single-layer hypergraph is required but the document is multilayer");
}

std::string serialize_document(const HypergraphDocument& doc) {
  return document_to_json(doc).dump(2) + "\n";
}

HypergraphDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  return json_to_document(j);
}

void save_document(const std::filesystem::path& path, const HypergraphDocument& doc) {
  write_text(path, serialize_document(doc));
}

HypergraphDocument load_document(const std::filesystem::path& path) {
  return parse_document(read_text(path));
}

void save_hypergraph(const std::filesystem::path& path, const Hypergraph& h) {
  save_document(path, HypergraphDocument::wrap(h));
}

Hypergraph load_hypergraph(const std::filesystem::path& path) {
  HypergraphDocument doc = load_document(path);
  return doc.base();  // copies; throws SchemaError for multilayer documents
}

std::string bipartite_text(const Hypergraph& h) {
  std::string out;
  const std::vector<Edge>& edges = h.edges();
  for (std::size_t m = 0; m < edges.size(); ++m) {
    for (VertexId v : edges[m]) {
      out += std::to_string(v);
      out += '\t';
      out += 'e';
      out += std::to_string(m);
      out += '\n';
    }
  }
  return out;
}

void export_bipartite(const Hypergraph& h, const std::filesystem::path& path) {
  write_text(path, bipartite_text(h));
}

std::string incidence_csv_text(const Hypergraph& h) {
  std::string out = "vertex";
  const std::size_t m = h.edge_count();
  for (std::size_t j = 0; j < m; ++j) out += ",e" + std::to_string(j);
  out += '\n';

  std::vector<std::vector<char>> rows(h.vertex_count(), std::vector<char>(m, 0));
  const std::vector<VertexId> order = h.vertex_list();
  for (std::size_t j = 0; j < m; ++j) {
    for (VertexId v : h.edges()[j]) rows[h.vertex_index(v)][j] = 1;
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    out += std::to_string(order[i]);
    for (std::size_t j = 0; j < m; ++j) {
      out += ',';
      out += rows[i][j] ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

void export_incidence_csv(const Hypergraph& h, const std::filesystem::path& path) {
  write_text(path, incidence_csv_text(h));
}

std::string trajectory_csv_text(const SirTrajectory& t) {
  std::string out = "step,S,I,R\n";
  for (const auto& row : t.rows) {
    out += std::to_string(row.step) + ',' + std::to_string(row.susceptible) + ',' +
           std::to_string(row.infected) + ',' + std::to_string(row.recovered) + '\n';
  }
  return out;
}

std::string trajectory_csv_text(const SchellingTrajectory& t) {
  std::string out = "step,mean_G,moves\n";
  for (const auto& row : t.rows) {
    out += std::to_string(row.step) + ',' + format_double(row.mean_coefficient) + ',' +
           std::to_string(row.moves) + '\n';
  }
  return out;
}

void export_trajectory_csv(const SirTrajectory& t, const std::filesystem::path& path) {
  write_text(path, trajectory_csv_text(t));
}

void export_trajectory_csv(const SchellingTrajectory& t, const std::filesystem::path& path) {
  write_text(path, trajectory_csv_text(t));
}

}  // namespace hyperkit
