#include "hyperkit/hypergraph.hpp"

#include <algorithm>

namespace hyperkit {

Edge canonical_edge(std::vector<VertexId> members) {
  if (members.empty()) {
    throw EmptyEdgeError();
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

bool Hypergraph::add_vertex(VertexId v) { return vertices_.insert(v).second; }

bool Hypergraph::remove_vertex(VertexId v) {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) {
    return false;
  }
  // Drop every edge containing v before the vertex itself goes away.
  std::vector<Edge> incident;
  for (const Edge& e : edges_) {
    if (std::binary_search(e.begin(), e.end(), v)) {
      incident.push_back(e);
    }
  }
  for (const Edge& e : incident) {
    remove_edge(e);
  }
  vertices_.erase(it);
  vertex_weights_.erase(v);
  vertex_attrs_.erase(v);
  return true;
}

bool Hypergraph::add_edge(std::vector<VertexId> members) {
  Edge edge = canonical_edge(std::move(members));
  for (VertexId v : edge) {
    vertices_.insert(v);
  }
  auto [it, inserted] = edge_pos_.emplace(edge, edges_.size());
  if (inserted) {
    edges_.push_back(std::move(edge));
  }
  return inserted;
}

bool Hypergraph::remove_edge(const std::vector<VertexId>& members) {
  if (members.empty()) {
    return false;
  }
  Edge edge = canonical_edge(members);
  auto it = edge_pos_.find(edge);
  if (it == edge_pos_.end()) {
    return false;
  }
  const std::size_t pos = it->second;
  edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(pos));
  edge_pos_.erase(it);
  for (auto& [e, p] : edge_pos_) {
    if (p > pos) {
      --p;
    }
  }
  edge_weights_.erase(edge);
  edge_attrs_.erase(edge);
  return true;
}

bool Hypergraph::has_edge(const std::vector<VertexId>& members) const {
  if (members.empty()) {
    return false;
  }
  return edge_pos_.count(canonical_edge(members)) > 0;
}

std::size_t Hypergraph::degree(VertexId v) const {
  if (!has_vertex(v)) {
    throw UnknownVertexError(v);
  }
  std::size_t count = 0;
  for (const Edge& e : edges_) {
    if (std::binary_search(e.begin(), e.end(), v)) {
      ++count;
    }
  }
  return count;
}

std::vector<VertexId> Hypergraph::vertex_list() const {
  return {vertices_.begin(), vertices_.end()};
}

std::size_t Hypergraph::vertex_index(VertexId v) const {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) {
    throw UnknownVertexError(v);
  }
  return static_cast<std::size_t>(std::distance(vertices_.begin(), it));
}

void Hypergraph::set_vertex_weight(VertexId v, double w) {
  if (!has_vertex(v)) {
    throw UnknownVertexError(v);
  }
  vertex_weights_[v] = w;
}

void Hypergraph::set_edge_weight(const std::vector<VertexId>& members, double w) {
  Edge edge = canonical_edge(members);
  if (edge_pos_.count(edge) == 0) {
    throw UnknownEdgeError();
  }
  edge_weights_[edge] = w;
}

std::optional<double> Hypergraph::vertex_weight(VertexId v) const {
  auto it = vertex_weights_.find(v);
  if (it == vertex_weights_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<double> Hypergraph::edge_weight(const std::vector<VertexId>& members) const {
  auto it = edge_weights_.find(canonical_edge(members));
  if (it == edge_weights_.end()) {
    return std::nullopt;
  }
  return it->second;
}

void Hypergraph::set_vertex_attr(VertexId v, const std::string& key, const std::string& value) {
  if (!has_vertex(v)) {
    throw UnknownVertexError(v);
  }
  vertex_attrs_[v][key] = value;
}

void Hypergraph::set_edge_attr(const std::vector<VertexId>& members, const std::string& key,
                               const std::string& value) {
  Edge edge = canonical_edge(members);
  if (edge_pos_.count(edge) == 0) {
    throw UnknownEdgeError();
  }
  edge_attrs_[edge][key] = value;
}

bool operator==(const Hypergraph& a, const Hypergraph& b) {
  if (a.vertices_ != b.vertices_) return false;
  if (a.edge_pos_.size() != b.edge_pos_.size()) return false;
  // edge_pos_ keys are the edge family in sorted order; positions are ignored
  // so that insertion order does not affect equality.
  auto ita = a.edge_pos_.begin();
  auto itb = b.edge_pos_.begin();
  for (; ita != a.edge_pos_.end(); ++ita, ++itb) {
    if (ita->first != itb->first) return false;
  }
  return a.vertex_weights_ == b.vertex_weights_ && a.edge_weights_ == b.edge_weights_ &&
         a.vertex_attrs_ == b.vertex_attrs_ && a.edge_attrs_ == b.edge_attrs_;
}

bool DirectedHypergraph::add_directed_edge(std::vector<VertexId> tail,
                                           std::vector<VertexId> head) {
  Edge t = canonical_edge(std::move(tail));
  Edge h = canonical_edge(std::move(head));
  Edge both = t;
  both.insert(both.end(), h.begin(), h.end());
  add_edge(std::move(both));  // adds vertices and the undirected view
  return directed_.emplace(std::move(t), std::move(h)).second;
}

bool operator==(const DirectedHypergraph& a, const DirectedHypergraph& b) {
  return static_cast<const Hypergraph&>(a) == static_cast<const Hypergraph&>(b) &&
         a.directed_ == b.directed_;
}

std::size_t MultilayerHypergraph::add_layer(Hypergraph layer) {
  layers_.push_back(std::move(layer));
  return layers_.size() - 1;
}

void MultilayerHypergraph::add_interlink(Endpoint a, Endpoint b) {
  for (const Endpoint& ep : {a, b}) {
    if (ep.layer >= layers_.size()) {
      throw UnknownLayerError(ep.layer);
    }
    if (!layers_[ep.layer].has_vertex(ep.vertex)) {
      throw UnknownVertexError(ep.vertex);
    }
  }
  if (a.layer == b.layer) {
    throw InvalidInterlinkError("interlink endpoints must live in different layers");
  }
  interlinks_.push_back(Interlink{a, b});
}

const Hypergraph& MultilayerHypergraph::layer(std::size_t index) const {
  if (index >= layers_.size()) {
    throw UnknownLayerError(index);
  }
  return layers_[index];
}

Hypergraph& MultilayerHypergraph::layer(std::size_t index) {
  if (index >= layers_.size()) {
    throw UnknownLayerError(index);
  }
  return layers_[index];
}

}  // namespace hyperkit
