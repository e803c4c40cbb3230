#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hyperkit/errors.hpp"

namespace hyperkit {

/// Dense non-negative vertex identifier. Unique within one hypergraph.
using VertexId = std::uint32_t;

/// A hyperedge in canonical form: sorted, duplicate-free member list.
using Edge = std::vector<VertexId>;

using AttrMap = std::map<std::string, std::string>;

/// Sorts and dedups a member list. Throws EmptyEdgeError on empty input.
Edge canonical_edge(std::vector<VertexId> members);

/// Undirected hypergraph: a vertex set plus a family of vertex subsets.
///
/// The edge family has set semantics (no duplicates, no empty edge) but the
/// insertion order of edges is remembered; it defines the column order of the
/// incidence matrix and of every serialized form. Vertex order is always
/// ascending id. Weights and attributes are stored but take no part in any
/// structural computation; they only round-trip through serialization.
///
/// Instances are single-writer. All const member functions are safe to call
/// concurrently on a frozen instance (there are no lazily filled caches).
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Inserts a vertex; returns false if it was already present.
  bool add_vertex(VertexId v);

  /// Removes a vertex together with every edge containing it.
  /// Returns false if the vertex was not present.
  bool remove_vertex(VertexId v);

  /// Inserts an edge; members absent from the vertex set are added.
  /// Returns false if the edge was already present.
  /// Throws EmptyEdgeError when `members` is empty.
  bool add_edge(std::vector<VertexId> members);

  /// Removes an edge; removing a non-existent edge is a no-op (returns false).
  /// Vertices are untouched.
  bool remove_edge(const std::vector<VertexId>& members);

  bool has_vertex(VertexId v) const { return vertices_.count(v) > 0; }
  bool has_edge(const std::vector<VertexId>& members) const;

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return vertices_.empty(); }

  /// Number of hyperedges containing v. Throws UnknownVertexError.
  std::size_t degree(VertexId v) const;

  const std::set<VertexId>& vertices() const { return vertices_; }

  /// Edge family in insertion order (the canonical column order).
  const std::vector<Edge>& edges() const { return edges_; }

  /// Vertices in ascending order (the canonical row order).
  std::vector<VertexId> vertex_list() const;

  /// Position of v in the canonical row order. Throws UnknownVertexError.
  std::size_t vertex_index(VertexId v) const;

  // Inert metadata. Setters require the vertex/edge to exist.
  void set_vertex_weight(VertexId v, double w);
  void set_edge_weight(const std::vector<VertexId>& members, double w);
  std::optional<double> vertex_weight(VertexId v) const;
  std::optional<double> edge_weight(const std::vector<VertexId>& members) const;
  const std::map<VertexId, double>& vertex_weights() const { return vertex_weights_; }
  const std::map<Edge, double>& edge_weights() const { return edge_weights_; }

  void set_vertex_attr(VertexId v, const std::string& key, const std::string& value);
  void set_edge_attr(const std::vector<VertexId>& members, const std::string& key,
                     const std::string& value);
  const std::map<VertexId, AttrMap>& vertex_attrs() const { return vertex_attrs_; }
  const std::map<Edge, AttrMap>& edge_attrs() const { return edge_attrs_; }

  /// Structural equality: same vertices, same edge family (order ignored),
  /// same weights and attributes.
  friend bool operator==(const Hypergraph& a, const Hypergraph& b);
  friend bool operator!=(const Hypergraph& a, const Hypergraph& b) { return !(a == b); }

 private:
  std::set<VertexId> vertices_;
  std::vector<Edge> edges_;               // insertion order
  std::map<Edge, std::size_t> edge_pos_;  // canonical edge -> index into edges_
  std::map<VertexId, double> vertex_weights_;
  std::map<Edge, double> edge_weights_;
  std::map<VertexId, AttrMap> vertex_attrs_;
  std::map<Edge, AttrMap> edge_attrs_;
};

/// Hypergraph with an additional family of directed (tail, head) hyperedges.
///
/// Directed pairs are stored alongside the undirected family: adding a
/// directed edge also records tail ∪ head as an undirected edge, so every
/// structural computation on the base class sees the directed connectivity.
class DirectedHypergraph : public Hypergraph {
 public:
  using DirectedEdge = std::pair<Edge, Edge>;  // (tail, head)

  /// Records a directed hyperedge. Both sets are canonicalized; absent
  /// vertices are added; tail ∪ head joins the undirected family. Tail and
  /// head may coincide. Throws EmptyEdgeError if either side is empty.
  /// Returns false if the identical pair was already present.
  bool add_directed_edge(std::vector<VertexId> tail, std::vector<VertexId> head);

  const std::set<DirectedEdge>& directed_edges() const { return directed_; }

  friend bool operator==(const DirectedHypergraph& a, const DirectedHypergraph& b);
  friend bool operator!=(const DirectedHypergraph& a, const DirectedHypergraph& b) {
    return !(a == b);
  }

 private:
  std::set<DirectedEdge> directed_;
};

/// Ordered list of hypergraph layers joined by inter-layer vertex links.
class MultilayerHypergraph {
 public:
  struct Endpoint {
    std::size_t layer = 0;
    VertexId vertex = 0;
    friend bool operator==(const Endpoint&, const Endpoint&) = default;
  };
  struct Interlink {
    Endpoint first;
    Endpoint second;
    friend bool operator==(const Interlink&, const Interlink&) = default;
  };

  /// Appends a layer and returns its index (= previous layer count).
  std::size_t add_layer(Hypergraph layer);

  /// Links a vertex of one layer to a vertex of a different layer.
  /// Throws UnknownLayerError / UnknownVertexError for missing endpoints and
  /// InvalidInterlinkError when both endpoints name the same layer.
  void add_interlink(Endpoint a, Endpoint b);

  std::size_t layer_count() const { return layers_.size(); }
  const Hypergraph& layer(std::size_t index) const;
  Hypergraph& layer(std::size_t index);
  const std::vector<Hypergraph>& layers() const { return layers_; }
  const std::vector<Interlink>& interlinks() const { return interlinks_; }

  friend bool operator==(const MultilayerHypergraph&, const MultilayerHypergraph&) = default;

 private:
  std::vector<Hypergraph> layers_;
  std::vector<Interlink> interlinks_;
};

}  // namespace hyperkit
