#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hyperkit/hypergraph.hpp"

namespace hyperkit {

/// Partition of the vertex set into maximal hyperedge-connected groups.
/// Components are ordered by their smallest vertex; members ascending.
using ComponentPartition = std::vector<std::vector<VertexId>>;

/// Connected components via the bipartite lift: an ordinary graph is built on
/// |V| + |E| nodes with vertex i adjacent to edge-node m iff i belongs to edge
/// m, its components are taken, and only the vertex nodes are kept. Vertices
/// in no edge come out as singleton components.
ComponentPartition connected_components(const Hypergraph& h);

/// Copy of h in which every edge contained in a different edge is removed.
/// The surviving family is an antichain under set inclusion; maximal edges
/// and all vertices are untouched. Idempotent.
Hypergraph simple_reduction(const Hypergraph& h);

enum class ExpansionMode { clique, star };

/// Parses "clique" / "star"; anything else throws UnknownModeError.
ExpansionMode expansion_mode_from_string(const std::string& mode);

/// Ordinary undirected graph produced by an expansion. Nodes are indices:
/// index i < base_vertex_count() labels vertex_labels[i]; larger indices are
/// the per-hyperedge star nodes, in edge column order.
struct Graph {
  std::size_t num_nodes = 0;
  std::vector<VertexId> vertex_labels;  // canonical vertex order of the source
  std::set<std::pair<std::size_t, std::size_t>> edges;  // node index pairs, a < b

  std::size_t base_vertex_count() const { return vertex_labels.size(); }

  /// Human-readable node name: raw vertex id, or "e<m>" for star nodes.
  std::string node_name(std::size_t index) const;
};

/// Clique expansion connects every 2-subset inside each hyperedge; star
/// expansion adds one node per hyperedge joined to each of its members.
Graph graph_expansion(const Hypergraph& h, ExpansionMode mode);

}  // namespace hyperkit
