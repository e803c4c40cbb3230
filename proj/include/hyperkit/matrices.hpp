#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hyperkit/hypergraph.hpp"

namespace hyperkit {

/// 0/1 incidence matrix together with the row and column orders it was built
/// from. Entry (i, m) is 1 iff vertex_order[i] belongs to edge_order[m].
struct IncidenceMatrix {
  Eigen::MatrixXi entries;             // |V| x |E|
  std::vector<VertexId> vertex_order;  // ascending vertex id
  std::vector<Edge> edge_order;        // edge insertion order
};

/// Builds the canonical incidence matrix. Empty hypergraphs yield 0x0.
IncidenceMatrix incidence_matrix(const Hypergraph& h);

/// Adjacency matrix A = e * e^T: entry (i, j) counts the hyperedges containing
/// both vertices. The diagonal holds vertex degrees.
Eigen::MatrixXi adjacency_matrix(const Hypergraph& h);

/// Hyperedge matrix C = e^T * e: entry (m, l) counts the vertices shared by
/// edges m and l. The diagonal holds hyperedge sizes.
Eigen::MatrixXi hyperedge_matrix(const Hypergraph& h);

/// Rebuilds a hypergraph from an incidence matrix (the inverse of
/// incidence_matrix up to structural equality).
Hypergraph hypergraph_from_incidence(const IncidenceMatrix& m);

}  // namespace hyperkit
