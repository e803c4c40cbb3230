#include "hyperkit/matrices.hpp"

#include <algorithm>

namespace hyperkit {

IncidenceMatrix incidence_matrix(const Hypergraph& h) {
  IncidenceMatrix out;
  out.vertex_order = h.vertex_list();
  out.edge_order = h.edges();
  const auto n = static_cast<Eigen::Index>(out.vertex_order.size());
  const auto m = static_cast<Eigen::Index>(out.edge_order.size());
  out.entries = Eigen::MatrixXi::Zero(n, m);
  for (Eigen::Index col = 0; col < m; ++col) {
    const Edge& e = out.edge_order[static_cast<std::size_t>(col)];
    for (VertexId v : e) {
      auto it = std::lower_bound(out.vertex_order.begin(), out.vertex_order.end(), v);
      const auto row = static_cast<Eigen::Index>(it - out.vertex_order.begin());
      out.entries(row, col) = 1;
    }
  }
  return out;
}

Eigen::MatrixXi adjacency_matrix(const Hypergraph& h) {
  const Eigen::MatrixXi e = incidence_matrix(h).entries;
  return e * e.transpose();
}

Eigen::MatrixXi hyperedge_matrix(const Hypergraph& h) {
  const Eigen::MatrixXi e = incidence_matrix(h).entries;
  return e.transpose() * e;
}

Hypergraph hypergraph_from_incidence(const IncidenceMatrix& m) {
  Hypergraph h;
  for (VertexId v : m.vertex_order) {
    h.add_vertex(v);
  }
  for (Eigen::Index col = 0; col < m.entries.cols(); ++col) {
    std::vector<VertexId> members;
    for (Eigen::Index row = 0; row < m.entries.rows(); ++row) {
      if (m.entries(row, col) != 0) {
        members.push_back(m.vertex_order[static_cast<std::size_t>(row)]);
      }
    }
    h.add_edge(std::move(members));
  }
  return h;
}

}  // namespace hyperkit
