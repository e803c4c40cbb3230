#include "hyperkit/metrics.hpp"

#include <cmath>

namespace hyperkit {

double density(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  if (n == 0) {
    throw EmptyHypergraphError();
  }
  const auto edges = static_cast<double>(h.edge_count());
  if (n <= 62) {
    const std::uint64_t possible = (std::uint64_t{1} << n) - 1;
    return edges / static_cast<double>(possible);
  }
  return edges / (std::exp2(static_cast<double>(n)) - 1.0);
}

std::size_t girth(const Hypergraph& h) {
  if (h.edge_count() == 0) {
    throw NoEdgesError();
  }
  std::size_t smallest = h.edges().front().size();
  for (const Edge& e : h.edges()) {
    smallest = std::min(smallest, e.size());
  }
  return smallest;
}

double average_vertex_degree(const Hypergraph& h) {
  if (h.vertex_count() == 0) {
    throw EmptyHypergraphError();
  }
  // Sum of degrees equals the total size of all edges.
  std::size_t incidences = 0;
  for (const Edge& e : h.edges()) {
    incidences += e.size();
  }
  return static_cast<double>(incidences) / static_cast<double>(h.vertex_count());
}

double average_edge_size(const Hypergraph& h) {
  if (h.edge_count() == 0) {
    throw NoEdgesError();
  }
  std::size_t total = 0;
  for (const Edge& e : h.edges()) {
    total += e.size();
  }
  return static_cast<double>(total) / static_cast<double>(h.edge_count());
}

}  // namespace hyperkit
