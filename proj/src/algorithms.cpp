#include "hyperkit/algorithms.hpp"

#include <algorithm>
#include <map>

#include "hyperkit/matrices.hpp"

namespace hyperkit {

ComponentPartition connected_components(const Hypergraph& h) {
  const std::vector<VertexId> order = h.vertex_list();
  const std::size_t n = order.size();
  const std::size_t m = h.edge_count();

  // Bipartite lift: nodes 0..n-1 are vertices, n..n+m-1 are edge-nodes.
  std::vector<std::vector<std::size_t>> adjacency(n + m);
  std::map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    index[order[i]] = i;
  }
  for (std::size_t col = 0; col < m; ++col) {
    for (VertexId v : h.edges()[col]) {
      const std::size_t i = index[v];
      adjacency[i].push_back(n + col);
      adjacency[n + col].push_back(i);
    }
  }

  std::vector<bool> seen(n + m, false);
  ComponentPartition components;
  for (std::size_t root = 0; root < n + m; ++root) {
    if (seen[root]) {
      continue;
    }
    // ordinary DFS over the lifted graph
    std::vector<std::size_t> stack{root};
    seen[root] = true;
    std::vector<VertexId> projected;
    while (!stack.empty()) {
      const std::size_t node = stack.back();
      stack.pop_back();
      if (node < n) {
        projected.push_back(order[node]);
      }
      for (std::size_t next : adjacency[node]) {
        if (!seen[next]) {
          seen[next] = true;
          stack.push_back(next);
        }
      }
    }
    if (!projected.empty()) {
      std::sort(projected.begin(), projected.end());
      components.push_back(std::move(projected));
    }
  }
  // Roots are visited in ascending node index, so components already come out
  // ordered by their smallest vertex.
  return components;
}

Hypergraph simple_reduction(const Hypergraph& h) {
  Hypergraph reduced = h;
  const std::vector<Edge> family = h.edges();
  for (const Edge& small : family) {
    for (const Edge& big : family) {
      if (small == big || small.size() > big.size()) {
        continue;
      }
      if (std::includes(big.begin(), big.end(), small.begin(), small.end())) {
        reduced.remove_edge(small);
        break;
      }
    }
  }
  return reduced;
}

ExpansionMode expansion_mode_from_string(const std::string& mode) {
  if (mode == "clique") return ExpansionMode::clique;
  if (mode == "star") return ExpansionMode::star;
  throw UnknownModeError(mode);
}

std::string Graph::node_name(std::size_t index) const {
  if (index < vertex_labels.size()) {
    return std::to_string(vertex_labels[index]);
  }
  return "e" + std::to_string(index - vertex_labels.size());
}

Graph graph_expansion(const Hypergraph& h, ExpansionMode mode) {
  Graph g;
  g.vertex_labels = h.vertex_list();
  const std::size_t n = g.vertex_labels.size();
  std::map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    index[g.vertex_labels[i]] = i;
  }

  if (mode == ExpansionMode::clique) {
    g.num_nodes = n;
    for (const Edge& e : h.edges()) {
      for (std::size_t a = 0; a < e.size(); ++a) {
        for (std::size_t b = a + 1; b < e.size(); ++b) {
          g.edges.emplace(index[e[a]], index[e[b]]);
        }
      }
    }
  } else {
    g.num_nodes = n + h.edge_count();
    for (std::size_t col = 0; col < h.edge_count(); ++col) {
      for (VertexId v : h.edges()[col]) {
        g.edges.emplace(index[v], n + col);
      }
    }
  }
  return g;
}

}  // namespace hyperkit
