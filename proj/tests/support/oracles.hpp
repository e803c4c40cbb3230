#pragma once

// Reference implementations used to cross-check the library. Everything here
// is written the slow, obvious way on purpose: plain loops, no shared code
// with the library's algebraic paths (no Eigen products, no bipartite lift).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "hyperkit/hypergraph.hpp"
#include "hyperkit/rng.hpp"

namespace oracles {

using hyperkit::Edge;
using hyperkit::Hypergraph;
using hyperkit::VertexId;

// ---- disjoint-set forest ----------------------------------------------------

class UnionFind {
 public:
  void add(VertexId v) { parent_.emplace(v, v); }

  VertexId find(VertexId v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void unite(VertexId a, VertexId b) { parent_[find(a)] = find(b); }

 private:
  std::map<VertexId, VertexId> parent_;
};

// Components by union-find over shared-edge relations, ordered by smallest
// member, members ascending.
inline std::vector<std::vector<VertexId>> components_union_find(const Hypergraph& h) {
  UnionFind forest;
  for (VertexId v : h.vertices()) {
    forest.add(v);
  }
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 1; i < e.size(); ++i) {
      forest.unite(e[0], e[i]);
    }
  }
  std::map<VertexId, std::vector<VertexId>> buckets;
  for (VertexId v : h.vertices()) {
    buckets[forest.find(v)].push_back(v);
  }
  std::vector<std::vector<VertexId>> components;
  for (auto& [root, members] : buckets) {
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

// ---- dense integer linear algebra (no Eigen) ---------------------------------

using DenseInt = std::vector<std::vector<long long>>;

inline DenseInt incidence_dense(const Hypergraph& h) {
  const std::vector<VertexId> order = h.vertex_list();
  DenseInt e(order.size(), std::vector<long long>(h.edge_count(), 0));
  for (std::size_t col = 0; col < h.edge_count(); ++col) {
    const Edge& members = h.edges()[col];
    for (std::size_t row = 0; row < order.size(); ++row) {
      if (std::find(members.begin(), members.end(), order[row]) != members.end()) {
        e[row][col] = 1;
      }
    }
  }
  return e;
}

inline DenseInt matmul(const DenseInt& a, const DenseInt& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = rows == 0 ? 0 : a[0].size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  DenseInt out(rows, std::vector<long long>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      for (std::size_t j = 0; j < cols; ++j) {
        out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

inline DenseInt transpose(const DenseInt& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  DenseInt out(cols, std::vector<long long>(rows, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      out[j][i] = a[i][j];
    }
  }
  return out;
}

// ---- brute-force walk transition matrix --------------------------------------
// Direct hyperedge enumeration: no incidence matrix, no matrix products.
// Returns an empty vector when some row denominator is zero (standard
// variant), mirroring DisconnectedDenominator.

struct TransitionOracle {
  std::vector<std::vector<double>> probs;  // empty if undefined
  bool defined = false;
};

inline TransitionOracle transition_brute_force(const Hypergraph& h, bool lazy) {
  const std::vector<VertexId> order = h.vertex_list();
  const std::size_t n = order.size();
  TransitionOracle oracle;

  // weighted[i][j] = sum over edges containing both order[i], order[j] of |e|
  std::vector<std::vector<long long>> weighted(n, std::vector<long long>(n, 0));
  std::vector<std::vector<long long>> shared(n, std::vector<long long>(n, 0));
  for (const Edge& e : h.edges()) {
    for (VertexId a : e) {
      const std::size_t i = static_cast<std::size_t>(
          std::find(order.begin(), order.end(), a) - order.begin());
      for (VertexId b : e) {
        const std::size_t j = static_cast<std::size_t>(
            std::find(order.begin(), order.end(), b) - order.begin());
        weighted[i][j] += static_cast<long long>(e.size());
        shared[i][j] += 1;
      }
    }
  }

  oracle.probs.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    if (lazy) {
      long long denom = 0;
      for (std::size_t j = 0; j < n; ++j) {
        denom += weighted[i][j];
      }
      if (denom == 0) {
        return oracle;  // isolated vertex; library throws before this point
      }
      for (std::size_t j = 0; j < n; ++j) {
        oracle.probs[i][j] = static_cast<double>(weighted[i][j]) / static_cast<double>(denom);
      }
    } else {
      long long denom = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) {
          denom += weighted[i][j] - shared[i][j];
        }
      }
      if (denom == 0) {
        return oracle;  // the library throws DisconnectedDenominator here
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) {
          oracle.probs[i][j] = static_cast<double>(weighted[i][j] - shared[i][j]) /
                               static_cast<double>(denom);
        }
      }
    }
  }
  oracle.defined = true;
  return oracle;
}

// ---- random instances for property tests -------------------------------------
// Arbitrary small hypergraphs: isolated vertices, singleton edges, nested and
// duplicate member lists all occur.

inline Hypergraph random_instance(hyperkit::Rng& rng, std::size_t max_vertices,
                                  std::size_t max_edges) {
  const std::size_t n = 1 + static_cast<std::size_t>(rng.below(max_vertices));
  Hypergraph h;
  for (std::size_t v = 0; v < n; ++v) {
    h.add_vertex(static_cast<VertexId>(v));
  }
  const std::size_t edges = static_cast<std::size_t>(rng.below(max_edges + 1));
  for (std::size_t e = 0; e < edges; ++e) {
    std::vector<VertexId> members;
    for (std::size_t v = 0; v < n; ++v) {
      if (rng.bernoulli(0.35)) {
        members.push_back(static_cast<VertexId>(v));
      }
    }
    if (members.empty()) {
      members.push_back(static_cast<VertexId>(rng.below(n)));
    }
    h.add_edge(std::move(members));
  }
  return h;
}

// ---- Monte Carlo bounds -------------------------------------------------------

// 3-sigma band for the mean of `samples` draws of Binomial(trials, p).
struct MeanBand {
  double mean;
  double halfwidth;
  bool contains(double x) const { return x >= mean - halfwidth && x <= mean + halfwidth; }
};

inline MeanBand binomial_mean_band(double trials, double p, double samples) {
  const double variance = trials * p * (1.0 - p);
  return {trials * p, 3.0 * std::sqrt(variance / samples)};
}

// Pearson chi-square statistic for observed category counts against expected
// probabilities (scaled to the observed total).
inline double chi_square(const std::vector<std::size_t>& observed,
                         const std::vector<double>& expected_probability) {
  double total = 0.0;
  for (std::size_t count : observed) {
    total += static_cast<double>(count);
  }
  double statistic = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = total * expected_probability[i];
    const double diff = static_cast<double>(observed[i]) - expected;
    statistic += diff * diff / expected;
  }
  return statistic;
}

}  // namespace oracles
