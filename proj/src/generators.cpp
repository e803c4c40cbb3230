#include "hyperkit/generators.hpp"

#include <limits>

namespace hyperkit {

namespace {

constexpr std::uint64_t kMaxCandidates = std::uint64_t{1} << 20;

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidProbabilityError(p);
  }
}

// Binomial coefficient, saturating at `cap` to avoid overflow.
std::uint64_t choose_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (result > cap) return cap + 1;
    result = result * (n - k + i) / i;
  }
  return result > cap ? cap + 1 : result;
}

Hypergraph with_all_vertices(std::size_t n) {
  Hypergraph h;
  for (std::size_t v = 0; v < n; ++v) {
    h.add_vertex(static_cast<VertexId>(v));
  }
  return h;
}

// Visits all size-`size` subsets of {0..n-1} in lexicographic order and adds
// each as an edge with probability p.
void sample_combinations(Hypergraph& h, std::size_t n, std::size_t size, double p, Rng& rng) {
  std::vector<VertexId> combo(size);
  for (std::size_t i = 0; i < size; ++i) {
    combo[i] = static_cast<VertexId>(i);
  }
  while (true) {
    if (rng.bernoulli(p)) {
      h.add_edge(combo);
    }
    // advance to the next combination
    std::size_t i = size;
    while (i > 0) {
      --i;
      if (combo[i] != static_cast<VertexId>(n - size + i)) {
        ++combo[i];
        for (std::size_t j = i + 1; j < size; ++j) {
          combo[j] = combo[j - 1] + 1;
        }
        break;
      }
      if (i == 0) {
        return;
      }
    }
  }
}

Hypergraph sized_subset_model(std::size_t n, std::size_t min_size, std::size_t max_size,
                              double p, RngSeed seed) {
  Hypergraph h = with_all_vertices(n);
  Rng rng(seed);
  for (std::size_t size = min_size; size <= max_size; ++size) {
    sample_combinations(h, n, size, p, rng);
  }
  return h;
}

}  // namespace

std::vector<std::vector<VertexId>> sample_incidence_columns(std::size_t n, std::size_t m,
                                                            double p, Rng& rng) {
  std::vector<std::vector<VertexId>> columns(m);
  for (std::size_t col = 0; col < m; ++col) {
    for (std::size_t v = 0; v < n; ++v) {
      if (rng.bernoulli(p)) {
        columns[col].push_back(static_cast<VertexId>(v));
      }
    }
  }
  return columns;
}

Hypergraph simple_matrix(std::size_t n, std::size_t m, double p, RngSeed seed) {
  check_probability(p);
  Hypergraph h = with_all_vertices(n);
  Rng rng(seed);
  for (auto& column : sample_incidence_columns(n, m, p, rng)) {
    if (!column.empty()) {
      h.add_edge(std::move(column));
    }
  }
  return h;
}

Hypergraph simple_bipartite(std::size_t n, std::size_t m, double p, RngSeed seed) {
  // The bipartite view draws the same n*m cross links; an edge-node's
  // neighborhood is exactly one incidence column.
  return simple_matrix(n, m, p, seed);
}

Hypergraph simple_powersets(std::size_t n, double p, RngSeed seed) {
  check_probability(p);
  if (n > 20) {
    throw TooLargeError("simple_powersets enumerates 2^n - 1 subsets; n=" + std::to_string(n) +
                        " exceeds the n <= 20 guard");
  }
  if (n == 0) {
    return Hypergraph{};
  }
  return sized_subset_model(n, 1, n, p, seed);
}

Hypergraph simple_order(std::size_t n, std::size_t k, double p, RngSeed seed) {
  check_probability(p);
  if (k < 1 || k > n) {
    throw InvalidBoundError(k, n);
  }
  std::uint64_t candidates = 0;
  for (std::size_t size = 1; size <= k; ++size) {
    candidates += choose_capped(n, size, kMaxCandidates);
    if (candidates > kMaxCandidates) {
      throw TooLargeError("simple_order would enumerate more than 2^20 candidate subsets");
    }
  }
  return sized_subset_model(n, 1, k, p, seed);
}

Hypergraph k_uniform(std::size_t n, std::size_t k, double p, RngSeed seed) {
  check_probability(p);
  if (k < 1 || k > n) {
    throw InvalidBoundError(k, n);
  }
  if (choose_capped(n, k, kMaxCandidates) > kMaxCandidates) {
    throw TooLargeError("k_uniform would enumerate more than 2^20 candidate subsets");
  }
  return sized_subset_model(n, k, k, p, seed);
}

}  // namespace hyperkit
