#pragma once

#include <cstddef>
#include <vector>

#include "hyperkit/hypergraph.hpp"
#include "hyperkit/rng.hpp"

namespace hyperkit {

/// Random hypergraph constructors. All five are pure functions of
/// (parameters, seed): the same call yields the same hypergraph on every
/// platform and run. Each call owns a fresh Rng seeded with `seed`.
///
/// Every generator emits the full vertex set 0..n-1 (isolated vertices stay),
/// drops edges that come out empty and collapses duplicates, because the edge
/// family has set semantics.

/// Raw bipartite incidence draw behind simple_matrix / simple_bipartite: m
/// columns over n vertices, each of the n*m cells set independently with
/// probability p. Columns are sampled in order; within a column, vertices in
/// ascending order. Columns may be empty or duplicated here; the hypergraph
/// constructors clean that up.
std::vector<std::vector<VertexId>> sample_incidence_columns(std::size_t n, std::size_t m,
                                                            double p, Rng& rng);

/// Random incidence matrix: each of the n x m entries is 1 with probability p.
/// Throws InvalidProbabilityError for p outside [0, 1].
Hypergraph simple_matrix(std::size_t n, std::size_t m, double p, RngSeed seed);

/// Random bipartite lift: n vertices against m edge-nodes, each cross pair
/// linked with probability p; each edge-node's neighborhood becomes a
/// hyperedge. Same distribution as simple_matrix by construction; kept as a
/// separate entry point for the bipartite view.
Hypergraph simple_bipartite(std::size_t n, std::size_t m, double p, RngSeed seed);

/// Every non-empty subset of the n vertices becomes an edge independently
/// with probability p. Subsets are enumerated by ascending size, and in
/// lexicographic member order within one size. Throws TooLargeError when
/// n > 20 (2^n - 1 candidates are enumerated).
Hypergraph simple_powersets(std::size_t n, double p, RngSeed seed);

/// Like simple_powersets but only subsets of size 1..k are candidates, in the
/// same enumeration order. simple_order(n, n, p, seed) is identical to
/// simple_powersets(n, p, seed), draw for draw. Throws InvalidBoundError
/// unless 1 <= k <= n, and TooLargeError when the candidate count exceeds
/// 2^20.
Hypergraph simple_order(std::size_t n, std::size_t k, double p, RngSeed seed);

/// Each of the C(n, k) subsets of exactly k vertices becomes an edge
/// independently with probability p, in lexicographic order. Bounds and
/// guards as for simple_order.
Hypergraph k_uniform(std::size_t n, std::size_t k, double p, RngSeed seed);

}  // namespace hyperkit
