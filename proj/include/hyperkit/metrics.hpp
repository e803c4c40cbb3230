#pragma once

#include "hyperkit/hypergraph.hpp"

namespace hyperkit {

/// Edge count divided by the number of possible edges, |E| / (2^|V| - 1).
/// Exact for |V| <= 62 (the denominator fits an unsigned 64-bit integer);
/// beyond that the denominator is evaluated in double precision, accurate to
/// one ulp. Throws EmptyHypergraphError when there are no vertices.
double density(const Hypergraph& h);

/// Size of the smallest hyperedge. Throws NoEdgesError on an edgeless family.
std::size_t girth(const Hypergraph& h);

/// Sum of vertex degrees divided by the vertex count.
/// Throws EmptyHypergraphError when there are no vertices.
double average_vertex_degree(const Hypergraph& h);

/// Total size of all hyperedges divided by the edge count.
/// Throws NoEdgesError on an edgeless family.
double average_edge_size(const Hypergraph& h);

}  // namespace hyperkit
