#include <doctest.h>

#include "hyperkit/matrices.hpp"
#include "support/oracles.hpp"

using namespace hyperkit;

namespace {

Eigen::MatrixXi from_dense(const oracles::DenseInt& a) {
  const auto rows = static_cast<Eigen::Index>(a.size());
  const auto cols = static_cast<Eigen::Index>(a.empty() ? 0 : a[0].size());
  Eigen::MatrixXi out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      out(i, j) = static_cast<int>(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("incidence of a single spanning edge is a ones column") {
  Hypergraph h;
  h.add_edge({0, 1, 2});
  const IncidenceMatrix m = incidence_matrix(h);
  REQUIRE(m.entries.rows() == 3);
  REQUIRE(m.entries.cols() == 1);
  CHECK(m.entries == Eigen::MatrixXi::Ones(3, 1));
  CHECK(m.vertex_order == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("incidence of singletons is identity-patterned") {
  Hypergraph h;
  h.add_edge({0});
  h.add_edge({1});
  const IncidenceMatrix m = incidence_matrix(h);
  CHECK(m.entries == Eigen::MatrixXi::Identity(2, 2));
}

TEST_CASE("incidence respects membership and canonical ordering") {
  Hypergraph h;
  h.add_edge({0, 1});
  h.add_edge({1, 2});
  const IncidenceMatrix m = incidence_matrix(h);
  Eigen::MatrixXi expected(3, 2);
  expected << 1, 0, 1, 1, 0, 1;
  CHECK(m.entries == expected);
}

TEST_CASE("incidence rows follow ascending vertex id even for sparse ids") {
  Hypergraph h;
  h.add_edge({7, 3});
  h.add_vertex(5);
  const IncidenceMatrix m = incidence_matrix(h);
  CHECK(m.vertex_order == std::vector<VertexId>{3, 5, 7});
  Eigen::MatrixXi expected(3, 1);
  expected << 1, 0, 1;
  CHECK(m.entries == expected);
}

TEST_CASE("empty hypergraph gives 0x0 matrices") {
  Hypergraph h;
  CHECK(incidence_matrix(h).entries.size() == 0);
  CHECK(adjacency_matrix(h).size() == 0);
  CHECK(hyperedge_matrix(h).size() == 0);
}

TEST_CASE("adjacency of a single edge is all-ones; edgeless is zero") {
  Hypergraph h;
  h.add_edge({0, 1, 2});
  CHECK(adjacency_matrix(h) == Eigen::MatrixXi::Ones(3, 3));

  Hypergraph bare;
  bare.add_vertex(0);
  bare.add_vertex(1);
  CHECK(adjacency_matrix(bare) == Eigen::MatrixXi::Zero(2, 2));

  Hypergraph dup;
  dup.add_edge({0, 1});
  dup.add_edge({1, 0});  // collapses
  CHECK(adjacency_matrix(dup)(0, 1) == 1);
}

TEST_CASE("A = e e^T and C = e^T e against independent dense products") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Hypergraph h = oracles::random_instance(rng, 12, 8);
    const oracles::DenseInt e = oracles::incidence_dense(h);
    const Eigen::MatrixXi a_oracle = from_dense(oracles::matmul(e, oracles::transpose(e)));
    const Eigen::MatrixXi c_oracle = from_dense(oracles::matmul(oracles::transpose(e), e));
    CHECK(adjacency_matrix(h) == a_oracle);
    CHECK(hyperedge_matrix(h) == c_oracle);
  }
}

TEST_CASE("adjacency diagonal is the degree; C diagonal is the edge size") {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Hypergraph h = oracles::random_instance(rng, 10, 6);
    const Eigen::MatrixXi a = adjacency_matrix(h);
    const std::vector<VertexId> order = h.vertex_list();
    for (std::size_t i = 0; i < order.size(); ++i) {
      CHECK(a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) ==
            static_cast<int>(h.degree(order[i])));
    }
    const Eigen::MatrixXi c = hyperedge_matrix(h);
    for (std::size_t m = 0; m < h.edge_count(); ++m) {
      CHECK(c(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m)) ==
            static_cast<int>(h.edges()[m].size()));
    }
  }
}

TEST_CASE("incidence round-trip reproduces the hypergraph") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Hypergraph h = oracles::random_instance(rng, 12, 8);
    const Hypergraph back = hypergraph_from_incidence(incidence_matrix(h));
    CHECK(back == h);
  }
}
