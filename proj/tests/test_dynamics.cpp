#include <doctest.h>

#include <cmath>

#include "hyperkit/dynamics.hpp"
#include "hyperkit/generators.hpp"
#include "support/oracles.hpp"

using namespace hyperkit;

// ---------------------------------------------------------------------------
// Transition matrix and random walk
// ---------------------------------------------------------------------------

TEST_CASE("transition matrix of a single 3-edge is uniform over the others") {
  Hypergraph h;
  h.add_edge({0, 1, 2});
  const TransitionMatrix t = transition_matrix(h);
  for (Eigen::Index i = 0; i < 3; ++i) {
    for (Eigen::Index j = 0; j < 3; ++j) {
      CHECK(t.probs(i, j) == (i == j ? 0.0 : 0.5));
    }
  }
}

TEST_CASE("transition matrix of disjoint pairs is block-deterministic") {
  Hypergraph h;
  h.add_edge({0, 1});
  h.add_edge({2, 3});
  const TransitionMatrix t = transition_matrix(h);
  CHECK(t.probs(0, 1) == 1.0);
  CHECK(t.probs(1, 0) == 1.0);
  CHECK(t.probs(2, 3) == 1.0);
  CHECK(t.probs(3, 2) == 1.0);
  CHECK(t.probs(0, 2) == 0.0);
  CHECK(t.probs(1, 3) == 0.0);
}

TEST_CASE("transition matrix rejects isolated and fully singleton vertices") {
  Hypergraph isolated;
  isolated.add_edge({0, 1});
  isolated.add_vertex(2);
  CHECK_THROWS_AS(transition_matrix(isolated), IsolatedVertexError);
  CHECK_THROWS_AS(transition_matrix(isolated, WalkVariant::lazy), IsolatedVertexError);

  // Vertex 0 sits only in a singleton edge: numerators and denominator vanish.
  Hypergraph singleton;
  singleton.add_edge({0});
  singleton.add_edge({1, 2});
  CHECK_THROWS_AS(transition_matrix(singleton), DisconnectedDenominatorError);

  // The lazy variant keeps the self-loop mass and stays defined.
  const TransitionMatrix lazy = transition_matrix(singleton, WalkVariant::lazy);
  CHECK(lazy.probs(0, 0) == 1.0);
}

TEST_CASE("transition matrices match brute-force enumeration on random graphs") {
  Rng rng(31);
  std::size_t compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Hypergraph h = oracles::random_instance(rng, 10, 7);
    for (VertexId v : std::vector<VertexId>(h.vertices().begin(), h.vertices().end())) {
      if (h.degree(v) == 0) {
        h.remove_vertex(v);
      }
    }
    if (h.vertex_count() == 0) {
      continue;
    }
    for (WalkVariant variant : {WalkVariant::standard, WalkVariant::lazy}) {
      const auto oracle = oracles::transition_brute_force(h, variant == WalkVariant::lazy);
      if (!oracle.defined) {
        CHECK_THROWS_AS(transition_matrix(h, variant), DisconnectedDenominatorError);
        continue;
      }
      const TransitionMatrix t = transition_matrix(h, variant);
      const auto n = static_cast<std::size_t>(t.probs.rows());
      double max_diff = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          const double got = t.probs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
          max_diff = std::max(max_diff, std::abs(got - oracle.probs[i][j]));
          row_sum += got;
          CHECK(got >= 0.0);
        }
        CHECK(row_sum == doctest::Approx(1.0).epsilon(1e-12));
        if (variant == WalkVariant::standard) {
          CHECK(t.probs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) == 0.0);
        }
      }
      CHECK(max_diff <= 1e-12);
      ++compared;
    }
  }
  CHECK(compared > 200);  // the corpus must actually exercise the comparison
}

TEST_CASE("random walk basics") {
  Hypergraph pair;
  pair.add_edge({0, 1});
  Rng rng(5);

  const std::vector<VertexId> none = random_walk(pair, 0, 0, WalkVariant::standard, rng);
  CHECK(none == std::vector<VertexId>{0});

  const std::vector<VertexId> walk = random_walk(pair, 0, 6, WalkVariant::standard, rng);
  CHECK(walk == std::vector<VertexId>{0, 1, 0, 1, 0, 1, 0});  // deterministic alternation

  CHECK_THROWS_AS(random_walk(pair, 9, 3, WalkVariant::standard, rng), UnknownVertexError);
}

TEST_CASE("random walk visits a symmetric edge uniformly") {
  Hypergraph h;
  h.add_edge({0, 1, 2});
  Rng rng(6);
  const std::size_t steps = 100000;
  const std::vector<VertexId> walk = random_walk(h, 0, steps, WalkVariant::standard, rng);
  std::size_t counts[3] = {0, 0, 0};
  for (VertexId v : walk) {
    counts[v] += 1;
  }
  for (std::size_t c : counts) {
    CHECK(static_cast<double>(c) / static_cast<double>(walk.size()) ==
          doctest::Approx(1.0 / 3.0).epsilon(0.03));
  }
}

TEST_CASE("walk is reproducible under the seed") {
  const Hypergraph h = simple_order(12, 3, 0.3, 99);
  Rng a(17), b(17);
  CHECK(random_walk(h, 0, 50, WalkVariant::lazy, a) == random_walk(h, 0, 50, WalkVariant::lazy, b));
}

// ---------------------------------------------------------------------------
// Schelling
// ---------------------------------------------------------------------------

namespace {

Hypergraph triangle_plus_spare() {
  Hypergraph h;
  h.add_edge({0, 1, 2});
  h.add_edge({2, 3});
  return h;
}

}  // namespace

TEST_CASE("neighborhood coefficient hand cases") {
  Hypergraph h;
  h.add_edge({0, 1, 2});
  SchellingState s(0.5);
  s.set_label(0, 0);
  s.set_label(1, 0);  // same label as 0
  s.set_label(2, 1);  // different

  CHECK(neighborhood_coefficient(h, s, 0) == 0.5);
  CHECK(neighborhood_coefficient(h, s, 1) == 0.5);
  CHECK(neighborhood_coefficient(h, s, 2) == 0.0);

  s.set_label(2, 0);
  CHECK(neighborhood_coefficient(h, s, 0) == 1.0);

  Hypergraph lonely;
  lonely.add_edge({4});
  lonely.add_vertex(5);
  SchellingState t(0.5);
  t.set_label(4, 0);
  CHECK_FALSE(neighborhood_coefficient(lonely, t, 4).has_value());
  CHECK_THROWS_AS(neighborhood_coefficient(lonely, t, 5), UnlabeledVertexError);
}

TEST_CASE("coefficient averages across incident group edges") {
  Hypergraph h;
  h.add_edge({0, 1});      // co-member shares the label
  h.add_edge({0, 2, 3});   // neither co-member does
  h.add_edge({0});         // size-1 edges never count
  SchellingState s(0.5);
  s.set_label(0, 7);
  s.set_label(1, 7);
  s.set_label(2, 1);
  // K_0 = 2; G(0) = (1/2) * (1/1 + 0/2) = 0.5
  CHECK(neighborhood_coefficient(h, s, 0) == 0.5);
}

TEST_CASE("tau = 0 is a fixpoint of schelling_step") {
  const Hypergraph h = triangle_plus_spare();
  SchellingState s(0.0);
  s.set_label(0, 0);
  s.set_label(1, 1);
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    CHECK_FALSE(schelling_step(h, s, rng));
  }
  CHECK(s.label(0) == 0);
  CHECK(s.label(1) == 1);
}

TEST_CASE("a forced move transfers the label and unlabels the source") {
  Hypergraph h;
  h.add_edge({0, 1});
  SchellingState s(1.0);
  s.set_label(0, 4);  // G(0) = 0 < 1, the only unlabeled vertex is 1
  Rng rng(9);
  CHECK(schelling_step(h, s, rng));
  CHECK_FALSE(s.label(0).has_value());
  CHECK(s.label(1) == 4);
  CHECK(s.labeled_count() == 1);
}

TEST_CASE("unconstrained vertices never move; blocked moves are no-ops") {
  // Labeled vertex only in a singleton edge: NoConstraint, treated satisfied.
  Hypergraph lonely;
  lonely.add_edge({0});
  lonely.add_vertex(1);
  SchellingState s(1.0);
  s.set_label(0, 2);
  Rng rng(4);
  CHECK_FALSE(schelling_step(lonely, s, rng));

  // A move is due but no unlabeled vertex exists anywhere.
  Hypergraph pair;
  pair.add_edge({0, 1});
  SchellingState full(1.0);
  full.set_label(0, 0);
  full.set_label(1, 1);
  CHECK_THROWS_AS(schelling_step(pair, full, rng), NoUnlabeledVertexError);

  // Unlabeled vertices exist but none touches a group edge: blocked, no move.
  Hypergraph blocked;
  blocked.add_edge({0, 1});
  blocked.add_vertex(2);
  SchellingState b(1.0);
  b.set_label(0, 0);
  b.set_label(1, 1);
  CHECK_FALSE(schelling_step(blocked, b, rng));
  CHECK(b.label(0) == 0);
}

TEST_CASE("random_init deals exact class sizes and validates") {
  const Hypergraph h = simple_order(15, 3, 0.02, 12);
  Rng rng(8);
  const SchellingState s = SchellingState::random_init(h, {3, 3, 3}, 0.2, rng);
  CHECK(s.labeled_count() == 9);
  std::map<int, int> sizes;
  for (const auto& [v, label] : s.labels()) {
    sizes[label] += 1;
  }
  CHECK(sizes == std::map<int, int>{{0, 3}, {1, 3}, {2, 3}});

  CHECK_THROWS_AS(SchellingState::random_init(h, {8, 8}, 0.2, rng), ValidationError);
  CHECK_THROWS_AS(SchellingState::random_init(h, {3}, 1.5, rng), ValidationError);
}

TEST_CASE("schelling steps conserve class sizes") {
  const Hypergraph h = simple_order(15, 3, 0.05, 71);
  Rng rng(14);
  SchellingState s = SchellingState::random_init(h, {3, 3, 3}, 0.9, rng);
  auto histogram = [&] {
    std::map<int, int> sizes;
    for (const auto& [v, label] : s.labels()) {
      sizes[label] += 1;
    }
    return sizes;
  };
  const auto before = histogram();
  for (int i = 0; i < 500; ++i) {
    schelling_step(h, s, rng);
  }
  CHECK(histogram() == before);
  CHECK(s.labeled_count() == 9);
}

TEST_CASE("schelling_run trajectory and convergence bookkeeping") {
  // Already converged: tau = 0 satisfies everyone immediately.
  const Hypergraph h = triangle_plus_spare();
  SchellingState s(0.0);
  s.set_label(0, 0);
  Rng rng(2);
  const SchellingResult done = schelling_run(h, s, 100, rng);
  CHECK(done.iterations == 0);
  CHECK(done.converged);
  REQUIRE(done.trajectory.rows.size() == 1);
  CHECK(done.trajectory.rows[0].step == 0);
  CHECK(done.trajectory.rows[0].moves == 0);

  // max_iters = 0 leaves an unconverged state untouched.
  SchellingState hard(1.0);
  hard.set_label(0, 0);
  hard.set_label(1, 1);
  const SchellingResult frozen = schelling_run(h, hard, 0, rng);
  CHECK(frozen.iterations == 0);
  CHECK_FALSE(frozen.converged);
  CHECK(frozen.state.labels() == hard.labels());

  // Trajectory rows are step 0 plus one row per iteration.
  const Hypergraph big = simple_order(15, 3, 0.02, 5);
  Rng rng2(20);
  SchellingState init = SchellingState::random_init(big, {3, 3, 3}, 0.2, rng2);
  const SchellingResult run = schelling_run(big, init, 100, rng2);
  CHECK(run.trajectory.rows.size() == run.iterations + 1);
  CHECK(run.iterations <= 100);
  for (std::size_t i = 0; i < run.trajectory.rows.size(); ++i) {
    CHECK(run.trajectory.rows[i].step == i);
  }
}

TEST_CASE("mean coefficient is NaN when nothing is constrained") {
  Hypergraph h;
  h.add_edge({0});
  h.add_vertex(1);
  SchellingState s(0.5);
  s.set_label(0, 0);
  Rng rng(1);
  const SchellingResult r = schelling_run(h, s, 5, rng);
  CHECK(std::isnan(r.trajectory.rows[0].mean_coefficient));
  CHECK(r.converged);  // NoConstraint counts as satisfied
}

// ---------------------------------------------------------------------------
// SIR
// ---------------------------------------------------------------------------

namespace {

// Susceptible vertex 0 sharing one edge with each of two infected vertices.
struct TwoContactFixture {
  Hypergraph h;
  SirStates states;
  TwoContactFixture() {
    h.add_edge({0, 1});
    h.add_edge({0, 2});
    states = {Compartment::susceptible, Compartment::infected, Compartment::infected};
  }
};

}  // namespace

TEST_CASE("beta = 0 never infects; gamma = 1 always recovers") {
  TwoContactFixture fx;
  for (RngSeed seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    const SirStates next = sir_step(fx.h, fx.states, 0.0, 0.0, rng);
    CHECK(next[0] == Compartment::susceptible);
  }
  for (RngSeed seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    const SirStates next = sir_step(fx.h, fx.states, 0.0, 1.0, rng);
    CHECK(next[1] == Compartment::recovered);
    CHECK(next[2] == Compartment::recovered);
  }
}

TEST_CASE("two aggregated contacts at beta 0.4 infect at rate 0.64") {
  TwoContactFixture fx;
  const std::size_t trials = 100000;
  std::size_t infected = 0;
  for (RngSeed seed = 0; seed < trials; ++seed) {
    Rng rng(seed);
    if (sir_step(fx.h, fx.states, 0.4, 0.0, rng)[0] == Compartment::infected) {
      ++infected;
    }
  }
  const double frequency = static_cast<double>(infected) / static_cast<double>(trials);
  const double sigma = std::sqrt(0.64 * 0.36 / static_cast<double>(trials));
  CHECK(std::abs(frequency - 0.64) <= 3.0 * sigma);
}

TEST_CASE("aggregation counts multiplicity inside a single larger edge too") {
  // One edge {0,1,2} with 1 and 2 infected: k = 2, same closed form.
  Hypergraph h;
  h.add_edge({0, 1, 2});
  SirStates states = {Compartment::susceptible, Compartment::infected, Compartment::infected};
  const std::size_t trials = 100000;
  std::size_t infected = 0;
  for (RngSeed seed = 0; seed < trials; ++seed) {
    Rng rng(seed);
    if (sir_step(h, states, 0.4, 0.0, rng)[0] == Compartment::infected) {
      ++infected;
    }
  }
  const double frequency = static_cast<double>(infected) / static_cast<double>(trials);
  const double sigma = std::sqrt(0.64 * 0.36 / static_cast<double>(trials));
  CHECK(std::abs(frequency - 0.64) <= 3.0 * sigma);
}

TEST_CASE("newly infected vertices cannot recover in the same step") {
  // beta = 1 guarantees infection; gamma = 1 recovers only the old infected.
  Hypergraph h;
  h.add_edge({0, 1});
  SirStates states = {Compartment::susceptible, Compartment::infected};
  for (RngSeed seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const SirStates next = sir_step(h, states, 1.0, 1.0, rng);
    CHECK(next[0] == Compartment::infected);
    CHECK(next[1] == Compartment::recovered);
  }
}

TEST_CASE("sir_run validates config and records a conserved trajectory") {
  const Hypergraph h = simple_order(20, 3, 0.02, 44);
  SirConfig cfg;
  cfg.beta = 0.4;
  cfg.gamma = 0.1;
  cfg.initial_infected = {0};
  cfg.steps = 20;
  Rng rng(44);
  const SirResult r = sir_run(h, cfg, rng);

  REQUIRE(r.trajectory.rows.size() == 21);
  CHECK(r.trajectory.rows[0].susceptible == 19);
  CHECK(r.trajectory.rows[0].infected == 1);
  CHECK(r.trajectory.rows[0].recovered == 0);
  for (std::size_t i = 0; i < r.trajectory.rows.size(); ++i) {
    const auto& row = r.trajectory.rows[i];
    CHECK(row.step == i);
    CHECK(row.susceptible + row.infected + row.recovered == 20);
    if (i > 0) {
      CHECK(row.susceptible <= r.trajectory.rows[i - 1].susceptible);
      CHECK(row.recovered >= r.trajectory.rows[i - 1].recovered);
    }
  }

  SirConfig bad = cfg;
  bad.beta = 1.5;
  CHECK_THROWS_AS(sir_run(h, bad, rng), InvalidProbabilityError);
  bad = cfg;
  bad.gamma = -0.1;
  CHECK_THROWS_AS(sir_run(h, bad, rng), InvalidProbabilityError);
  bad = cfg;
  bad.initial_infected = {999};
  CHECK_THROWS_AS(sir_run(h, bad, rng), UnknownVertexError);
}

TEST_CASE("an empty seed set is absorbing") {
  const Hypergraph h = simple_order(10, 3, 0.2, 3);
  SirConfig cfg;
  cfg.beta = 0.9;
  cfg.gamma = 0.5;
  cfg.steps = 10;
  Rng rng(1);
  const SirResult r = sir_run(h, cfg, rng);
  for (const auto& row : r.trajectory.rows) {
    CHECK(row.susceptible == 10);
    CHECK(row.infected == 0);
  }
}

TEST_CASE("sir runs are reproducible under the seed") {
  const Hypergraph h = simple_order(20, 3, 0.02, 7);
  SirConfig cfg;
  cfg.beta = 0.4;
  cfg.gamma = 0.1;
  cfg.initial_infected = {3};
  cfg.steps = 20;
  Rng a(5), b(5);
  const SirResult ra = sir_run(h, cfg, a);
  const SirResult rb = sir_run(h, cfg, b);
  CHECK(ra.final_states == rb.final_states);
}

TEST_CASE("compartment codes") {
  CHECK(compartment_code(Compartment::susceptible) == 'S');
  CHECK(compartment_code(Compartment::infected) == 'I');
  CHECK(compartment_code(Compartment::recovered) == 'R');
}

// ---------------------------------------------------------------------------
// Mutual information
// ---------------------------------------------------------------------------

TEST_CASE("mutual information closed-form cases") {
  // Constant sequences occupy one joint cell: MI = 0.
  CHECK(mutual_information({2.0, 2.0, 2.0}, {5.0, 5.0, 5.0}, 10) == 0.0);

  // One sample per bin on the diagonal: MI = log2(10).
  std::vector<double> ramp(10);
  for (std::size_t i = 0; i < 10; ++i) {
    ramp[i] = static_cast<double>(i);
  }
  CHECK(mutual_information(ramp, ramp, 10) == doctest::Approx(std::log2(10.0)).epsilon(1e-9));

  // bins = 1 collapses everything into one cell.
  CHECK(mutual_information(ramp, ramp, 1) == 0.0);
}

TEST_CASE("independent samples have near-zero mutual information") {
  Rng rng(2718);
  std::vector<double> x(10000), y(10000);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = rng.uniform();
    y[i] = rng.uniform();
  }
  const double mi = mutual_information(x, y, 10);
  CHECK(mi >= 0.0);
  CHECK(mi < 0.05);
}

TEST_CASE("mutual information is symmetric") {
  Rng rng(3141);
  std::vector<double> x(1000), y(1000);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = rng.uniform();
    y[i] = 0.5 * x[i] + rng.uniform();  // correlated pair
  }
  const double xy = mutual_information(x, y, 8);
  const double yx = mutual_information(y, x, 8);
  CHECK(std::abs(xy - yx) < 1e-12);
  CHECK(xy > 0.0);
}

TEST_CASE("mutual information input validation") {
  CHECK_THROWS_AS(mutual_information({1.0}, {1.0, 2.0}, 4), LengthMismatchError);
  CHECK_THROWS_AS(mutual_information({}, {}, 4), EmptyInputError);
  CHECK_THROWS_AS(mutual_information({1.0}, {2.0}, 0), ValidationError);
}
