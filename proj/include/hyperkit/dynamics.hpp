#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hyperkit/hypergraph.hpp"
#include "hyperkit/rng.hpp"

namespace hyperkit {

// ---------------------------------------------------------------------------
// Random walk
// ---------------------------------------------------------------------------

enum class WalkVariant { standard, lazy };

/// Row-stochastic walk transition matrix. Row/column order matches the
/// incidence matrix rows (ascending vertex id).
struct TransitionMatrix {
  Eigen::MatrixXd probs;
  std::vector<VertexId> vertex_order;
};

/// Walk transition probabilities between vertices.
///
/// With e the incidence matrix, C = e^T e, Chat = diag(C), A = e e^T and
/// k_i = sum_{l != i} A_il, the standard variant is
///
///     T_ij = [ (e Chat e^T)_ij - A_ij ] / [ sum_{l != i} (e Chat e^T)_il - k_i ]
///
/// for i != j, with zero diagonal: the chance of stepping from i to j is the
/// size-weighted co-membership of the pair, normalized over all partners of
/// i. The lazy variant keeps the self-loop mass: the numerator is
/// (e Chat e^T)_ij for all j including the diagonal, and each row is
/// normalized to sum to one.
///
/// Throws IsolatedVertexError if any vertex has degree zero, and
/// DisconnectedDenominatorError (standard variant) if a vertex shares no edge
/// of size > 1 with anyone, which zeroes its denominator.
TransitionMatrix transition_matrix(const Hypergraph& h,
                                   WalkVariant variant = WalkVariant::standard);

/// Samples a walk of `steps` transitions starting at `start`; the returned
/// sequence has steps + 1 vertices. Throws UnknownVertexError for a foreign
/// start vertex, plus everything transition_matrix throws.
std::vector<VertexId> random_walk(const Hypergraph& h, VertexId start, std::size_t steps,
                                  WalkVariant variant, Rng& rng);

// ---------------------------------------------------------------------------
// Generalized Schelling segregation
// ---------------------------------------------------------------------------

/// Label assignment over the vertices of one hypergraph plus the tolerance
/// threshold. Vertices absent from the map are unlabeled; at least one vertex
/// must stay unlabeled for moves to be possible.
class SchellingState {
 public:
  SchellingState() = default;
  explicit SchellingState(double tau) : tau_(tau) {}

  /// Shuffles the vertices of h and deals labels 0..|class_sizes|-1 to the
  /// first class_sizes[0], class_sizes[1], ... of them; the rest stay
  /// unlabeled. Throws ValidationError when the sizes do not leave at least
  /// one vertex unlabeled, or when tau is outside [0, 1].
  static SchellingState random_init(const Hypergraph& h, const std::vector<std::size_t>& class_sizes,
                                    double tau, Rng& rng);

  double tau() const { return tau_; }
  void set_tau(double tau);

  std::optional<int> label(VertexId v) const;
  void set_label(VertexId v, int label) { labels_[v] = label; }
  void clear_label(VertexId v) { labels_.erase(v); }
  const std::map<VertexId, int>& labels() const { return labels_; }
  std::size_t labeled_count() const { return labels_.size(); }

 private:
  std::map<VertexId, int> labels_;
  double tau_ = 0.0;
};

/// True when v belongs to at least one hyperedge of size > 1. Only such
/// vertices feel any neighborhood constraint; single-vertex edges are
/// excluded from the segregation dynamics throughout.
bool touches_group_edge(const Hypergraph& h, VertexId v);

/// Mean same-label fraction of v's co-members, averaged over the incident
/// hyperedges of size > 1:
///
///     G(v) = (1 / K_v) * sum_{edges e with v, |e| > 1} |N_e(v)| / (|e| - 1)
///
/// where N_e(v) are the other members of e sharing v's label and K_v counts
/// the incident size > 1 edges. Returns nullopt ("no constraint") when
/// K_v = 0. Throws UnlabeledVertexError when v has no label.
std::optional<double> neighborhood_coefficient(const Hypergraph& h, const SchellingState& s,
                                               VertexId v);

/// One iteration: a labeled vertex v is chosen uniformly at random; if its
/// coefficient is defined and below tau, its label moves to a uniformly
/// random unlabeled vertex that touches a group edge, and v becomes
/// unlabeled. Returns whether a move happened. Throws NoUnlabeledVertexError
/// when a move is due but every vertex is labeled.
bool schelling_step(const Hypergraph& h, SchellingState& s, Rng& rng);

struct SchellingTrajectory {
  struct Row {
    std::size_t step = 0;
    double mean_coefficient = 0.0;  // NaN when no labeled vertex is constrained
    unsigned moves = 0;
  };
  std::vector<Row> rows;
};

struct SchellingResult {
  SchellingState state;
  SchellingTrajectory trajectory;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Iterates schelling_step until every labeled vertex has a coefficient that
/// is at least tau (or no constraint), or max_iters is reached. The
/// trajectory records the mean coefficient over constrained labeled vertices
/// and the move count per iteration, starting with the initial state at step 0.
SchellingResult schelling_run(const Hypergraph& h, SchellingState state, std::size_t max_iters,
                              Rng& rng);

// ---------------------------------------------------------------------------
// SIR epidemic
// ---------------------------------------------------------------------------

enum class Compartment { susceptible, infected, recovered };

char compartment_code(Compartment c);  // 'S' / 'I' / 'R'

struct SirConfig {
  double beta = 0.0;   // transmission rate, [0, 1]
  double gamma = 0.0;  // recovery rate, [0, 1]
  std::set<VertexId> initial_infected;
  std::size_t steps = 0;
};

/// Per-vertex compartments, aligned with the canonical (ascending) vertex order.
using SirStates = std::vector<Compartment>;

/// One synchronous update computed from the pre-step state. A susceptible
/// vertex with k infected co-members counted across all incident hyperedges
/// (multiplicity counts) becomes infected with probability 1 - (1 - beta)^k;
/// an infected vertex recovers with probability gamma, drawn exactly once per
/// step. Vertices infected this step cannot recover in the same step.
///
/// Draw order, for reproducibility: susceptible vertices with k >= 1 in
/// ascending vertex order, then infected vertices in ascending vertex order.
SirStates sir_step(const Hypergraph& h, const SirStates& current, double beta, double gamma,
                   Rng& rng);

struct SirTrajectory {
  struct Row {
    std::size_t step = 0;
    std::size_t susceptible = 0;
    std::size_t infected = 0;
    std::size_t recovered = 0;
  };
  std::vector<Row> rows;  // rows 0..steps inclusive
};

struct SirResult {
  SirStates final_states;
  std::vector<VertexId> vertex_order;
  SirTrajectory trajectory;
};

/// Runs cfg.steps synchronous steps from the initial state (initial_infected
/// infected, everyone else susceptible). Throws InvalidProbabilityError for
/// rates outside [0, 1] and UnknownVertexError if initial_infected strays
/// outside the vertex set.
SirResult sir_run(const Hypergraph& h, const SirConfig& cfg, Rng& rng);

// ---------------------------------------------------------------------------
// Mutual information
// ---------------------------------------------------------------------------

/// Histogram estimate of the mutual information between two equal-length real
/// sequences, in bits. Both axes are split into `bins` equal-width bins
/// spanning that sequence's [min, max] (a constant sequence occupies a single
/// bin); probabilities are bin counts over the total, and marginals are the
/// row/column sums of the joint histogram. Throws LengthMismatchError /
/// EmptyInputError; bins must be >= 1.
double mutual_information(const std::vector<double>& x, const std::vector<double>& y,
                          std::size_t bins);

}  // namespace hyperkit
