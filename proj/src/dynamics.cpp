#include "hyperkit/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperkit/matrices.hpp"

namespace hyperkit {

TransitionMatrix transition_matrix(const Hypergraph& h, WalkVariant variant) {
  const IncidenceMatrix inc = incidence_matrix(h);
  const auto n = static_cast<Eigen::Index>(inc.vertex_order.size());

  for (Eigen::Index i = 0; i < n; ++i) {
    if (inc.entries.row(i).sum() == 0) {
      throw IsolatedVertexError(inc.vertex_order[static_cast<std::size_t>(i)]);
    }
  }

  // All products stay in exact integer arithmetic; the single rounding step
  // is the final division.
  const Eigen::MatrixXi& e = inc.entries;
  const Eigen::VectorXi edge_sizes = e.colwise().sum().transpose();
  const Eigen::MatrixXi weighted = e * edge_sizes.asDiagonal() * e.transpose();  // e Chat e^T
  const Eigen::MatrixXi adjacency = e * e.transpose();

  TransitionMatrix out;
  out.vertex_order = inc.vertex_order;
  out.probs = Eigen::MatrixXd::Zero(n, n);

  for (Eigen::Index i = 0; i < n; ++i) {
    if (variant == WalkVariant::lazy) {
      const double denom = static_cast<double>(weighted.row(i).sum());
      for (Eigen::Index j = 0; j < n; ++j) {
        out.probs(i, j) = static_cast<double>(weighted(i, j)) / denom;
      }
    } else {
      const int row_weight = weighted.row(i).sum() - weighted(i, i);
      const int hyperdegree = adjacency.row(i).sum() - adjacency(i, i);
      const int denom = row_weight - hyperdegree;
      if (denom == 0) {
        throw DisconnectedDenominatorError(inc.vertex_order[static_cast<std::size_t>(i)]);
      }
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        out.probs(i, j) =
            static_cast<double>(weighted(i, j) - adjacency(i, j)) / static_cast<double>(denom);
      }
    }
  }
  return out;
}

std::vector<VertexId> random_walk(const Hypergraph& h, VertexId start, std::size_t steps,
                                  WalkVariant variant, Rng& rng) {
  if (!h.has_vertex(start)) {
    throw UnknownVertexError(start);
  }
  const TransitionMatrix t = transition_matrix(h, variant);
  const auto n = static_cast<std::size_t>(t.probs.rows());

  std::size_t current = h.vertex_index(start);
  std::vector<VertexId> sequence{start};
  sequence.reserve(steps + 1);
  for (std::size_t s = 0; s < steps; ++s) {
    const double u = rng.uniform();
    double cumulative = 0.0;
    std::size_t next = n - 1;  // guard against rounding at the top end
    for (std::size_t j = 0; j < n; ++j) {
      cumulative += t.probs(static_cast<Eigen::Index>(current), static_cast<Eigen::Index>(j));
      if (u < cumulative) {
        next = j;
        break;
      }
    }
    current = next;
    sequence.push_back(t.vertex_order[current]);
  }
  return sequence;
}

// ---------------------------------------------------------------------------
// Schelling
// ---------------------------------------------------------------------------

void SchellingState::set_tau(double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw ValidationError("tolerance tau must lie in [0, 1]");
  }
  tau_ = tau;
}

std::optional<int> SchellingState::label(VertexId v) const {
  auto it = labels_.find(v);
  if (it == labels_.end()) {
    return std::nullopt;
  }
  return it->second;
}

SchellingState SchellingState::random_init(const Hypergraph& h,
                                           const std::vector<std::size_t>& class_sizes,
                                           double tau, Rng& rng) {
  std::size_t total = 0;
  for (std::size_t size : class_sizes) {
    total += size;
  }
  if (total >= h.vertex_count()) {
    throw ValidationError("label classes must leave at least one vertex unlabeled: " +
                          std::to_string(total) + " labels for " +
                          std::to_string(h.vertex_count()) + " vertices");
  }
  SchellingState state;
  state.set_tau(tau);

  // Fisher-Yates shuffle of the canonical vertex order, then deal labels.
  std::vector<VertexId> order = h.vertex_list();
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng.below(i)]);
  }
  std::size_t cursor = 0;
  for (std::size_t cls = 0; cls < class_sizes.size(); ++cls) {
    for (std::size_t k = 0; k < class_sizes[cls]; ++k) {
      state.set_label(order[cursor++], static_cast<int>(cls));
    }
  }
  return state;
}

bool touches_group_edge(const Hypergraph& h, VertexId v) {
  for (const Edge& e : h.edges()) {
    if (e.size() > 1 && std::binary_search(e.begin(), e.end(), v)) {
      return true;
    }
  }
  return false;
}

std::optional<double> neighborhood_coefficient(const Hypergraph& h, const SchellingState& s,
                                               VertexId v) {
  const std::optional<int> own = s.label(v);
  if (!own.has_value()) {
    throw UnlabeledVertexError(v);
  }
  std::size_t constrained_edges = 0;
  double sum = 0.0;
  for (const Edge& e : h.edges()) {
    if (e.size() <= 1 || !std::binary_search(e.begin(), e.end(), v)) {
      continue;
    }
    std::size_t same = 0;
    for (VertexId other : e) {
      if (other != v && s.label(other) == own) {
        ++same;
      }
    }
    sum += static_cast<double>(same) / static_cast<double>(e.size() - 1);
    ++constrained_edges;
  }
  if (constrained_edges == 0) {
    return std::nullopt;
  }
  return sum / static_cast<double>(constrained_edges);
}

namespace {

bool vertex_satisfied(const Hypergraph& h, const SchellingState& s, VertexId v) {
  const std::optional<double> g = neighborhood_coefficient(h, s, v);
  return !g.has_value() || *g >= s.tau();
}

// Mean coefficient over labeled vertices that feel a constraint; NaN when
// there are none.
double mean_coefficient(const Hypergraph& h, const SchellingState& s) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& [v, label] : s.labels()) {
    const std::optional<double> g = neighborhood_coefficient(h, s, v);
    if (g.has_value()) {
      sum += *g;
      ++count;
    }
  }
  if (count == 0) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return sum / static_cast<double>(count);
}

}  // namespace

bool schelling_step(const Hypergraph& h, SchellingState& s, Rng& rng) {
  if (s.labels().empty()) {
    return false;
  }
  // Step 1: uniformly random labeled vertex.
  std::vector<VertexId> labeled;
  labeled.reserve(s.labeled_count());
  for (const auto& [v, label] : s.labels()) {
    labeled.push_back(v);
  }
  const VertexId chosen = labeled[rng.below(labeled.size())];

  // Step 2: its neighborhood coefficient. No constraint counts as satisfied.
  const std::optional<double> g = neighborhood_coefficient(h, s, chosen);
  if (!g.has_value() || *g >= s.tau()) {
    return false;
  }

  // Step 3: the label moves to a random unlabeled vertex that feels a
  // constraint; the chosen vertex becomes unlabeled.
  std::vector<VertexId> destinations;
  bool any_unlabeled = false;
  for (VertexId v : h.vertex_list()) {
    if (s.label(v).has_value()) {
      continue;
    }
    any_unlabeled = true;
    if (touches_group_edge(h, v)) {
      destinations.push_back(v);
    }
  }
  if (!any_unlabeled) {
    throw NoUnlabeledVertexError();
  }
  if (destinations.empty()) {
    return false;  // nowhere eligible to move this iteration
  }
  const VertexId target = destinations[rng.below(destinations.size())];
  const int label = *s.label(chosen);
  s.clear_label(chosen);
  s.set_label(target, label);
  return true;
}

SchellingResult schelling_run(const Hypergraph& h, SchellingState state, std::size_t max_iters,
                              Rng& rng) {
  SchellingResult result;
  result.trajectory.rows.push_back({0, mean_coefficient(h, state), 0});

  auto converged = [&]() {
    for (const auto& [v, label] : state.labels()) {
      if (!vertex_satisfied(h, state, v)) {
        return false;
      }
    }
    return true;
  };

  std::size_t iteration = 0;
  bool done = converged();
  while (!done && iteration < max_iters) {
    const bool moved = schelling_step(h, state, rng);
    ++iteration;
    result.trajectory.rows.push_back({iteration, mean_coefficient(h, state), moved ? 1u : 0u});
    done = converged();
  }

  result.state = std::move(state);
  result.iterations = iteration;
  result.converged = done;
  return result;
}

// ---------------------------------------------------------------------------
// SIR
// ---------------------------------------------------------------------------

char compartment_code(Compartment c) {
  switch (c) {
    case Compartment::susceptible: return 'S';
    case Compartment::infected: return 'I';
    case Compartment::recovered: return 'R';
  }
  return '?';
}

SirStates sir_step(const Hypergraph& h, const SirStates& current, double beta, double gamma,
                   Rng& rng) {
  const std::vector<VertexId> order = h.vertex_list();
  SirStates next = current;
  auto index_of = [&order](VertexId v) {
    return static_cast<std::size_t>(
        std::lower_bound(order.begin(), order.end(), v) - order.begin());
  };

  // Infections first, from the pre-step state.
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (current[i] != Compartment::susceptible) {
      continue;
    }
    std::size_t infected_contacts = 0;
    for (const Edge& e : h.edges()) {
      if (!std::binary_search(e.begin(), e.end(), order[i])) {
        continue;
      }
      for (VertexId other : e) {
        if (other != order[i] && current[index_of(other)] == Compartment::infected) {
          ++infected_contacts;
        }
      }
    }
    if (infected_contacts == 0) {
      continue;
    }
    const double p = 1.0 - std::pow(1.0 - beta, static_cast<double>(infected_contacts));
    if (rng.bernoulli(p)) {
      next[i] = Compartment::infected;
    }
  }

  // Then recoveries, one draw per pre-step infected vertex.
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (current[i] == Compartment::infected && rng.bernoulli(gamma)) {
      next[i] = Compartment::recovered;
    }
  }
  return next;
}

SirResult sir_run(const Hypergraph& h, const SirConfig& cfg, Rng& rng) {
  if (!(cfg.beta >= 0.0 && cfg.beta <= 1.0)) {
    throw InvalidProbabilityError(cfg.beta);
  }
  if (!(cfg.gamma >= 0.0 && cfg.gamma <= 1.0)) {
    throw InvalidProbabilityError(cfg.gamma);
  }
  for (VertexId v : cfg.initial_infected) {
    if (!h.has_vertex(v)) {
      throw UnknownVertexError(v);
    }
  }

  SirResult result;
  result.vertex_order = h.vertex_list();
  SirStates states(result.vertex_order.size(), Compartment::susceptible);
  for (VertexId v : cfg.initial_infected) {
    states[h.vertex_index(v)] = Compartment::infected;
  }

  auto record = [&](std::size_t step, const SirStates& st) {
    SirTrajectory::Row row;
    row.step = step;
    for (Compartment c : st) {
      if (c == Compartment::susceptible) ++row.susceptible;
      else if (c == Compartment::infected) ++row.infected;
      else ++row.recovered;
    }
    result.trajectory.rows.push_back(row);
  };

  record(0, states);
  for (std::size_t step = 1; step <= cfg.steps; ++step) {
    states = sir_step(h, states, cfg.beta, cfg.gamma, rng);
    record(step, states);
  }
  result.final_states = std::move(states);
  return result;
}

// ---------------------------------------------------------------------------
// Mutual information
// ---------------------------------------------------------------------------

namespace {

std::size_t bin_of(double value, double lo, double hi, std::size_t bins) {
  if (!(hi > lo)) {
    return 0;  // constant sequence: everything lands in one bin
  }
  const double width = (hi - lo) / static_cast<double>(bins);
  auto bin = static_cast<std::size_t>((value - lo) / width);
  return std::min(bin, bins - 1);  // the max value closes the last bin
}

}  // namespace

double mutual_information(const std::vector<double>& x, const std::vector<double>& y,
                          std::size_t bins) {
  if (x.size() != y.size()) {
    throw LengthMismatchError(x.size(), y.size());
  }
  if (x.empty()) {
    throw EmptyInputError();
  }
  if (bins == 0) {
    throw ValidationError("bin count must be at least 1");
  }

  const auto [x_lo, x_hi] = std::minmax_element(x.begin(), x.end());
  const auto [y_lo, y_hi] = std::minmax_element(y.begin(), y.end());

  std::vector<std::size_t> joint(bins * bins, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::size_t bx = bin_of(x[i], *x_lo, *x_hi, bins);
    const std::size_t by = bin_of(y[i], *y_lo, *y_hi, bins);
    ++joint[bx * bins + by];
  }

  // Marginals as row/column sums of the joint histogram, so the three
  // distributions are always consistent.
  std::vector<std::size_t> mx(bins, 0), my(bins, 0);
  for (std::size_t bx = 0; bx < bins; ++bx) {
    for (std::size_t by = 0; by < bins; ++by) {
      mx[bx] += joint[bx * bins + by];
      my[by] += joint[bx * bins + by];
    }
  }

  const double total = static_cast<double>(x.size());
  const double eps = std::numeric_limits<double>::epsilon();
  double mi = 0.0;
  for (std::size_t bx = 0; bx < bins; ++bx) {
    for (std::size_t by = 0; by < bins; ++by) {
      if (joint[bx * bins + by] == 0) {
        continue;
      }
      const double pxy = static_cast<double>(joint[bx * bins + by]) / total;
      const double px = static_cast<double>(mx[bx]) / total;
      const double py = static_cast<double>(my[by]) / total;
      // An occupied joint cell implies occupied marginals, so the epsilon
      // only ever fires on degenerate zero cells; it must not bias the rest.
      const double denom = px * py;
      mi += pxy * std::log2(pxy / (denom > 0.0 ? denom : eps));
    }
  }
  return mi;
}

}  // namespace hyperkit
