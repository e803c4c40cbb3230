#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "hyperkit/dynamics.hpp"
#include "hyperkit/hypergraph.hpp"

namespace hyperkit {

inline constexpr const char* kFormatVersion = "1.0";

enum class GraphKind { undirected, directed, multilayer };

/// One persisted hypergraph of any of the three kinds. Unknown top-level JSON
/// fields survive a load/save round-trip through extra_fields.
struct HypergraphDocument {
  std::string format_version = kFormatVersion;
  std::variant<Hypergraph, DirectedHypergraph, MultilayerHypergraph> graph;
  nlohmann::ordered_json extra_fields = nlohmann::ordered_json::object();

  GraphKind kind() const { return static_cast<GraphKind>(graph.index()); }

  static HypergraphDocument wrap(Hypergraph h);
  static HypergraphDocument wrap(DirectedHypergraph h);
  static HypergraphDocument wrap(MultilayerHypergraph h);

  /// Undirected view: the graph itself, or the base of a directed graph.
  /// Throws SchemaError for multilayer documents.
  const Hypergraph& base() const;
};

/// Deterministic JSON text (fixed key order, two-space indent).
std::string serialize_document(const HypergraphDocument& doc);

/// Parses and validates. Throws ParseError on malformed JSON (with byte
/// position) and SchemaError naming the violated invariant otherwise.
HypergraphDocument parse_document(const std::string& text);

void save_document(const std::filesystem::path& path, const HypergraphDocument& doc);
HypergraphDocument load_document(const std::filesystem::path& path);

void save_hypergraph(const std::filesystem::path& path, const Hypergraph& h);
Hypergraph load_hypergraph(const std::filesystem::path& path);

/// Bipartite incidence edge list: one line `v<TAB>e<m>` per incidence, edges
/// in column order, members ascending. Consumable by ordinary graph tools.
void export_bipartite(const Hypergraph& h, const std::filesystem::path& path);
std::string bipartite_text(const Hypergraph& h);

/// CSV of the incidence matrix: header row of edge identifiers e0..e{M-1},
/// one row of 0/1 entries per vertex, canonical ordering.
void export_incidence_csv(const Hypergraph& h, const std::filesystem::path& path);
std::string incidence_csv_text(const Hypergraph& h);

/// Trajectory CSVs: `step,S,I,R` for epidemics, `step,mean_G,moves` for
/// segregation runs, one row per recorded step.
void export_trajectory_csv(const SirTrajectory& t, const std::filesystem::path& path);
void export_trajectory_csv(const SchellingTrajectory& t, const std::filesystem::path& path);
std::string trajectory_csv_text(const SirTrajectory& t);
std::string trajectory_csv_text(const SchellingTrajectory& t);

}  // namespace hyperkit
