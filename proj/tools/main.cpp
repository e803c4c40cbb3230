// hyperkit: batch front end for hypergraph generation, analysis, and
// simulation. Every run that writes files also writes a manifest
// (<out>.manifest.json) from which `hyperkit replay` reproduces the outputs
// byte for byte.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperkit/algorithms.hpp"
#include "hyperkit/dynamics.hpp"
#include "hyperkit/errors.hpp"
#include "hyperkit/generators.hpp"
#include "hyperkit/hypergraph.hpp"
#include "hyperkit/io.hpp"
#include "hyperkit/metrics.hpp"
#include "hyperkit/version.hpp"

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;
using namespace hyperkit;

// ---- logging (HYPERKIT_LOG: 0/off, 1/info, 2/debug) ------------------------

int log_level() {
  static const int level = [] {
    const char* raw = std::getenv("HYPERKIT_LOG");
    if (raw == nullptr) return 0;
    const std::string v(raw);
    if (v.empty() || v == "0" || v == "off" || v == "quiet") return 0;
    if (v == "2" || v == "debug") return 2;
    return 1;
  }();
  return level;
}

std::mutex log_mutex;

void log_info(const std::string& msg) {
  if (log_level() < 1) return;
  std::lock_guard<std::mutex> lock(log_mutex);
  std::cerr << "[hyperkit] " << msg << '\n';
}

void log_debug(const std::string& msg) {
  if (log_level() < 2) return;
  std::lock_guard<std::mutex> lock(log_mutex);
  std::cerr << "[hyperkit] " << msg << '\n';
}

// ---- small helpers ---------------------------------------------------------

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed while writing '" + path.string() + "'");
  log_info("wrote " + path.string());
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed while reading '" + path.string() + "'");
  return buffer.str();
}

std::string run_tag(std::size_t k) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "_run%03zu", k);
  return buf;
}

// g.json, 4 -> g_run004.json (suffix lands before the extension)
fs::path numbered_file(const fs::path& base, std::size_t k) {
  fs::path p = base;
  p.replace_filename(base.stem().string() + run_tag(k) + base.extension().string());
  return p;
}

fs::path sibling_file(const fs::path& base, const std::string& suffix) {
  fs::path p = base;
  p.replace_filename(base.stem().string() + suffix);
  return p;
}

json json_nan_safe(double x) { return std::isnan(x) ? json(nullptr) : json(x); }

// ---- manifest-parameter accessors ------------------------------------------
// Handlers read everything from a parameters object so that `replay` and the
// flag front end share one code path. Errors name the parameter.

[[noreturn]] void param_fail(const std::string& what) { throw SchemaError(what); }

const json& require_param(const json& p, const char* key) {
  auto it = p.find(key);
  if (it == p.end()) param_fail(std::string("missing parameter '") + key + "'");
  return *it;
}

std::uint64_t require_u64(const json& p, const char* key) {
  const json& v = require_param(p, key);
  if (!v.is_number_unsigned()) {
    param_fail(std::string("parameter '") + key + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

double require_number(const json& p, const char* key) {
  const json& v = require_param(p, key);
  if (!v.is_number()) param_fail(std::string("parameter '") + key + "' must be a number");
  return v.get<double>();
}

std::string require_string(const json& p, const char* key) {
  const json& v = require_param(p, key);
  if (!v.is_string()) param_fail(std::string("parameter '") + key + "' must be a string");
  return v.get<std::string>();
}

std::optional<std::uint64_t> optional_u64(const json& p, const char* key) {
  auto it = p.find(key);
  if (it == p.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_unsigned()) {
    param_fail(std::string("parameter '") + key + "' must be a non-negative integer");
  }
  return it->get<std::uint64_t>();
}

std::optional<std::string> optional_string(const json& p, const char* key) {
  auto it = p.find(key);
  if (it == p.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) param_fail(std::string("parameter '") + key + "' must be a string");
  return it->get<std::string>();
}

std::size_t runs_of(const json& p) {
  const std::uint64_t runs = optional_u64(p, "runs").value_or(1);
  if (runs == 0) throw ValidationError("--runs must be at least 1");
  return static_cast<std::size_t>(runs);
}

// ---- parallel fan-out -------------------------------------------------------

void run_parallel(std::size_t runs, const std::function<void(std::size_t)>& fn) {
  if (runs == 1) {
    fn(0);
    return;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  const std::size_t workers = std::min<std::size_t>(runs, hw == 0 ? 4 : hw);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto worker = [&] {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= runs) return;
      try {
        fn(k);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

// ---- command handlers -------------------------------------------------------

struct CommandResult {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::string stdout_text;  // printed when the command has no output file
};

Hypergraph load_base(const std::string& path, CommandResult& result) {
  result.inputs.push_back(path);
  return load_document(path).base();
}

CommandResult run_generate(const json& p) {
  const std::string model = require_string(p, "model");
  const std::uint64_t n = require_u64(p, "n");
  const double prob = require_number(p, "p");
  const RngSeed seed = require_u64(p, "seed");
  const fs::path out = require_string(p, "out");
  const std::size_t runs = runs_of(p);

  std::function<Hypergraph(RngSeed)> make;
  if (model == "simple-matrix" || model == "simple-bipartite") {
    const auto m = optional_u64(p, "m");
    if (!m) throw ValidationError("model " + model + " requires --m (number of hyperedges)");
    if (model == "simple-matrix") {
      make = [=](RngSeed s) { return simple_matrix(n, *m, prob, s); };
    } else {
      make = [=](RngSeed s) { return simple_bipartite(n, *m, prob, s); };
    }
  } else if (model == "simple-powersets") {
    make = [=](RngSeed s) { return simple_powersets(n, prob, s); };
  } else if (model == "simple-order" || model == "k-uniform") {
    const auto k = optional_u64(p, "k");
    if (!k) throw ValidationError("model " + model + " requires --k (maximum edge size)");
    if (model == "simple-order") {
      make = [=](RngSeed s) { return simple_order(n, *k, prob, s); };
    } else {
      make = [=](RngSeed s) { return k_uniform(n, *k, prob, s); };
    }
  } else {
    throw ValidationError("unknown model '" + model +
                          "', expected simple-matrix, simple-bipartite, simple-powersets, "
                          "simple-order, or k-uniform");
  }

  CommandResult result;
  if (runs == 1) {
    save_hypergraph(out, make(seed));
    log_info("wrote " + out.string());
    result.outputs.push_back(out.string());
    return result;
  }

  struct Record {
    std::size_t vertices = 0;
    std::size_t edges = 0;
  };
  std::vector<Record> records(runs);
  run_parallel(runs, [&](std::size_t k) {
    const Hypergraph h = make(seed + k);
    records[k] = {h.vertex_count(), h.edge_count()};
    save_hypergraph(numbered_file(out, k), h);
    log_debug("run " + std::to_string(k) + " done");
  });

  json summary;
  summary["tool"] = "hyperkit";
  summary["subcommand"] = "generate";
  summary["model"] = model;
  summary["runs"] = runs;
  summary["base_seed"] = seed;
  json per_run = json::array();
  double edge_sum = 0.0;
  for (std::size_t k = 0; k < runs; ++k) {
    json r;
    r["run"] = k;
    r["seed"] = seed + k;
    r["path"] = numbered_file(out, k).string();
    r["vertices"] = records[k].vertices;
    r["edges"] = records[k].edges;
    per_run.push_back(std::move(r));
    edge_sum += static_cast<double>(records[k].edges);
  }
  summary["per_run"] = std::move(per_run);
  summary["mean_edges"] = edge_sum / static_cast<double>(runs);

  const fs::path summary_out = sibling_file(out, "_summary.json");
  write_text(summary_out, summary.dump(2) + "\n");

  for (std::size_t k = 0; k < runs; ++k) result.outputs.push_back(numbered_file(out, k).string());
  result.outputs.push_back(summary_out.string());
  return result;
}

CommandResult run_metrics(const json& p) {
  CommandResult result;
  const Hypergraph h = load_base(require_string(p, "in"), result);

  json report;
  report["vertices"] = h.vertex_count();
  report["edges"] = h.edge_count();
  auto put = [&](const char* name, auto&& compute) {
    try {
      report[name] = compute();
    } catch (const NoEdgesError&) {
      report[name] = nullptr;
      report[std::string(name) + "_reason"] = "no edges";
    } catch (const EmptyHypergraphError&) {
      report[name] = nullptr;
      report[std::string(name) + "_reason"] = "no vertices";
    }
  };
  put("density", [&] { return json(density(h)); });
  put("girth", [&] { return json(girth(h)); });
  put("average_vertex_degree", [&] { return json(average_vertex_degree(h)); });
  put("average_edge_size", [&] { return json(average_edge_size(h)); });

  const std::string text = report.dump(2) + "\n";
  if (auto out = optional_string(p, "out")) {
    write_text(*out, text);
    result.outputs.push_back(*out);
  }
  result.stdout_text = text;
  return result;
}

CommandResult run_analyze(const json& p) {
  CommandResult result;
  const std::string op = require_string(p, "op");
  const Hypergraph h = load_base(require_string(p, "in"), result);

  std::string text;
  if (op == "components") {
    text = json(connected_components(h)).dump(2) + "\n";
  } else if (op == "reduce") {
    text = serialize_document(HypergraphDocument::wrap(simple_reduction(h)));
  } else if (op == "expand") {
    const ExpansionMode mode =
        expansion_mode_from_string(optional_string(p, "mode").value_or("clique"));
    const Graph g = graph_expansion(h, mode);
    for (const auto& [a, b] : g.edges) {
      text += g.node_name(a);
      text += '\t';
      text += g.node_name(b);
      text += '\n';
    }
  } else {
    throw ValidationError("unknown analyze op '" + op +
                          "', expected components, reduce, or expand");
  }

  if (auto out = optional_string(p, "out")) {
    write_text(*out, text);
    result.outputs.push_back(*out);
  } else {
    result.stdout_text = text;
  }
  return result;
}

// Shared shape of the three simulate kinds: per-run trajectory CSV plus
// final-state JSON, optional _summary.json across runs.
struct SimulatedRun {
  std::string trajectory_csv;
  json final_state;
  json summary_entry;  // one row of the multi-run summary
};

CommandResult run_simulation(const json& p, const std::string& kind,
                             const std::function<SimulatedRun(RngSeed)>& simulate_one,
                             const std::function<json(const std::vector<SimulatedRun>&)>& aggregate) {
  CommandResult result;
  result.inputs.push_back(require_string(p, "in"));
  const RngSeed seed = require_u64(p, "seed");
  const std::string out = require_string(p, "out");
  const std::size_t runs = runs_of(p);

  std::vector<SimulatedRun> done(runs);
  run_parallel(runs, [&](std::size_t k) {
    done[k] = simulate_one(seed + k);
    const std::string prefix = runs == 1 ? out : out + run_tag(k);
    write_text(prefix + "_trajectory.csv", done[k].trajectory_csv);
    write_text(prefix + "_final.json", done[k].final_state.dump(2) + "\n");
    log_debug(kind + " run " + std::to_string(k) + " done");
  });

  for (std::size_t k = 0; k < runs; ++k) {
    const std::string prefix = runs == 1 ? out : out + run_tag(k);
    result.outputs.push_back(prefix + "_trajectory.csv");
    result.outputs.push_back(prefix + "_final.json");
  }

  if (runs > 1) {
    json summary;
    summary["tool"] = "hyperkit";
    summary["subcommand"] = "simulate-" + kind;
    summary["runs"] = runs;
    summary["base_seed"] = seed;
    json per_run = json::array();
    for (std::size_t k = 0; k < runs; ++k) {
      json r;
      r["run"] = k;
      r["seed"] = seed + k;
      for (const auto& [key, value] : done[k].summary_entry.items()) r[key] = value;
      per_run.push_back(std::move(r));
    }
    summary["per_run"] = std::move(per_run);
    // items() must run on an lvalue: the proxy would dangle on a temporary.
    const json aggregated = aggregate(done);
    for (const auto& [key, value] : aggregated.items()) summary[key] = value;
    const std::string summary_out = out + "_summary.json";
    write_text(summary_out, summary.dump(2) + "\n");
    result.outputs.push_back(summary_out);
  }
  return result;
}

CommandResult run_simulate_sir(const json& p) {
  const std::string in = require_string(p, "in");
  const double beta = require_number(p, "beta");
  const double gamma = require_number(p, "gamma");
  const std::size_t steps = static_cast<std::size_t>(require_u64(p, "steps"));
  const std::size_t initial = static_cast<std::size_t>(require_u64(p, "initial_infected"));
  const Hypergraph h = load_document(in).base();

  if (initial > h.vertex_count()) {
    throw ValidationError("--initial-infected " + std::to_string(initial) + " exceeds the " +
                          std::to_string(h.vertex_count()) + " vertices of the input");
  }

  auto simulate_one = [&, initial, beta, gamma, steps](RngSeed run_seed) {
    Rng rng(run_seed);
    // Seed infections: a uniform sample of `initial` distinct vertices, drawn
    // by partial Fisher-Yates over the canonical order.
    std::vector<VertexId> pool = h.vertex_list();
    for (std::size_t i = 0; i < initial; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    SirConfig cfg;
    cfg.beta = beta;
    cfg.gamma = gamma;
    cfg.initial_infected.insert(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(initial));
    cfg.steps = steps;
    const SirResult r = sir_run(h, cfg, rng);

    std::vector<double> series_s, series_i;
    for (const auto& row : r.trajectory.rows) {
      series_s.push_back(static_cast<double>(row.susceptible));
      series_i.push_back(static_cast<double>(row.infected));
    }
    const double mi = mutual_information(series_s, series_i, 10);

    const auto& last = r.trajectory.rows.back();
    json final_state;
    final_state["kind"] = "sir_final_state";
    final_state["seed"] = run_seed;
    final_state["beta"] = beta;
    final_state["gamma"] = gamma;
    final_state["steps"] = steps;
    final_state["initial_infected"] = json(std::vector<VertexId>(cfg.initial_infected.begin(),
                                                                 cfg.initial_infected.end()));
    json counts;
    counts["S"] = last.susceptible;
    counts["I"] = last.infected;
    counts["R"] = last.recovered;
    final_state["final_counts"] = std::move(counts);
    final_state["vertices"] = json(r.vertex_order);
    std::string codes;
    for (Compartment c : r.final_states) codes += compartment_code(c);
    final_state["compartments"] = codes;  // one character per vertex, canonical order
    final_state["mutual_information_SI"] = mi;

    json entry;
    entry["final_S"] = last.susceptible;
    entry["final_I"] = last.infected;
    entry["final_R"] = last.recovered;
    entry["mutual_information_SI"] = mi;

    return SimulatedRun{trajectory_csv_text(r.trajectory), std::move(final_state),
                        std::move(entry)};
  };

  auto aggregate = [](const std::vector<SimulatedRun>& done) {
    double s = 0.0, i = 0.0, r = 0.0;
    for (const SimulatedRun& run : done) {
      s += run.summary_entry["final_S"].get<double>();
      i += run.summary_entry["final_I"].get<double>();
      r += run.summary_entry["final_R"].get<double>();
    }
    const double n = static_cast<double>(done.size());
    json agg;
    agg["mean_final_S"] = s / n;
    agg["mean_final_I"] = i / n;
    agg["mean_final_R"] = r / n;
    return agg;
  };

  return run_simulation(p, "sir", simulate_one, aggregate);
}

CommandResult run_simulate_schelling(const json& p) {
  const std::string in = require_string(p, "in");
  const std::size_t labels = static_cast<std::size_t>(require_u64(p, "labels"));
  const std::size_t per_label = static_cast<std::size_t>(require_u64(p, "per_label"));
  const double tau = require_number(p, "tau");
  const std::size_t iters = static_cast<std::size_t>(require_u64(p, "iters"));
  const Hypergraph h = load_document(in).base();

  auto simulate_one = [&, labels, per_label, tau, iters](RngSeed run_seed) {
    Rng rng(run_seed);
    const std::vector<std::size_t> class_sizes(labels, per_label);
    SchellingState state = SchellingState::random_init(h, class_sizes, tau, rng);
    const SchellingResult r = schelling_run(h, std::move(state), iters, rng);

    unsigned long moves_total = 0;
    for (const auto& row : r.trajectory.rows) moves_total += row.moves;
    const double final_mean = r.trajectory.rows.back().mean_coefficient;

    json final_state;
    final_state["kind"] = "schelling_final_state";
    final_state["seed"] = run_seed;
    final_state["tau"] = tau;
    final_state["labels"] = labels;
    final_state["per_label"] = per_label;
    final_state["max_iters"] = iters;
    final_state["iterations_run"] = r.iterations;
    final_state["converged"] = r.converged;
    final_state["moves_total"] = moves_total;
    final_state["final_mean_G"] = json_nan_safe(final_mean);
    json vertex_labels = json::object();
    for (const auto& [v, label] : r.state.labels()) {
      vertex_labels[std::to_string(v)] = label;
    }
    final_state["vertex_labels"] = std::move(vertex_labels);

    json entry;
    entry["iterations_run"] = r.iterations;
    entry["converged"] = r.converged;
    entry["moves_total"] = moves_total;
    entry["final_mean_G"] = json_nan_safe(final_mean);

    return SimulatedRun{trajectory_csv_text(r.trajectory), std::move(final_state),
                        std::move(entry)};
  };

  auto aggregate = [](const std::vector<SimulatedRun>& done) {
    double mean_sum = 0.0;
    std::size_t defined = 0;
    std::size_t converged = 0;
    for (const SimulatedRun& run : done) {
      const json& g = run.summary_entry["final_mean_G"];
      if (!g.is_null()) {
        mean_sum += g.get<double>();
        ++defined;
      }
      if (run.summary_entry["converged"].get<bool>()) ++converged;
    }
    json agg;
    agg["converged_runs"] = converged;
    agg["mean_final_G"] = defined == 0 ? json(nullptr) : json(mean_sum / static_cast<double>(defined));
    return agg;
  };

  return run_simulation(p, "schelling", simulate_one, aggregate);
}

CommandResult run_simulate_walk(const json& p) {
  const std::string in = require_string(p, "in");
  const VertexId start = static_cast<VertexId>(require_u64(p, "start"));
  const std::size_t steps = static_cast<std::size_t>(require_u64(p, "steps"));
  const std::string variant_name = optional_string(p, "variant").value_or("standard");
  WalkVariant variant;
  if (variant_name == "standard") {
    variant = WalkVariant::standard;
  } else if (variant_name == "lazy") {
    variant = WalkVariant::lazy;
  } else {
    throw ValidationError("unknown walk variant '" + variant_name +
                          "', expected standard or lazy");
  }
  const Hypergraph h = load_document(in).base();

  auto simulate_one = [&, start, steps, variant](RngSeed run_seed) {
    Rng rng(run_seed);
    const std::vector<VertexId> sequence = random_walk(h, start, steps, variant, rng);

    std::string csv = "step,vertex\n";
    for (std::size_t i = 0; i < sequence.size(); ++i) {
      csv += std::to_string(i) + ',' + std::to_string(sequence[i]) + '\n';
    }

    json final_state;
    final_state["kind"] = "walk_final_state";
    final_state["seed"] = run_seed;
    final_state["start"] = start;
    final_state["steps"] = steps;
    final_state["variant"] = variant_name;
    final_state["final_vertex"] = sequence.back();

    json entry;
    entry["final_vertex"] = sequence.back();

    return SimulatedRun{std::move(csv), std::move(final_state), std::move(entry)};
  };

  auto aggregate = [](const std::vector<SimulatedRun>& done) {
    std::map<std::string, std::size_t> counts;
    for (const SimulatedRun& run : done) {
      ++counts[run.summary_entry["final_vertex"].dump()];
    }
    json agg;
    json hist = json::object();
    for (const auto& [vertex, count] : counts) hist[vertex] = count;
    agg["final_vertex_counts"] = std::move(hist);
    return agg;
  };

  return run_simulation(p, "walk", simulate_one, aggregate);
}

// ---- dispatch, manifests, replay --------------------------------------------

CommandResult dispatch(const std::string& subcommand, const json& params) {
  if (subcommand == "generate") return run_generate(params);
  if (subcommand == "metrics") return run_metrics(params);
  if (subcommand == "analyze") return run_analyze(params);
  if (subcommand == "simulate-sir") return run_simulate_sir(params);
  if (subcommand == "simulate-schelling") return run_simulate_schelling(params);
  if (subcommand == "simulate-walk") return run_simulate_walk(params);
  throw SchemaError("unknown subcommand '" + subcommand + "' in manifest");
}

void write_manifest(const std::string& subcommand, const json& params,
                    const CommandResult& result, const fs::path& manifest_path) {
  json m;
  m["tool"] = "hyperkit";
  m["tool_version"] = kVersion;
  m["subcommand"] = subcommand;
  m["parameters"] = params;
  m["seed"] = params.contains("seed") ? params.at("seed") : json(nullptr);
  m["inputs"] = json(result.inputs);
  m["outputs"] = json(result.outputs);
  write_text(manifest_path, m.dump(2) + "\n");
}

// Runs a subcommand coming from the flag front end: execute, then drop the
// manifest next to the primary output (nothing is written for stdout-only
// invocations).
int execute(const std::string& subcommand, const json& params,
            const std::optional<std::string>& manifest_anchor) {
  const CommandResult result = dispatch(subcommand, params);
  if (manifest_anchor) {
    write_manifest(subcommand, params, result, *manifest_anchor + ".manifest.json");
  }
  if (!result.stdout_text.empty()) std::cout << result.stdout_text;
  return 0;
}

int replay_manifest(const std::string& path) {
  json m;
  try {
    m = json::parse(read_text(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!m.is_object()) throw SchemaError("manifest root must be a JSON object");
  const json& tool = require_param(m, "tool");
  if (!tool.is_string() || tool.get<std::string>() != "hyperkit") {
    throw SchemaError("manifest was not produced by hyperkit");
  }
  const std::string subcommand = require_string(m, "subcommand");
  const json& params = require_param(m, "parameters");
  if (!params.is_object()) throw SchemaError("manifest parameters must be an object");

  log_info("replaying " + subcommand + " from " + path);
  const CommandResult result = dispatch(subcommand, params);
  if (!result.stdout_text.empty()) std::cout << result.stdout_text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperkit: hypergraph generation, analysis, and simulation"};
  app.set_version_flag("--version", hyperkit::kVersion);
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "Sample a random hypergraph and save it");
  std::string gen_model;
  std::uint64_t gen_n = 0;
  std::optional<std::uint64_t> gen_m, gen_k;
  double gen_p = 0.0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  std::uint64_t gen_runs = 1;
  generate->add_option("--model", gen_model,
                       "simple-matrix | simple-bipartite | simple-powersets | simple-order | "
                       "k-uniform")
      ->required();
  generate->add_option("--n", gen_n, "number of vertices")->required();
  generate->add_option("--m", gen_m, "number of hyperedges (matrix/bipartite models)");
  generate->add_option("--k", gen_k, "edge-size bound (simple-order) or exact size (k-uniform)");
  generate->add_option("--p", gen_p, "inclusion probability")->required();
  generate->add_option("--seed", gen_seed, "RNG seed")->required();
  generate->add_option("-o,--out", gen_out, "output document path")->required();
  generate->add_option("--runs", gen_runs, "independent seeded runs (seed+k each)");

  // metrics
  auto* metrics = app.add_subcommand("metrics", "Report structural metrics of a document");
  std::string met_in;
  std::optional<std::string> met_out;
  metrics->add_option("-i,--in", met_in, "input document")->required();
  metrics->add_option("-o,--out", met_out, "optional output JSON path");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Components, reduction, or graph expansion");
  std::string ana_in, ana_op;
  std::string ana_mode = "clique";
  std::optional<std::string> ana_out;
  analyze->add_option("-i,--in", ana_in, "input document")->required();
  analyze->add_option("--op", ana_op, "components | reduce | expand")->required();
  analyze->add_option("--mode", ana_mode, "expansion mode: clique | star");
  analyze->add_option("-o,--out", ana_out, "output path (stdout when omitted)");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Run a seeded dynamic process");
  simulate->require_subcommand(1);

  auto* sir = simulate->add_subcommand("sir", "SIR epidemic");
  std::string sir_in;
  double sir_beta = 0.0, sir_gamma = 0.0;
  std::uint64_t sir_steps = 0, sir_initial = 1, sir_seed = 0, sir_runs = 1;
  std::optional<std::string> sir_out;
  sir->add_option("-i,--in", sir_in, "input document")->required();
  sir->add_option("--beta", sir_beta, "transmission rate in [0,1]")->required();
  sir->add_option("--gamma", sir_gamma, "recovery rate in [0,1]")->required();
  sir->add_option("--steps", sir_steps, "number of synchronous steps")->required();
  sir->add_option("--initial-infected", sir_initial, "number of seed infections");
  sir->add_option("--seed", sir_seed, "RNG seed")->required();
  sir->add_option("-o,--out", sir_out, "output prefix (default: input stem + _sir)");
  sir->add_option("--runs", sir_runs, "independent seeded runs (seed+k each)");

  auto* schelling = simulate->add_subcommand("schelling", "Generalized Schelling segregation");
  std::string sch_in;
  std::uint64_t sch_labels = 0, sch_per_label = 0, sch_iters = 0, sch_seed = 0, sch_runs = 1;
  double sch_tau = 0.0;
  std::optional<std::string> sch_out;
  schelling->add_option("-i,--in", sch_in, "input document")->required();
  schelling->add_option("--labels", sch_labels, "number of label classes")->required();
  schelling->add_option("--per-label", sch_per_label, "vertices per class")->required();
  schelling->add_option("--tau", sch_tau, "tolerance threshold in [0,1]")->required();
  schelling->add_option("--iters", sch_iters, "maximum iterations")->required();
  schelling->add_option("--seed", sch_seed, "RNG seed")->required();
  schelling->add_option("-o,--out", sch_out, "output prefix (default: input stem + _schelling)");
  schelling->add_option("--runs", sch_runs, "independent seeded runs (seed+k each)");

  auto* walk = simulate->add_subcommand("walk", "Random walk over the hypergraph");
  std::string walk_in;
  std::uint64_t walk_start = 0, walk_steps = 0, walk_seed = 0, walk_runs = 1;
  std::string walk_variant = "standard";
  std::optional<std::string> walk_out;
  walk->add_option("-i,--in", walk_in, "input document")->required();
  walk->add_option("--start", walk_start, "start vertex")->required();
  walk->add_option("--steps", walk_steps, "number of transitions")->required();
  walk->add_option("--variant", walk_variant, "standard | lazy");
  walk->add_option("--seed", walk_seed, "RNG seed")->required();
  walk->add_option("-o,--out", walk_out, "output prefix (default: input stem + _walk)");
  walk->add_option("--runs", walk_runs, "independent seeded runs (seed+k each)");

  // replay
  auto* replay = app.add_subcommand("replay", "Re-run a manifest and reproduce its outputs");
  std::string replay_path;
  replay->add_option("--manifest", replay_path, "manifest path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // The default simulate output prefix sits next to the input file.
  auto default_prefix = [](const std::string& in, const char* kind) {
    fs::path p(in);
    p.replace_filename(p.stem().string() + "_" + kind);
    return p.string();
  };

  try {
    if (generate->parsed()) {
      json p;
      p["model"] = gen_model;
      p["n"] = gen_n;
      if (gen_m) p["m"] = *gen_m;
      if (gen_k) p["k"] = *gen_k;
      p["p"] = gen_p;
      p["seed"] = gen_seed;
      p["out"] = gen_out;
      p["runs"] = gen_runs;
      return execute("generate", p, gen_out);
    }
    if (metrics->parsed()) {
      json p;
      p["in"] = met_in;
      if (met_out) p["out"] = *met_out;
      return execute("metrics", p, met_out);
    }
    if (analyze->parsed()) {
      json p;
      p["in"] = ana_in;
      p["op"] = ana_op;
      p["mode"] = ana_mode;
      if (ana_out) p["out"] = *ana_out;
      return execute("analyze", p, ana_out);
    }
    if (simulate->parsed()) {
      if (sir->parsed()) {
        const std::string out = sir_out.value_or(default_prefix(sir_in, "sir"));
        json p;
        p["in"] = sir_in;
        p["beta"] = sir_beta;
        p["gamma"] = sir_gamma;
        p["steps"] = sir_steps;
        p["initial_infected"] = sir_initial;
        p["seed"] = sir_seed;
        p["out"] = out;
        p["runs"] = sir_runs;
        return execute("simulate-sir", p, out);
      }
      if (schelling->parsed()) {
        const std::string out = sch_out.value_or(default_prefix(sch_in, "schelling"));
        json p;
        p["in"] = sch_in;
        p["labels"] = sch_labels;
        p["per_label"] = sch_per_label;
        p["tau"] = sch_tau;
        p["iters"] = sch_iters;
        p["seed"] = sch_seed;
        p["out"] = out;
        p["runs"] = sch_runs;
        return execute("simulate-schelling", p, out);
      }
      if (walk->parsed()) {
        const std::string out = walk_out.value_or(default_prefix(walk_in, "walk"));
        json p;
        p["in"] = walk_in;
        p["start"] = walk_start;
        p["steps"] = walk_steps;
        p["variant"] = walk_variant;
        p["seed"] = walk_seed;
        p["out"] = out;
        p["runs"] = walk_runs;
        return execute("simulate-walk", p, out);
      }
    }
    if (replay->parsed()) {
      return replay_manifest(replay_path);
    }
    std::cerr << "error: no subcommand selected\n";
    return 2;
  } catch (const hyperkit::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const hyperkit::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
