// Copyright 2026 The isingbench Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

// Benchmark instance families and their on-disk format:
//   - unweighted max-cut on random d-regular graphs, named "(N,d,s,u)"
//   - higher-order ("hoso") spin glasses on heavy-hex lattices
//   - planar heavy-hex spin glasses with couplings uniform in [-1, 1]

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isingbench/model.hpp"

namespace isingbench {

inline constexpr int kFormatVersion = 1;

struct Edge {
    SpinIndex u, v;
    double weight = 1.0;
    friend bool operator==(const Edge &, const Edge &) = default;
};

/// Simple undirected weighted graph. Edges are stored with u < v, sorted.
class Graph {
  public:
    Graph() = default;
    /// Throws std::invalid_argument on self-loops or duplicate edges and
    /// IndexError on out-of-range endpoints.
    Graph(std::size_t num_nodes, std::vector<Edge> edges);

    std::size_t num_nodes() const { return num_nodes_; }
    std::span<const Edge> edges() const { return edges_; }
    double total_weight() const;
    bool unweighted() const;

    std::vector<std::size_t> degrees() const;
    std::size_t max_degree() const;
    std::vector<std::vector<SpinIndex>> adjacency() const;

    friend bool operator==(const Graph &, const Graph &) = default;

  private:
    std::size_t num_nodes_ = 0;
    std::vector<Edge> edges_;
};

enum class Family { maxcut, hoso, planar_sg };
enum class Source { generated, imported };

std::string to_string(Family f);
Family family_from_string(std::string_view s);
std::string to_string(Source s);
Source source_from_string(std::string_view s);

struct Provenance {
    std::string generator;
    std::optional<std::uint64_t> seed;
    std::string triple_rule;
    friend bool operator==(const Provenance &, const Provenance &) = default;
};

struct InstanceMetadata {
    std::string name;
    Family family = Family::maxcut;
    /// Known optimum: cut value for max-cut, ground energy for spin glasses.
    std::optional<double> opt_value;
    Source source = Source::generated;
    Provenance provenance;
    friend bool operator==(const InstanceMetadata &, const InstanceMetadata &) = default;
};

/// Components of a "(N,d,s,u)" max-cut instance name.
struct MaxCutName {
    std::size_t n = 0;
    std::size_t d = 0;
    std::uint64_t seed = 0;
    bool unweighted = true;
    friend bool operator==(const MaxCutName &, const MaxCutName &) = default;
};

std::string format_maxcut_name(const MaxCutName &name);
/// Returns nullopt when `text` is not of the form "(N,d,s,u)" or "(N,d,s,w)".
std::optional<MaxCutName> parse_maxcut_name(std::string_view text);

/// A problem with its metadata. Max-cut instances also carry their graph;
/// `problem` is then maxcut_to_ising(*graph).
struct Instance {
    IsingProblem problem;
    InstanceMetadata meta;
    std::optional<Graph> graph;

    /// Optimum expressed as an energy of `problem`: W - 2*cut for max-cut,
    /// opt_value itself otherwise.
    std::optional<double> opt_energy() const;
    friend bool operator==(const Instance &, const Instance &) = default;
};

// --- max-cut ---------------------------------------------------------------

/// Uniform random simple d-regular graph by the pairing (configuration)
/// model with rejection of loops and multi-edges.
/// Throws InfeasibleError if n*d is odd or d >= n, GenerationError when
/// `retry_budget` pairings were all rejected.
Graph gen_random_regular(std::size_t n, std::size_t d, std::uint64_t seed, std::size_t retry_budget = 1000);

/// J_uv = +w_uv, so E(s) = W - 2 cut(s) and minimizing energy maximizes the cut.
IsingProblem maxcut_to_ising(const Graph &graph);

/// Sum of weights of edges whose endpoints disagree.
double cut_value(const Graph &graph, const SpinConfig &config);

Instance make_maxcut_instance(std::size_t n, std::size_t d, std::uint64_t seed);

// --- heavy-hex -------------------------------------------------------------

enum class TopologyKind { eagle127, heron133, imported, generated };

struct HeavyHexTopology {
    Graph graph;
    TopologyKind kind = TopologyKind::generated;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::string name() const;
};

/// "eagle127", "heron133" (bundled coupling maps) or "RxC" for a generated
/// lattice of R rows and C unit cells per row. Throws std::invalid_argument
/// for an unknown spec.
HeavyHexTopology gen_heavy_hex(std::string_view spec);

/// Rows of 4*cols+3 nodes joined by bridge nodes every fourth column,
/// alternating column phase 0/2 between successive row gaps.
HeavyHexTopology gen_heavy_hex_grid(std::size_t rows, std::size_t cols);

/// Wraps an external graph; throws std::invalid_argument if any degree exceeds 3.
HeavyHexTopology import_topology(Graph graph);

/// Parses the bundled edge-list format ("u v" per line, '#' comments,
/// an optional "# nodes N" line).
Graph parse_edge_list(std::string_view text);

// --- spin glasses ----------------------------------------------------------

enum class TripleRule {
    /// Every length-2 path (u, v, w) with v adjacent to both u and w.
    length2_paths,
    /// One triple per node of degree >= 2: the node and its two lowest-index neighbours.
    one_per_center,
};

std::string to_string(TripleRule r);
TripleRule triple_rule_from_string(std::string_view s);

std::vector<std::array<SpinIndex, 3>> select_triples(const Graph &graph, TripleRule rule);

/// Linear term on every node, quadratic on every edge, cubic on every triple
/// chosen by `rule`; all coefficients uniform in {-1, +1}.
Instance gen_hoso_instance(const HeavyHexTopology &topology, std::uint64_t seed,
                           TripleRule rule = TripleRule::length2_paths);

/// One coupling per edge, uniform in [-1, 1]; no linear terms.
IsingProblem gen_planar_spin_glass(const HeavyHexTopology &topology, std::uint64_t seed);

Instance make_planar_sg_instance(const HeavyHexTopology &topology, std::uint64_t seed);

// --- file format -----------------------------------------------------------

std::string instance_to_text(const Instance &instance);
/// Throws ParseError (with line and field when known; duplicate terms are
/// parse errors) and IndexError for out-of-range indices.
Instance instance_from_text(std::string_view text);

void save_instance(const std::filesystem::path &path, const Instance &instance);
Instance load_instance(const std::filesystem::path &path);

std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

}  // namespace isingbench
