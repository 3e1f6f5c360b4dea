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

#include "isingbench/instances.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "isingbench/errors.hpp"
#include "isingbench/rng.hpp"
#include "topology_data.hpp"

namespace isingbench {

using nlohmann::json;

// --- Graph -------------------------------------------------------------------

Graph::Graph(std::size_t num_nodes, std::vector<Edge> edges) : num_nodes_(num_nodes) {
    for (auto &e : edges) {
        if (e.u >= num_nodes || e.v >= num_nodes) {
            throw IndexError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range for " +
                             std::to_string(num_nodes) + " nodes");
        }
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop on node " + std::to_string(e.u));
        }
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge &a, const Edge &b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (std::size_t k = 1; k < edges.size(); ++k) {
        if (edges[k].u == edges[k - 1].u && edges[k].v == edges[k - 1].v) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(edges[k].u) + "," +
                                        std::to_string(edges[k].v) + ")");
        }
    }
    edges_ = std::move(edges);
}

double Graph::total_weight() const {
    double w = 0.0;
    for (const auto &e : edges_) w += e.weight;
    return w;
}

bool Graph::unweighted() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge &e) { return e.weight == 1.0; });
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> deg(num_nodes_, 0);
    for (const auto &e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

std::size_t Graph::max_degree() const {
    const auto deg = degrees();
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::vector<std::vector<SpinIndex>> Graph::adjacency() const {
    std::vector<std::vector<SpinIndex>> adj(num_nodes_);
    for (const auto &e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto &nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

// --- enums and names -------------------------------------------------------

std::string to_string(Family f) {
    switch (f) {
        case Family::maxcut: return "maxcut";
        case Family::hoso: return "hoso";
        case Family::planar_sg: return "planar_sg";
    }
    return "?";
}

Family family_from_string(std::string_view s) {
    if (s == "maxcut") return Family::maxcut;
    if (s == "hoso") return Family::hoso;
    if (s == "planar_sg" || s == "planar-sg") return Family::planar_sg;
    throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

std::string to_string(Source s) { return s == Source::generated ? "generated" : "imported"; }

Source source_from_string(std::string_view s) {
    if (s == "generated") return Source::generated;
    if (s == "imported") return Source::imported;
    throw std::invalid_argument("unknown source '" + std::string(s) + "'");
}

std::string to_string(TripleRule r) {
    return r == TripleRule::length2_paths ? "length2_paths" : "one_per_center";
}

TripleRule triple_rule_from_string(std::string_view s) {
    if (s == "length2_paths") return TripleRule::length2_paths;
    if (s == "one_per_center") return TripleRule::one_per_center;
    throw std::invalid_argument("unknown triple rule '" + std::string(s) + "'");
}

std::string format_maxcut_name(const MaxCutName &name) {
    return "(" + std::to_string(name.n) + "," + std::to_string(name.d) + "," + std::to_string(name.seed) + "," +
           (name.unweighted ? "u" : "w") + ")";
}

namespace {

template <typename T>
bool parse_uint(std::string_view s, T &out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

std::optional<MaxCutName> parse_maxcut_name(std::string_view text) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') return std::nullopt;
    text = text.substr(1, text.size() - 2);
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= text.size(); ++k) {
        if (k == text.size() || text[k] == ',') {
            parts.push_back(text.substr(start, k - start));
            start = k + 1;
        }
    }
    if (parts.size() != 4) return std::nullopt;
    MaxCutName out;
    if (!parse_uint(parts[0], out.n) || !parse_uint(parts[1], out.d) || !parse_uint(parts[2], out.seed)) {
        return std::nullopt;
    }
    if (parts[3] == "u") {
        out.unweighted = true;
    } else if (parts[3] == "w") {
        out.unweighted = false;
    } else {
        return std::nullopt;
    }
    return out;
}

std::optional<double> Instance::opt_energy() const {
    if (!meta.opt_value) return std::nullopt;
    if (meta.family == Family::maxcut && graph) {
        return graph->total_weight() - 2.0 * *meta.opt_value;
    }
    return meta.opt_value;
}

// --- max-cut ---------------------------------------------------------------

Graph gen_random_regular(std::size_t n, std::size_t d, std::uint64_t seed, std::size_t retry_budget) {
    if ((n * d) % 2 != 0) {
        throw InfeasibleError("no " + std::to_string(d) + "-regular graph on " + std::to_string(n) +
                              " nodes: n*d is odd");
    }
    if (d >= n) {
        throw InfeasibleError("degree must be smaller than the node count");
    }
    Rng rng(seed);
    std::vector<SpinIndex> stubs;
    stubs.reserve(n * d);
    for (std::size_t attempt = 0; attempt < retry_budget; ++attempt) {
        stubs.clear();
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t k = 0; k < d; ++k) stubs.push_back(static_cast<SpinIndex>(v));
        }
        rng.shuffle(std::span<SpinIndex>(stubs));
        std::set<std::pair<SpinIndex, SpinIndex>> seen;
        std::vector<Edge> edges;
        bool ok = true;
        for (std::size_t k = 0; k + 1 < stubs.size(); k += 2) {
            auto a = std::min(stubs[k], stubs[k + 1]);
            auto b = std::max(stubs[k], stubs[k + 1]);
            if (a == b || !seen.insert({a, b}).second) {
                ok = false;
                break;
            }
            edges.push_back({a, b, 1.0});
        }
        if (ok) return Graph(n, std::move(edges));
    }
    throw GenerationError("random regular graph generation failed after " + std::to_string(retry_budget) +
                          " attempts");
}

IsingProblem maxcut_to_ising(const Graph &graph) {
    std::vector<QuadraticTerm> quad;
    quad.reserve(graph.edges().size());
    for (const auto &e : graph.edges()) quad.push_back({e.u, e.v, e.weight});
    return IsingProblem(graph.num_nodes(), {}, std::move(quad));
}

double cut_value(const Graph &graph, const SpinConfig &config) {
    if (config.size() != graph.num_nodes()) {
        throw DimensionError("config length does not match graph");
    }
    double cut = 0.0;
    for (const auto &e : graph.edges()) {
        if (config[e.u] != config[e.v]) cut += e.weight;
    }
    return cut;
}

Instance make_maxcut_instance(std::size_t n, std::size_t d, std::uint64_t seed) {
    Graph g = gen_random_regular(n, d, seed);
    InstanceMetadata meta;
    meta.name = format_maxcut_name({n, d, seed, true});
    meta.family = Family::maxcut;
    meta.source = Source::generated;
    meta.provenance = {"isingbench.gen_random_regular", seed, ""};
    IsingProblem p = maxcut_to_ising(g);
    return {std::move(p), std::move(meta), std::move(g)};
}

// --- heavy-hex -------------------------------------------------------------

std::string HeavyHexTopology::name() const {
    switch (kind) {
        case TopologyKind::eagle127: return "eagle127";
        case TopologyKind::heron133: return "heron133";
        case TopologyKind::imported: return "imported";
        case TopologyKind::generated: return std::to_string(rows) + "x" + std::to_string(cols);
    }
    return "?";
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t declared = 0;
    std::size_t max_node = 0;
    std::vector<Edge> edges;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hdr(line.substr(1));
            std::string key;
            if (hdr >> key && key == "nodes") hdr >> declared;
            continue;
        }
        std::istringstream row(line);
        long long u, v;
        if (!(row >> u >> v) || u < 0 || v < 0) {
            throw ParseError("bad edge line: '" + line + "'", lineno);
        }
        edges.push_back({static_cast<SpinIndex>(u), static_cast<SpinIndex>(v), 1.0});
        max_node = std::max<std::size_t>(max_node, static_cast<std::size_t>(std::max(u, v)));
    }
    const std::size_t n = std::max(declared, edges.empty() ? 0 : max_node + 1);
    return Graph(n, std::move(edges));
}

HeavyHexTopology gen_heavy_hex_grid(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("heavy-hex grid needs rows, cols >= 1");
    const std::size_t width = 4 * cols + 3;
    std::vector<Edge> edges;
    std::size_t next = 0;
    std::vector<std::size_t> row_start(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        row_start[r] = next;
        for (std::size_t c = 0; c + 1 < width; ++c) {
            edges.push_back({static_cast<SpinIndex>(next + c), static_cast<SpinIndex>(next + c + 1), 1.0});
        }
        next += width;
        if (r + 1 < rows) {
            // Bridge row; its nodes are numbered before the next row starts.
            const std::size_t phase = (r % 2 == 0) ? 0 : 2;
            std::vector<std::size_t> columns;
            for (std::size_t c = phase; c < width; c += 4) columns.push_back(c);
            const std::size_t below = next + columns.size();
            for (std::size_t b = 0; b < columns.size(); ++b) {
                const auto bridge = static_cast<SpinIndex>(next + b);
                edges.push_back({static_cast<SpinIndex>(row_start[r] + columns[b]), bridge, 1.0});
                edges.push_back({bridge, static_cast<SpinIndex>(below + columns[b]), 1.0});
            }
            next += columns.size();
        }
    }
    HeavyHexTopology t{Graph(next, std::move(edges)), TopologyKind::generated, rows, cols};
    return t;
}

HeavyHexTopology import_topology(Graph graph) {
    if (graph.max_degree() > 3) {
        throw std::invalid_argument("heavy-hex topology must have maximum degree 3");
    }
    return {std::move(graph), TopologyKind::imported, 0, 0};
}

HeavyHexTopology gen_heavy_hex(std::string_view spec) {
    if (spec == "eagle127") return {parse_edge_list(detail::kEagle127Edges), TopologyKind::eagle127, 0, 0};
    if (spec == "heron133") return {parse_edge_list(detail::kHeron133Edges), TopologyKind::heron133, 0, 0};
    const auto x = spec.find('x');
    std::size_t rows = 0, cols = 0;
    if (x != std::string_view::npos && parse_uint(spec.substr(0, x), rows) && parse_uint(spec.substr(x + 1), cols)) {
        return gen_heavy_hex_grid(rows, cols);
    }
    throw std::invalid_argument("unknown heavy-hex spec '" + std::string(spec) +
                                "' (expected eagle127, heron133 or RxC)");
}

// --- spin glasses ----------------------------------------------------------

std::vector<std::array<SpinIndex, 3>> select_triples(const Graph &graph, TripleRule rule) {
    const auto adj = graph.adjacency();
    std::vector<std::array<SpinIndex, 3>> triples;
    for (SpinIndex v = 0; v < adj.size(); ++v) {
        const auto &nb = adj[v];
        if (nb.size() < 2) continue;
        if (rule == TripleRule::one_per_center) {
            std::array<SpinIndex, 3> t{nb[0], v, nb[1]};
            std::sort(t.begin(), t.end());
            triples.push_back(t);
            continue;
        }
        for (std::size_t a = 0; a < nb.size(); ++a) {
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                std::array<SpinIndex, 3> t{nb[a], v, nb[b]};
                std::sort(t.begin(), t.end());
                triples.push_back(t);
            }
        }
    }
    std::sort(triples.begin(), triples.end());
    // A triangle would produce its triple once per center.
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
    return triples;
}

Instance gen_hoso_instance(const HeavyHexTopology &topology, std::uint64_t seed, TripleRule rule) {
    const Graph &g = topology.graph;
    Rng rng(seed);
    std::vector<LinearTerm> lin;
    std::vector<QuadraticTerm> quad;
    std::vector<CubicTerm> cub;
    for (SpinIndex v = 0; v < g.num_nodes(); ++v) lin.push_back({v, static_cast<double>(rng.spin())});
    for (const auto &e : g.edges()) quad.push_back({e.u, e.v, static_cast<double>(rng.spin())});
    for (const auto &t : select_triples(g, rule)) cub.push_back({t[0], t[1], t[2], static_cast<double>(rng.spin())});

    InstanceMetadata meta;
    meta.name = "hoso-" + topology.name() + "-s" + std::to_string(seed);
    meta.family = Family::hoso;
    meta.source = Source::generated;
    meta.provenance = {"isingbench.gen_hoso_instance:" + topology.name(), seed, to_string(rule)};
    return {IsingProblem(g.num_nodes(), std::move(lin), std::move(quad), std::move(cub)), std::move(meta),
            std::nullopt};
}

IsingProblem gen_planar_spin_glass(const HeavyHexTopology &topology, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<QuadraticTerm> quad;
    for (const auto &e : topology.graph.edges()) quad.push_back({e.u, e.v, rng.uniform(-1.0, 1.0)});
    return IsingProblem(topology.graph.num_nodes(), {}, std::move(quad));
}

Instance make_planar_sg_instance(const HeavyHexTopology &topology, std::uint64_t seed) {
    InstanceMetadata meta;
    meta.name = "planar_sg-" + topology.name() + "-s" + std::to_string(seed);
    meta.family = Family::planar_sg;
    meta.source = Source::generated;
    meta.provenance = {"isingbench.gen_planar_spin_glass:" + topology.name(), seed, ""};
    return {gen_planar_spin_glass(topology, seed), std::move(meta), std::nullopt};
}

// --- file format -----------------------------------------------------------

namespace {

std::string num(double x) { return json(x).dump(); }

std::size_t line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

[[noreturn]] void field_error(const std::string &field, const std::string &what) {
    throw ParseError("field '" + field + "': " + what, 0, field);
}

const json &require(const json &doc, const char *key) {
    auto it = doc.find(key);
    if (it == doc.end()) field_error(key, "missing");
    return *it;
}

double as_number(const json &v, const std::string &field) {
    if (!v.is_number()) field_error(field, "expected a number");
    return v.get<double>();
}

SpinIndex as_index(const json &v, const std::string &field, std::size_t n) {
    if (!v.is_number_integer()) field_error(field, "expected an integer index");
    const auto i = v.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= n) {
        throw IndexError("field '" + field + "': index " + std::to_string(i) + " out of range for " +
                         std::to_string(n) + " spins");
    }
    return static_cast<SpinIndex>(i);
}

const json &term_array(const json &doc, const char *key) {
    static const json empty = json::array();
    auto it = doc.find(key);
    if (it == doc.end()) return empty;
    if (!it->is_array()) field_error(key, "expected an array");
    return *it;
}

void check_row(const json &row, std::size_t width, const std::string &field) {
    if (!row.is_array() || row.size() != width) {
        field_error(field, "expected an array of " + std::to_string(width) + " values");
    }
}

}  // namespace

std::string instance_to_text(const Instance &instance) {
    const auto &p = instance.problem;
    const auto &m = instance.meta;
    std::ostringstream out;
    out << "{\n";
    out << "  \"format_version\": " << kFormatVersion << ",\n";
    out << "  \"name\": " << json(m.name).dump() << ",\n";
    out << "  \"family\": " << json(to_string(m.family)).dump() << ",\n";
    out << "  \"source\": " << json(to_string(m.source)).dump() << ",\n";
    out << "  \"num_spins\": " << p.num_spins() << ",\n";
    out << "  \"offset\": " << num(p.offset()) << ",\n";

    auto rows = [&out](const char *key, const std::vector<std::string> &items) {
        out << "  \"" << key << "\": [";
        for (std::size_t k = 0; k < items.size(); ++k) {
            out << (k ? ",\n    " : "\n    ") << items[k];
        }
        out << (items.empty() ? "],\n" : "\n  ],\n");
    };
    if (instance.graph) {
        std::vector<std::string> items;
        for (const auto &e : instance.graph->edges()) {
            items.push_back("[" + std::to_string(e.u) + ", " + std::to_string(e.v) + ", " + num(e.weight) + "]");
        }
        rows("edges", items);
    } else {
        std::vector<std::string> items;
        for (const auto &t : p.linear()) items.push_back("[" + std::to_string(t.i) + ", " + num(t.coeff) + "]");
        rows("linear", items);
        items.clear();
        for (const auto &t : p.quadratic()) {
            items.push_back("[" + std::to_string(t.i) + ", " + std::to_string(t.j) + ", " + num(t.coeff) + "]");
        }
        rows("quadratic", items);
        items.clear();
        for (const auto &t : p.cubic()) {
            items.push_back("[" + std::to_string(t.i) + ", " + std::to_string(t.j) + ", " + std::to_string(t.k) +
                            ", " + num(t.coeff) + "]");
        }
        rows("cubic", items);
    }
    out << "  \"opt_value\": " << (m.opt_value ? num(*m.opt_value) : std::string("null")) << ",\n";
    json prov = {{"generator", m.provenance.generator},
                 {"seed", m.provenance.seed ? json(*m.provenance.seed) : json(nullptr)},
                 {"triple_rule", m.provenance.triple_rule}};
    out << "  \"provenance\": " << prov.dump() << "\n";
    out << "}\n";
    return out.str();
}

Instance instance_from_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("syntax error at line ") + std::to_string(line_of(text, e.byte)) + ": " +
                             e.what(),
                         line_of(text, e.byte));
    }
    if (!doc.is_object()) throw ParseError("instance file must hold a JSON object", 1);

    const auto &version = require(doc, "format_version");
    if (!version.is_number_integer() || version.get<int>() != kFormatVersion) {
        field_error("format_version", "unsupported version " + version.dump());
    }

    Instance inst;
    auto &m = inst.meta;
    try {
        m.name = require(doc, "name").get<std::string>();
    } catch (const json::type_error &) {
        field_error("name", "expected a string");
    }
    try {
        m.family = family_from_string(require(doc, "family").get<std::string>());
        m.source = doc.contains("source") ? source_from_string(doc["source"].get<std::string>()) : Source::imported;
    } catch (const json::type_error &) {
        field_error("family", "expected a string");
    } catch (const std::invalid_argument &e) {
        field_error("family", e.what());
    }
    const auto &ns = require(doc, "num_spins");
    if (!ns.is_number_integer() || ns.get<long long>() <= 0) field_error("num_spins", "expected a positive integer");
    const auto n = static_cast<std::size_t>(ns.get<long long>());
    const double offset = doc.contains("offset") ? as_number(doc["offset"], "offset") : 0.0;

    if (const auto &opt = doc.value("opt_value", json(nullptr)); !opt.is_null()) {
        m.opt_value = as_number(opt, "opt_value");
    }
    if (doc.contains("provenance")) {
        const auto &pv = doc["provenance"];
        if (!pv.is_object()) field_error("provenance", "expected an object");
        if (pv.contains("generator") && pv["generator"].is_string()) m.provenance.generator = pv["generator"];
        if (pv.contains("seed") && !pv["seed"].is_null()) {
            if (!pv["seed"].is_number_unsigned()) field_error("provenance.seed", "expected a nonnegative integer");
            m.provenance.seed = pv["seed"].get<std::uint64_t>();
        }
        if (pv.contains("triple_rule") && pv["triple_rule"].is_string()) m.provenance.triple_rule = pv["triple_rule"];
    }

    try {
        if (doc.contains("edges")) {
            const auto &rows = term_array(doc, "edges");
            std::vector<Edge> edges;
            for (std::size_t k = 0; k < rows.size(); ++k) {
                const auto f = "edges[" + std::to_string(k) + "]";
                check_row(rows[k], 3, f);
                edges.push_back({as_index(rows[k][0], f, n), as_index(rows[k][1], f, n), as_number(rows[k][2], f)});
            }
            try {
                inst.graph = Graph(n, std::move(edges));
            } catch (const std::invalid_argument &e) {
                field_error("edges", e.what());
            }
            inst.problem = maxcut_to_ising(*inst.graph);
        } else {
            std::vector<LinearTerm> lin;
            std::vector<QuadraticTerm> quad;
            std::vector<CubicTerm> cub;
            const auto &l = term_array(doc, "linear");
            for (std::size_t k = 0; k < l.size(); ++k) {
                const auto f = "linear[" + std::to_string(k) + "]";
                check_row(l[k], 2, f);
                lin.push_back({as_index(l[k][0], f, n), as_number(l[k][1], f)});
            }
            const auto &q = term_array(doc, "quadratic");
            for (std::size_t k = 0; k < q.size(); ++k) {
                const auto f = "quadratic[" + std::to_string(k) + "]";
                check_row(q[k], 3, f);
                quad.push_back({as_index(q[k][0], f, n), as_index(q[k][1], f, n), as_number(q[k][2], f)});
            }
            const auto &c = term_array(doc, "cubic");
            for (std::size_t k = 0; k < c.size(); ++k) {
                const auto f = "cubic[" + std::to_string(k) + "]";
                check_row(c[k], 4, f);
                cub.push_back({as_index(c[k][0], f, n), as_index(c[k][1], f, n), as_index(c[k][2], f, n),
                               as_number(c[k][3], f)});
            }
            try {
                inst.problem = IsingProblem(n, std::move(lin), std::move(quad), std::move(cub), offset);
            } catch (const std::invalid_argument &e) {
                field_error("terms", e.what());
            }
        }
    } catch (const json::type_error &e) {
        throw ParseError(std::string("type error: ") + e.what());
    }

    if (m.family == Family::maxcut) {
        if (!inst.graph) field_error("edges", "max-cut instances must list edges");
        if (const auto parsed = parse_maxcut_name(m.name)) {
            const auto deg = inst.graph->degrees();
            const bool regular = std::all_of(deg.begin(), deg.end(), [&](std::size_t d) { return d == parsed->d; });
            if (parsed->n != n || !regular || parsed->unweighted != inst.graph->unweighted()) {
                field_error("name", "'" + m.name + "' does not match the graph");
            }
        } else {
            field_error("name", "max-cut names must have the form (N,d,s,u)");
        }
    }
    return inst;
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

void save_instance(const std::filesystem::path &path, const Instance &instance) {
    write_text_file(path, instance_to_text(instance));
}

Instance load_instance(const std::filesystem::path &path) { return instance_from_text(read_text_file(path)); }

}  // namespace isingbench
