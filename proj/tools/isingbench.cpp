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


// isingbench command-line tool.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isingbench/bench.hpp"
#include "isingbench/errors.hpp"
#include "isingbench/instances.hpp"
#include "isingbench/metrics.hpp"
#include "isingbench/qa_sim.hpp"
#include "isingbench/reduction.hpp"
#include "isingbench/rng.hpp"
#include "isingbench/solvers.hpp"

namespace ib = isingbench;
using nlohmann::json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitPartial = 2;

struct Globals {
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "rows";
    unsigned threads = 1;
};

void emit(const Globals &g, const std::string &text) {
    if (g.out.empty()) {
        std::cout << text;
    } else {
        ib::write_text_file(g.out, text);
    }
}

std::string num(double x) { return ib::format_number(x); }

std::string audit_lines(const Globals &g, const std::map<std::string, std::string> &params) {
    std::ostringstream out;
    out << "# format_version=" << ib::kFormatVersion << "\n# seed=" << g.seed << "\n";
    for (const auto &[k, v] : params) out << "# " << k << "=" << v << "\n";
    return out.str();
}

json audit_json(const Globals &g, const std::string &kind, const std::map<std::string, std::string> &params) {
    return {{"format_version", ib::kFormatVersion}, {"kind", kind}, {"seed", g.seed}, {"params", params}};
}

std::string summary(const ib::Instance &inst) {
    std::ostringstream out;
    out << inst.meta.name << ": family=" << ib::to_string(inst.meta.family)
        << " spins=" << inst.problem.num_spins() << " linear=" << inst.problem.linear().size()
        << " quadratic=" << inst.problem.quadratic().size() << " cubic=" << inst.problem.cubic().size();
    if (inst.meta.opt_value) out << " opt=" << num(*inst.meta.opt_value);
    return out.str();
}

ib::GadgetSet load_gadgets(const std::string &choice, double bound) {
    if (choice == "baseline") return ib::baseline_gadget_set(bound);
    if (choice == "better") return ib::better_gadget_set(ib::baseline_gadget_set(bound));
    return ib::gadget_set_from_text(ib::read_text_file(choice));
}

// Fills opt_value by exact enumeration when requested and small enough.
void maybe_solve(ib::Instance &inst, bool solve, std::size_t limit) {
    if (!solve || inst.meta.opt_value) return;
    const auto res = ib::exact_ground(inst.problem, limit);
    inst.meta.opt_value = ib::opt_value_from_energy(inst, res.ground_energy);
}

std::vector<double> parse_list(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        if (used != item.size() || !(v >= 0.0)) throw std::invalid_argument("invalid time grid entry '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty time grid");
    return out;
}

// --- gen -------------------------------------------------------------------

struct GenArgs {
    std::string family;
    std::size_t n = 28;
    std::size_t d = 3;
    std::string topology;
    std::string edge_list;
    std::string triple_rule = "length2_paths";
    bool solve = false;
    std::size_t exact_limit = 32;
};

ib::HeavyHexTopology topology_for(const GenArgs &a, const std::string &fallback) {
    if (!a.edge_list.empty()) return ib::import_topology(ib::parse_edge_list(ib::read_text_file(a.edge_list)));
    return ib::gen_heavy_hex(a.topology.empty() ? fallback : a.topology);
}

int cmd_gen(const Globals &g, const GenArgs &a) {
    ib::Instance inst;
    const auto family = ib::family_from_string(a.family);
    switch (family) {
        case ib::Family::maxcut:
            inst = ib::make_maxcut_instance(a.n, a.d, g.seed);
            break;
        case ib::Family::hoso:
            inst = ib::gen_hoso_instance(topology_for(a, "eagle127"), g.seed, ib::triple_rule_from_string(a.triple_rule));
            break;
        case ib::Family::planar_sg:
            inst = ib::make_planar_sg_instance(topology_for(a, "heron133"), g.seed);
            break;
    }
    maybe_solve(inst, a.solve, a.exact_limit);
    emit(g, ib::instance_to_text(inst));
    std::cerr << summary(inst) << "\n";
    return 0;
}

// --- import ----------------------------------------------------------------

struct ImportArgs {
    std::string path;
    std::optional<std::size_t> expect_spins;
    std::optional<std::size_t> expect_cubic;
    bool solve = false;
    std::size_t exact_limit = 32;
};

int cmd_import(const Globals &g, const ImportArgs &a) {
    auto inst = ib::load_instance(a.path);
    inst.meta.source = ib::Source::imported;
    if (a.expect_spins && inst.problem.num_spins() != *a.expect_spins) {
        throw ib::DimensionError("expected " + std::to_string(*a.expect_spins) + " spins, file has " +
                                 std::to_string(inst.problem.num_spins()));
    }
    if (a.expect_cubic && inst.problem.cubic().size() != *a.expect_cubic) {
        throw ib::DimensionError("expected " + std::to_string(*a.expect_cubic) + " cubic terms, file has " +
                                 std::to_string(inst.problem.cubic().size()));
    }
    maybe_solve(inst, a.solve, a.exact_limit);
    emit(g, ib::instance_to_text(inst));
    std::cerr << summary(inst) << "\n";
    return 0;
}

// --- reduce ----------------------------------------------------------------

struct ReduceArgs {
    std::string path;
    std::string gadgets = "baseline";
    double coeff_bound = 2.0;
    bool emit_gadgets = false;
    bool compress = false;
    double threshold = 0.5;
};

int cmd_reduce(const Globals &g, const ReduceArgs &a) {
    if (a.emit_gadgets) {
        emit(g, ib::gadget_set_to_text(load_gadgets(a.gadgets, a.coeff_bound)));
        return 0;
    }
    if (a.path.empty()) throw std::invalid_argument("reduce needs an instance file");
    const auto inst = ib::load_instance(a.path);
    if (inst.meta.family == ib::Family::maxcut) {
        throw std::invalid_argument("reduce applies to spin-glass instances; max-cut instances are already quadratic");
    }
    ib::Instance out = inst;
    if (a.compress) {
        const double before = ib::energy_scale(inst.problem);
        const auto c = ib::compress_couplings(inst.problem, a.threshold);
        out.problem = c.problem;
        if (auto e = inst.opt_energy()) out.meta.opt_value = *e * c.gauge.scale;
        out.meta.name = inst.meta.name + "-compressed";
        out.meta.provenance.generator = "isingbench.compress_couplings:threshold=" + num(a.threshold);
        std::cerr << out.meta.name << ": flipped=" << c.gauge.flip_set.size() << " scale=" << num(c.gauge.scale)
                  << " energy_scale_before=" << num(before)
                  << " energy_scale_after=" << num(c.gauge.scale * ib::energy_scale(c.problem)) << "\n";
    } else {
        const auto red = ib::reduce_cubic(inst.problem, load_gadgets(a.gadgets, a.coeff_bound));
        out.problem = red.problem;
        if (auto e = inst.opt_energy()) out.meta.opt_value = *e;
        out.meta.name = inst.meta.name + "-reduced";
        out.meta.provenance.generator = "isingbench.reduce_cubic:" + a.gadgets;
        std::cerr << out.meta.name << ": aux=" << red.map.aux.size() << " spins=" << red.problem.num_spins();
        if (red.problem.num_terms() > 0) std::cerr << " energy_scale=" << num(ib::energy_scale(red.problem));
        std::cerr << "\n";
    }
    emit(g, ib::instance_to_text(out));
    return 0;
}

// --- solve -----------------------------------------------------------------

struct SamplerArgs {
    std::uint64_t reads = 500;
    std::uint64_t sweeps = 64;
    double beta_min = 0.1;
    double beta_max = 10.0;
    std::uint64_t parallel_copies = 1;
    std::string normalization = "max_abs";
    std::uint64_t postprocess_sweeps = 5;
};

ib::SamplerParams sampler_params(const Globals &g, const SamplerArgs &s) {
    ib::SamplerParams p;
    p.reads = s.reads;
    p.sweeps = s.sweeps;
    p.beta_min = s.beta_min;
    p.beta_max = s.beta_max;
    p.parallel_copies = s.parallel_copies;
    p.max_postprocess_sweeps = s.postprocess_sweeps;
    p.threads = g.threads;
    p.seed = g.seed;
    if (s.normalization == "chip_range") {
        p.normalization = ib::BetaNormalization::chip_range;
    } else if (s.normalization != "max_abs") {
        throw std::invalid_argument("unknown normalization '" + s.normalization + "'");
    }
    return p;
}

std::map<std::string, std::string> sampler_echo(const SamplerArgs &s) {
    return {{"reads", std::to_string(s.reads)},
            {"sweeps", std::to_string(s.sweeps)},
            {"beta_min", num(s.beta_min)},
            {"beta_max", num(s.beta_max)},
            {"parallel_copies", std::to_string(s.parallel_copies)},
            {"normalization", s.normalization},
            {"postprocess_sweeps", std::to_string(s.postprocess_sweeps)}};
}

struct SolveArgs {
    std::string path;
    std::string solver = "exact";
    SamplerArgs sampler;
    bool postprocess = false;
    std::size_t exact_limit = 32;
};

std::string samples_as_rows(const Globals &g, const ib::SampleSet &s, const std::map<std::string, std::string> &params) {
    std::ostringstream out;
    out << audit_lines(g, params) << "config,energy,multiplicity\n";
    for (const auto &e : s.entries()) out << e.config.to_string() << ',' << num(e.energy) << ',' << e.multiplicity << "\n";
    return out.str();
}

int cmd_solve(const Globals &g, const SolveArgs &a) {
    const auto inst = ib::load_instance(a.path);
    std::map<std::string, std::string> params{{"instance", inst.meta.name}, {"solver", a.solver}};
    if (a.solver == "exact") {
        params["exact_limit"] = std::to_string(a.exact_limit);
        const auto r = ib::exact_ground(inst.problem, a.exact_limit);
        const double opt = ib::opt_value_from_energy(inst, r.ground_energy);
        if (g.format == "structured") {
            auto doc = audit_json(g, "exact_result", params);
            doc["ground_energy"] = r.ground_energy;
            doc["opt_value"] = opt;
            doc["ground_count"] = r.ground_count;
            doc["witness"] = r.witness.to_string();
            doc["enumerated_states"] = r.enumerated_states;
            emit(g, doc.dump(2) + "\n");
        } else {
            emit(g, audit_lines(g, params) + "ground_energy,opt_value,ground_count,witness,enumerated_states\n" +
                        num(r.ground_energy) + "," + num(opt) + "," + std::to_string(r.ground_count) + "," +
                        r.witness.to_string() + "," + std::to_string(r.enumerated_states) + "\n");
        }
        return 0;
    }
    ib::SampleSet samples;
    if (a.solver == "local") {
        samples = ib::SampleSet(ib::SampleMeta{"local", g.seed, std::nullopt, 1, 1});
        samples.add(inst.problem, ib::local_solver(inst.problem, g.seed));
    } else if (a.solver == "sa") {
        params.merge(sampler_echo(a.sampler));
        samples = ib::simulated_anneal(inst.problem, sampler_params(g, a.sampler));
    } else if (a.solver == "random") {
        params["reads"] = std::to_string(a.sampler.reads);
        samples = ib::random_sample(inst.problem, a.sampler.reads, g.seed);
    } else {
        throw std::invalid_argument("unknown solver '" + a.solver + "' (expected exact, local, sa or random)");
    }
    if (a.postprocess) {
        params["postprocess_sweeps"] = std::to_string(a.sampler.postprocess_sweeps);
        samples = ib::postprocess_samples(inst.problem, samples, ib::mix_seed(g.seed, 1), a.sampler.postprocess_sweeps);
    }
    samples = samples.aggregated();
    emit(g, g.format == "structured" ? ib::sampleset_to_text(samples, params) : samples_as_rows(g, samples, params));
    std::cerr << inst.meta.name << ": best energy " << num(samples.best().energy) << "\n";
    return 0;
}

// --- bench -----------------------------------------------------------------

struct BenchArgs {
    std::vector<std::string> paths;
    std::string solver = "sa";
    SamplerArgs sampler;
    bool no_postprocess = false;
    std::optional<double> t_sample_ms;
    std::size_t bootstrap = 1000;
    std::string gadgets = "baseline";
    double coeff_bound = 2.0;
    std::size_t exact_limit = 32;
    std::string samples_dir;
};

int cmd_bench(const Globals &g, const BenchArgs &a) {
    ib::BenchConfig cfg;
    cfg.solver = ib::solver_kind_from_string(a.solver);
    cfg.sampler = sampler_params(g, a.sampler);
    cfg.postprocess = !a.no_postprocess;
    cfg.t_sample_ms = a.t_sample_ms;
    cfg.bootstrap_resamples = a.bootstrap;
    cfg.exact_limit = a.exact_limit;

    ib::Report report;
    report.header.seed = g.seed;
    report.header.params = sampler_echo(a.sampler);
    report.header.params["solver"] = a.solver;
    report.header.params["postprocess"] = cfg.postprocess ? "on" : "off";
    report.header.params["t_sample_ms"] = a.t_sample_ms ? num(*a.t_sample_ms) : "measured";
    report.header.params["bootstrap_resamples"] = std::to_string(a.bootstrap);
    report.header.params["exact_limit"] = std::to_string(a.exact_limit);

    std::vector<std::string> failures;
    for (std::size_t k = 0; k < a.paths.size(); ++k) {
        try {
            const auto inst = ib::load_instance(a.paths[k]);
            if (inst.problem.has_cubic() && cfg.gadgets.empty()) {
                cfg.gadgets = load_gadgets(a.gadgets, a.coeff_bound);
                report.header.params["gadgets"] = a.gadgets;
            }
            const auto run = ib::bench_instance(inst, cfg, ib::mix_seed(g.seed, k));
            if (inst.problem.has_cubic()) {
                // Energy scale of the reduced problem under both standard gadget sets.
                const auto base = ib::baseline_gadget_set(a.coeff_bound);
                const double s_base = ib::energy_scale(ib::reduce_cubic(inst.problem, base).problem);
                const double s_better =
                    ib::energy_scale(ib::reduce_cubic(inst.problem, ib::better_gadget_set(base)).problem);
                report.header.params["energy_scale_ratio[" + inst.meta.name + "]"] = num(s_better / s_base);
            }
            if (!a.samples_dir.empty()) {
                const std::filesystem::path dir(a.samples_dir);
                std::filesystem::create_directories(dir);
                ib::write_text_file(dir / (inst.meta.name + ".raw.json"),
                                    ib::sampleset_to_text(run.raw.aggregated(), report.header.params));
                if (run.post) {
                    ib::write_text_file(dir / (inst.meta.name + ".post.json"),
                                        ib::sampleset_to_text(run.post->aggregated(), report.header.params));
                }
            }
            report.rows.push_back(run.row);
        } catch (const std::exception &e) {
            failures.push_back(a.paths[k] + ": " + e.what());
        }
    }
    emit(g, g.format == "structured" ? ib::report_to_structured(report) : ib::report_to_rows(report));
    for (const auto &f : failures) std::cerr << "failed: " << f << "\n";
    return failures.empty() ? 0 : kExitPartial;
}

// --- anneal-sim -------------------------------------------------------------

struct AnnealArgs {
    std::string path;
    std::string times = "0,0.5,1,2,4,8,16,32";
    double slices_per_unit = 4.0;
    std::uint64_t shots = 1000;
    std::size_t max_spins = 20;
};

int cmd_anneal_sim(const Globals &g, const AnnealArgs &a) {
    const auto inst = ib::load_instance(a.path);
    const auto grid = parse_list(a.times);
    if (inst.problem.num_spins() > a.max_spins) {
        throw ib::LimitError("anneal-sim supports at most " + std::to_string(a.max_spins) + " spins; '" +
                             inst.meta.name + "' has " + std::to_string(inst.problem.num_spins()));
    }
    const double ground = ib::resolve_opt_energy(inst, a.max_spins);
    const auto rows = ib::anneal_sweep(inst.problem, ground, grid, a.slices_per_unit, a.shots, g.seed, a.max_spins);
    const std::map<std::string, std::string> params{{"instance", inst.meta.name},
                                                    {"times", a.times},
                                                    {"slices_per_unit", num(a.slices_per_unit)},
                                                    {"shots", std::to_string(a.shots)},
                                                    {"gate_depth", "4"},
                                                    {"gate_time_ns", "84"},
                                                    {"residual_energy", "per_spin"}};
    if (g.format == "structured") {
        auto doc = audit_json(g, "anneal_sweep", params);
        doc["ground_energy"] = ground;
        doc["rows"] = json::array();
        for (const auto &r : rows) {
            doc["rows"].push_back({{"total_time", r.total_time},
                                   {"slices", r.slices},
                                   {"digitized_time_us", r.digitized_time_us},
                                   {"residual_energy_per_spin", r.residual_energy},
                                   {"p_gs", r.p_gs}});
        }
        emit(g, doc.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << audit_lines(g, params) << "total_time,slices,digitized_time_us,residual_energy_per_spin,p_gs\n";
        for (const auto &r : rows) {
            out << num(r.total_time) << ',' << r.slices << ',' << num(r.digitized_time_us) << ','
                << num(r.residual_energy) << ',' << num(r.p_gs) << "\n";
        }
        emit(g, out.str());
    }
    return 0;
}

// --- report ----------------------------------------------------------------

struct ReportArgs {
    std::vector<std::string> paths;
    std::string instance;
    double bin_width = 1.0;
};

int cmd_report(const Globals &g, const ReportArgs &a) {
    if (a.paths.empty()) throw std::invalid_argument("report needs at least one input file");
    if (a.instance.empty()) {
        if (a.paths.size() != 1) throw std::invalid_argument("report converts one benchmark report at a time");
        const auto rep = ib::report_from_structured(ib::read_text_file(a.paths[0]));
        emit(g, g.format == "structured" ? ib::report_to_structured(rep) : ib::report_to_rows(rep));
        return 0;
    }
    // Histogram mode: one series per sample file.
    const auto inst = ib::load_instance(a.instance);
    const ib::Graph *graph = inst.graph ? &*inst.graph : nullptr;
    std::vector<std::pair<std::string, ib::Histogram>> series;
    for (const auto &p : a.paths) {
        const auto samples = ib::sampleset_from_text(ib::read_text_file(p), inst.problem);
        const auto values = ib::sample_values(samples, graph);
        series.emplace_back(std::filesystem::path(p).filename().string(),
                            ib::histogram(values, a.bin_width, inst.meta.opt_value));
    }
    if (g.format == "structured") {
        auto doc = audit_json(g, "histogram", {{"instance", inst.meta.name}, {"bin_width", num(a.bin_width)},
                                               {"value", graph ? "cut" : "energy"}});
        doc["series"] = json::array();
        for (const auto &[name, h] : series) {
            json bins = json::array();
            for (const auto &b : h.bins) bins.push_back({b.low, b.count});
            doc["series"].push_back({{"name", name},
                                     {"mean", h.mean},
                                     {"optimum", h.optimum ? json(*h.optimum) : json(nullptr)},
                                     {"bins", bins}});
        }
        emit(g, doc.dump(2) + "\n");
    } else {
        emit(g, audit_lines(g, {{"instance", inst.meta.name}, {"bin_width", num(a.bin_width)},
                                {"value", graph ? "cut" : "energy"}}) +
                    ib::histogram_rows(series));
    }
    return 0;
}

void add_sampler_options(CLI::App *cmd, SamplerArgs &s) {
    cmd->add_option("--reads", s.reads, "Reads per run")->check(CLI::PositiveNumber);
    cmd->add_option("--sweeps", s.sweeps, "Annealing sweeps per read");
    cmd->add_option("--beta-min", s.beta_min, "Initial inverse temperature");
    cmd->add_option("--beta-max", s.beta_max, "Final inverse temperature");
    cmd->add_option("--parallel-copies", s.parallel_copies, "Samples drawn per read")->check(CLI::PositiveNumber);
    cmd->add_option("--normalization", s.normalization, "Inverse-temperature normalization")
        ->check(CLI::IsMember({"max_abs", "chip_range"}));
    cmd->add_option("--postprocess-sweeps", s.postprocess_sweeps, "Greedy postprocessing sweep cap");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Ising/HUBO optimization benchmarking toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "Master seed; all randomness derives from it");
    app.add_option("--out", g.out, "Output file (default: standard output)");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"rows", "structured"}));
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);

    int status = 0;

    GenArgs gen;
    auto *c_gen = app.add_subcommand("gen", "Generate an instance file");
    c_gen->add_option("family", gen.family, "maxcut, hoso or planar-sg")
        ->required()
        ->check(CLI::IsMember({"maxcut", "hoso", "planar-sg", "planar_sg"}));
    c_gen->add_option("--n", gen.n, "Max-cut graph size");
    c_gen->add_option("--d", gen.d, "Max-cut graph degree");
    c_gen->add_option("--topology", gen.topology, "eagle127, heron133 or RxC");
    c_gen->add_option("--edge-list", gen.edge_list, "Heavy-hex topology from an edge-list file");
    c_gen->add_option("--triple-rule", gen.triple_rule, "Cubic triple selection rule")
        ->check(CLI::IsMember({"length2_paths", "one_per_center"}));
    c_gen->add_flag("--solve", gen.solve, "Record the exact optimum (small instances)");
    c_gen->add_option("--exact-limit", gen.exact_limit, "Largest instance solved exactly");
    c_gen->callback([&] { status = cmd_gen(g, gen); });

    ImportArgs imp;
    auto *c_imp = app.add_subcommand("import", "Validate an external instance file and mark it imported");
    c_imp->add_option("path", imp.path, "Instance file")->required();
    c_imp->add_option("--expect-spins", imp.expect_spins, "Required spin count");
    c_imp->add_option("--expect-cubic", imp.expect_cubic, "Required cubic term count");
    c_imp->add_flag("--solve", imp.solve, "Record the exact optimum (small instances)");
    c_imp->add_option("--exact-limit", imp.exact_limit, "Largest instance solved exactly");
    c_imp->callback([&] { status = cmd_import(g, imp); });

    ReduceArgs red;
    auto *c_red = app.add_subcommand("reduce", "Order-reduce cubic terms or compress couplings");
    c_red->add_option("path", red.path, "Instance file");
    c_red->add_option("--gadgets", red.gadgets, "baseline, better or a gadget file");
    c_red->add_option("--coeff-bound", red.coeff_bound, "Gadget synthesis coefficient bound");
    c_red->add_flag("--emit-gadgets", red.emit_gadgets, "Write the gadget set instead of reducing");
    c_red->add_flag("--compress", red.compress, "Apply coupling compression instead of reduction");
    c_red->add_option("--threshold", red.threshold, "Strong-coupling threshold for compression");
    c_red->callback([&] { status = cmd_reduce(g, red); });

    SolveArgs sol;
    auto *c_sol = app.add_subcommand("solve", "Solve or sample one instance");
    c_sol->add_option("path", sol.path, "Instance file")->required();
    c_sol->add_option("--solver", sol.solver, "exact, local, sa or random")
        ->check(CLI::IsMember({"exact", "local", "sa", "random"}));
    add_sampler_options(c_sol, sol.sampler);
    c_sol->add_flag("--postprocess", sol.postprocess, "Apply greedy postprocessing to samples");
    c_sol->add_option("--exact-limit", sol.exact_limit, "Largest instance solved exactly");
    c_sol->callback([&] { status = cmd_solve(g, sol); });

    BenchArgs ben;
    auto *c_ben = app.add_subcommand("bench", "Benchmark instances and emit a report");
    c_ben->add_option("paths", ben.paths, "Instance files")->required();
    c_ben->add_option("--solver", ben.solver, "sa or random")->check(CLI::IsMember({"sa", "random"}));
    add_sampler_options(c_ben, ben.sampler);
    c_ben->add_flag("--no-postprocess", ben.no_postprocess, "Skip greedy postprocessing");
    c_ben->add_option("--t-sample-ms", ben.t_sample_ms, "Fixed per-sample time instead of measured wall time")
        ->check(CLI::PositiveNumber);
    c_ben->add_option("--bootstrap", ben.bootstrap, "Bootstrap resamples")->check(CLI::PositiveNumber);
    c_ben->add_option("--gadgets", ben.gadgets, "baseline, better or a gadget file");
    c_ben->add_option("--coeff-bound", ben.coeff_bound, "Gadget synthesis coefficient bound");
    c_ben->add_option("--exact-limit", ben.exact_limit, "Largest instance solved exactly");
    c_ben->add_option("--samples-dir", ben.samples_dir, "Also write raw and postprocessed sample sets here");
    c_ben->callback([&] { status = cmd_bench(g, ben); });

    AnnealArgs ann;
    auto *c_ann = app.add_subcommand("anneal-sim", "Residual energy versus digitized annealing time");
    c_ann->add_option("path", ann.path, "Instance file")->required();
    c_ann->add_option("--times", ann.times, "Comma-separated total times");
    c_ann->add_option("--slices-per-unit", ann.slices_per_unit, "Trotter slices per unit time")
        ->check(CLI::PositiveNumber);
    c_ann->add_option("--shots", ann.shots, "Measurements per point")->check(CLI::PositiveNumber);
    c_ann->add_option("--max-spins", ann.max_spins, "State-vector size limit");
    c_ann->callback([&] { status = cmd_anneal_sim(g, ann); });

    ReportArgs rep;
    auto *c_rep = app.add_subcommand("report", "Convert a report, or histogram sample sets");
    c_rep->add_option("paths", rep.paths, "Structured report, or sample set files with --instance")->required();
    c_rep->add_option("--instance", rep.instance, "Instance the sample sets belong to");
    c_rep->add_option("--bin-width", rep.bin_width, "Histogram bin width")->check(CLI::PositiveNumber);
    c_rep->callback([&] { status = cmd_report(g, rep); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return status;
}
