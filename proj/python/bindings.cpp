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


#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "isingbench/bench.hpp"
#include "isingbench/errors.hpp"
#include "isingbench/instances.hpp"
#include "isingbench/metrics.hpp"
#include "isingbench/model.hpp"
#include "isingbench/qa_sim.hpp"
#include "isingbench/reduction.hpp"
#include "isingbench/rng.hpp"
#include "isingbench/solvers.hpp"

namespace py = pybind11;
namespace ib = isingbench;

namespace {

using LinearList = std::vector<std::tuple<ib::SpinIndex, double>>;
using QuadraticList = std::vector<std::tuple<ib::SpinIndex, ib::SpinIndex, double>>;
using CubicList = std::vector<std::tuple<ib::SpinIndex, ib::SpinIndex, ib::SpinIndex, double>>;

ib::IsingProblem make_problem(std::size_t n, const LinearList &lin, const QuadraticList &quad, const CubicList &cub,
                              double offset) {
    std::vector<ib::LinearTerm> l;
    for (auto [i, c] : lin) l.push_back({i, c});
    std::vector<ib::QuadraticTerm> q;
    for (auto [i, j, c] : quad) q.push_back({i, j, c});
    std::vector<ib::CubicTerm> k;
    for (auto [i, j, kk, c] : cub) k.push_back({i, j, kk, c});
    return ib::IsingProblem(n, std::move(l), std::move(q), std::move(k), offset);
}

ib::SpinConfig to_config(const std::vector<int> &spins) {
    std::vector<std::int8_t> s;
    s.reserve(spins.size());
    for (int x : spins) {
        if (x != 1 && x != -1) throw std::invalid_argument("spins must be -1 or +1");
        s.push_back(static_cast<std::int8_t>(x));
    }
    return ib::SpinConfig(std::move(s));
}

std::vector<int> from_config(const ib::SpinConfig &c) { return {c.spins().begin(), c.spins().end()}; }

py::list sample_entries(const ib::SampleSet &s) {
    py::list out;
    for (const auto &e : s.entries()) out.append(py::make_tuple(from_config(e.config), e.energy, e.multiplicity));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Ising/HUBO benchmarking core";
    m.attr("FORMAT_VERSION") = ib::kFormatVersion;

    auto base = py::register_exception<ib::Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ib::DimensionError>(m, "DimensionError", base.ptr());
    py::register_exception<ib::IndexError>(m, "IndexError", base.ptr());
    py::register_exception<ib::InfeasibleError>(m, "InfeasibleError", base.ptr());
    py::register_exception<ib::GenerationError>(m, "GenerationError", base.ptr());
    py::register_exception<ib::ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ib::SynthesisError>(m, "SynthesisError", base.ptr());
    py::register_exception<ib::MissingGadgetError>(m, "MissingGadgetError", base.ptr());
    py::register_exception<ib::CompressionError>(m, "CompressionError", base.ptr());
    py::register_exception<ib::UndefinedError>(m, "UndefinedError", base.ptr());
    py::register_exception<ib::LimitError>(m, "LimitError", base.ptr());

    py::class_<ib::IsingProblem>(m, "IsingProblem")
        .def(py::init(&make_problem), py::arg("num_spins"), py::arg("linear") = LinearList{},
             py::arg("quadratic") = QuadraticList{}, py::arg("cubic") = CubicList{}, py::arg("offset") = 0.0)
        .def_property_readonly("num_spins", &ib::IsingProblem::num_spins)
        .def_property_readonly("offset", &ib::IsingProblem::offset)
        .def_property_readonly("linear",
                               [](const ib::IsingProblem &p) {
                                   LinearList out;
                                   for (const auto &t : p.linear()) out.emplace_back(t.i, t.coeff);
                                   return out;
                               })
        .def_property_readonly("quadratic",
                               [](const ib::IsingProblem &p) {
                                   QuadraticList out;
                                   for (const auto &t : p.quadratic()) out.emplace_back(t.i, t.j, t.coeff);
                                   return out;
                               })
        .def_property_readonly("cubic",
                               [](const ib::IsingProblem &p) {
                                   CubicList out;
                                   for (const auto &t : p.cubic()) out.emplace_back(t.i, t.j, t.k, t.coeff);
                                   return out;
                               })
        .def("scaled", &ib::IsingProblem::scaled)
        .def(py::self == py::self);

    m.def("energy", [](const ib::IsingProblem &p, const std::vector<int> &s) { return ib::energy(p, to_config(s)); });
    m.def("energy_delta_flip", [](const ib::IsingProblem &p, const std::vector<int> &s, ib::SpinIndex i) {
        return ib::energy_delta_flip(p, to_config(s), i);
    });

    py::enum_<ib::Family>(m, "Family")
        .value("maxcut", ib::Family::maxcut)
        .value("hoso", ib::Family::hoso)
        .value("planar_sg", ib::Family::planar_sg);

    py::class_<ib::Instance>(m, "Instance")
        .def_readonly("problem", &ib::Instance::problem)
        .def_property_readonly("name", [](const ib::Instance &i) { return i.meta.name; })
        .def_property_readonly("family", [](const ib::Instance &i) { return i.meta.family; })
        .def_property_readonly("opt_value", [](const ib::Instance &i) { return i.meta.opt_value; })
        .def_property_readonly("source", [](const ib::Instance &i) { return ib::to_string(i.meta.source); })
        .def_property_readonly("generator", [](const ib::Instance &i) { return i.meta.provenance.generator; })
        .def_property_readonly("edges",
                               [](const ib::Instance &i) {
                                   py::list out;
                                   if (i.graph) {
                                       for (const auto &e : i.graph->edges()) out.append(py::make_tuple(e.u, e.v, e.weight));
                                   }
                                   return out;
                               })
        .def("opt_energy", &ib::Instance::opt_energy)
        .def("to_text", [](const ib::Instance &i) { return ib::instance_to_text(i); })
        .def(py::self == py::self);

    m.def("make_maxcut_instance", &ib::make_maxcut_instance, py::arg("n"), py::arg("d"), py::arg("seed"));
    m.def(
        "gen_hoso_instance",
        [](const std::string &topology, std::uint64_t seed, const std::string &rule) {
            return ib::gen_hoso_instance(ib::gen_heavy_hex(topology), seed, ib::triple_rule_from_string(rule));
        },
        py::arg("topology"), py::arg("seed"), py::arg("triple_rule") = "length2_paths");
    m.def(
        "make_planar_sg_instance",
        [](const std::string &topology, std::uint64_t seed) {
            return ib::make_planar_sg_instance(ib::gen_heavy_hex(topology), seed);
        },
        py::arg("topology"), py::arg("seed"));
    m.def("heavy_hex_edges", [](const std::string &spec) {
        const auto t = ib::gen_heavy_hex(spec);
        std::vector<std::pair<ib::SpinIndex, ib::SpinIndex>> out;
        for (const auto &e : t.graph.edges()) out.emplace_back(e.u, e.v);
        return py::make_tuple(t.graph.num_nodes(), out);
    });
    m.def("instance_from_text", &ib::instance_from_text);
    m.def("load_instance", &ib::load_instance);
    m.def("save_instance", &ib::save_instance);

    m.def("reduce_cubic", [](const ib::IsingProblem &p, const std::string &gadgets) {
        ib::GadgetSet set = gadgets == "better"     ? ib::better_gadget_set(ib::baseline_gadget_set())
                            : gadgets == "baseline" ? ib::baseline_gadget_set()
                                                    : ib::gadget_set_from_text(gadgets);
        auto r = ib::reduce_cubic(p, set);
        return py::make_tuple(r.problem, r.map.aux.size());
    }, py::arg("problem"), py::arg("gadgets") = "baseline");
    m.def("gadget_set_text", [](const std::string &which) {
        auto set = ib::baseline_gadget_set();
        return ib::gadget_set_to_text(which == "better" ? ib::better_gadget_set(set) : set);
    }, py::arg("which") = "baseline");
    m.def("apply_gauge", [](const ib::IsingProblem &p, const std::set<ib::SpinIndex> &flips, double scale) {
        return ib::apply_gauge(p, ib::GaugeTransform{flips, scale});
    }, py::arg("problem"), py::arg("flip_set"), py::arg("scale") = 1.0);
    m.def("compress_couplings", [](const ib::IsingProblem &p, double thr) {
        auto c = ib::compress_couplings(p, thr);
        return py::make_tuple(c.gauge.flip_set, c.gauge.scale, c.problem);
    }, py::arg("problem"), py::arg("strong_threshold") = 0.5);
    m.def("energy_scale", [](const ib::IsingProblem &p) { return ib::energy_scale(p); });

    m.def("exact_ground", [](const ib::IsingProblem &p, std::size_t limit) {
        auto r = ib::exact_ground(p, limit);
        return py::make_tuple(r.ground_energy, r.ground_count, from_config(r.witness));
    }, py::arg("problem"), py::arg("limit") = 32);
    m.def("greedy_postprocess", [](const ib::IsingProblem &p, const std::vector<int> &s, std::uint64_t seed,
                                   std::uint64_t sweeps) {
        return from_config(ib::greedy_postprocess(p, to_config(s), seed, sweeps));
    }, py::arg("problem"), py::arg("spins"), py::arg("seed"), py::arg("max_sweeps") = 5);
    m.def("is_local_min", [](const ib::IsingProblem &p, const std::vector<int> &s) {
        return ib::is_local_min(p, to_config(s));
    });
    m.def("local_solver", [](const ib::IsingProblem &p, std::uint64_t seed) {
        return from_config(ib::local_solver(p, seed));
    }, py::arg("problem"), py::arg("seed"));
    m.def("random_sample", [](const ib::IsingProblem &p, std::uint64_t k, std::uint64_t seed) {
        return sample_entries(ib::random_sample(p, k, seed));
    }, py::arg("problem"), py::arg("k"), py::arg("seed"));
    m.def("simulated_anneal", [](const ib::IsingProblem &p, std::uint64_t reads, std::uint64_t sweeps,
                                 std::uint64_t seed, unsigned threads) {
        ib::SamplerParams params;
        params.reads = reads;
        params.sweeps = sweeps;
        params.seed = seed;
        params.threads = threads;
        return sample_entries(ib::simulated_anneal(p, params).aggregated());
    }, py::arg("problem"), py::arg("reads") = 500, py::arg("sweeps") = 64, py::arg("seed") = 0,
          py::arg("threads") = 1);

    m.def("tts", &ib::tts, py::arg("p_gs"), py::arg("t_sample_ms"));
    m.def("t_sample", &ib::t_sample, py::arg("total_wall_ms"), py::arg("num_samples"));
    m.def("digitized_time_us", &ib::digitized_time_us, py::arg("slices"), py::arg("gate_depth") = 4,
          py::arg("gate_time_ns") = 84.0);
    m.def("anneal_sweep", [](const ib::IsingProblem &p, double ground, const std::vector<double> &times,
                             double slices_per_unit, std::uint64_t shots, std::uint64_t seed) {
        py::list out;
        for (const auto &r : ib::anneal_sweep(p, ground, times, slices_per_unit, shots, seed)) {
            out.append(py::dict(py::arg("total_time") = r.total_time, py::arg("slices") = r.slices,
                                py::arg("digitized_time_us") = r.digitized_time_us,
                                py::arg("residual_energy") = r.residual_energy, py::arg("p_gs") = r.p_gs));
        }
        return out;
    }, py::arg("problem"), py::arg("ground_energy"), py::arg("times"), py::arg("slices_per_unit") = 4.0,
          py::arg("shots") = 1000, py::arg("seed") = 0);

    m.def("bench", [](const std::vector<ib::Instance> &instances, std::uint64_t seed, std::uint64_t reads,
                      std::optional<double> t_sample_ms, const std::string &gadgets, const std::string &format) {
        ib::BenchConfig cfg;
        cfg.sampler.reads = reads;
        cfg.t_sample_ms = t_sample_ms;
        cfg.gadgets = gadgets == "better" ? ib::better_gadget_set(ib::baseline_gadget_set()) : ib::baseline_gadget_set();
        ib::Report rep;
        rep.header.seed = seed;
        rep.header.params = {{"reads", std::to_string(reads)}, {"gadgets", gadgets}};
        for (std::size_t k = 0; k < instances.size(); ++k) {
            rep.rows.push_back(ib::bench_instance(instances[k], cfg, ib::mix_seed(seed, k)).row);
        }
        return format == "structured" ? ib::report_to_structured(rep) : ib::report_to_rows(rep);
    }, py::arg("instances"), py::arg("seed") = 0, py::arg("reads") = 500, py::arg("t_sample_ms") = py::none(),
          py::arg("gadgets") = "baseline", py::arg("format") = "rows");
}
