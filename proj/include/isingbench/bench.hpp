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

// Benchmark driver shared by the command-line tool and the Python module:
// optimum resolution, optional cubic reduction, sampling, postprocessing and
// one report row per instance.

#include <cstdint>
#include <optional>
#include <string>

#include "isingbench/instances.hpp"
#include "isingbench/metrics.hpp"
#include "isingbench/reduction.hpp"
#include "isingbench/solvers.hpp"

namespace isingbench {

enum class SolverKind { sa, random };
std::string to_string(SolverKind s);
SolverKind solver_kind_from_string(std::string_view s);

struct BenchConfig {
    SolverKind solver = SolverKind::sa;
    /// Its seed field is ignored; seeds derive from the per-instance seed.
    SamplerParams sampler{};
    bool postprocess = true;
    /// Fixed per-sample time; measured wall time per sample when unset.
    std::optional<double> t_sample_ms;
    std::size_t bootstrap_resamples = 1000;
    /// Used for instances with cubic terms.
    GadgetSet gadgets;
    std::size_t exact_limit = 32;
    double tol = 1e-9;
};

/// Ground energy of the instance problem: from metadata when present,
/// otherwise exact_ground when num_spins <= exact_limit. Never inferred from
/// a sampler. Throws LimitError when neither is available.
double resolve_opt_energy(const Instance &instance, std::size_t exact_limit = 32);

/// Optimum in metadata units (cut value for max-cut) for a ground energy.
double opt_value_from_energy(const Instance &instance, double ground_energy);

struct InstanceRun {
    BenchmarkRow row;
    /// Samples over the original spins, evaluated on the original problem.
    SampleSet raw;
    std::optional<SampleSet> post;
    /// Spins actually sampled (after reduction).
    std::size_t sampled_spins = 0;
    /// energy_scale of the sampled problem, when it has terms.
    std::optional<double> energy_scale;
};

/// Problems with cubic terms are reduced with config.gadgets, sampled, and
/// projected back to the original spins before scoring. The sampler uses
/// mix_seed(seed, 0), postprocessing mix_seed(seed, 1) and the bootstrap
/// mix_seed(seed, 2).
InstanceRun bench_instance(const Instance &instance, const BenchConfig &config, std::uint64_t seed);

}  // namespace isingbench
