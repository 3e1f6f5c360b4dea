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


#include "isingbench/bench.hpp"

#include <stdexcept>

#include "isingbench/errors.hpp"
#include "isingbench/rng.hpp"

namespace isingbench {

std::string to_string(SolverKind s) { return s == SolverKind::sa ? "sa" : "random"; }

SolverKind solver_kind_from_string(std::string_view s) {
    if (s == "sa") return SolverKind::sa;
    if (s == "random") return SolverKind::random;
    throw std::invalid_argument("unknown benchmark solver '" + std::string(s) + "' (expected sa or random)");
}

double resolve_opt_energy(const Instance &instance, std::size_t exact_limit) {
    if (auto e = instance.opt_energy()) return *e;
    if (instance.problem.num_spins() > exact_limit) {
        throw LimitError("instance '" + instance.meta.name + "' has " + std::to_string(instance.problem.num_spins()) +
                         " spins and no recorded optimum; supply opt_value (best-found values are never used)");
    }
    return exact_ground(instance.problem, exact_limit).ground_energy;
}

double opt_value_from_energy(const Instance &instance, double ground_energy) {
    if (instance.meta.family == Family::maxcut && instance.graph) {
        return (instance.graph->total_weight() - ground_energy) / 2.0;
    }
    return ground_energy;
}

namespace {

SampleSet project_samples(const IsingProblem &original, const SampleSet &reduced, const ReductionMap &map) {
    SampleSet out(reduced.meta());
    for (const auto &s : reduced.entries()) out.add(original, map.project(s.config), s.multiplicity);
    return out;
}

}  // namespace

InstanceRun bench_instance(const Instance &instance, const BenchConfig &config, std::uint64_t seed) {
    const double opt_energy = resolve_opt_energy(instance, config.exact_limit);
    const IsingProblem &original = instance.problem;

    std::optional<Reduction> reduction;
    if (original.has_cubic()) reduction = reduce_cubic(original, config.gadgets);
    const IsingProblem &sampled = reduction ? reduction->problem : original;

    InstanceRun run;
    run.sampled_spins = sampled.num_spins();
    if (!sampled.has_cubic() && sampled.num_terms() > 0) run.energy_scale = energy_scale(sampled);

    SampleSet drawn;
    if (config.solver == SolverKind::sa) {
        SamplerParams p = config.sampler;
        p.seed = mix_seed(seed, 0);
        drawn = simulated_anneal(sampled, p);
    } else {
        const auto k = config.sampler.reads * config.sampler.parallel_copies;
        drawn = random_sample(sampled, k, mix_seed(seed, 0));
    }
    run.raw = reduction ? project_samples(original, drawn, reduction->map) : std::move(drawn);

    auto &row = run.row;
    row.instance = instance.meta.name;
    row.family = to_string(instance.meta.family);
    row.opt_value = opt_value_from_energy(instance, opt_energy);
    row.n_samples = run.raw.total_multiplicity();
    if (config.t_sample_ms) {
        row.t_sample_ms = *config.t_sample_ms;
    } else {
        // Timer resolution can report zero for tiny problems.
        const double wall = run.raw.meta().wall_time_ms.value_or(0.0);
        row.t_sample_ms = wall > 0.0 ? t_sample(wall, row.n_samples) : 1e-6;
    }
    row.p_gs_raw = estimate_pgs(run.raw, opt_energy, config.tol);
    row.tts_raw_ms = tts(row.p_gs_raw, row.t_sample_ms);
    const auto ci =
        bootstrap_ci(run.raw, opt_energy, config.bootstrap_resamples, 0.95, mix_seed(seed, 2), config.tol);
    row.ci_low = ci.low;
    row.ci_high = ci.high;
    if (config.postprocess) {
        run.post = postprocess_samples(original, run.raw, mix_seed(seed, 1), config.sampler.max_postprocess_sweeps);
        row.p_gs_post = estimate_pgs(*run.post, opt_energy, config.tol);
        row.tts_post_ms = tts(*row.p_gs_post, row.t_sample_ms);
    }
    return run;
}

}  // namespace isingbench
