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

#include <cstdint>

#include "isingbench/model.hpp"
#include "isingbench/reduction.hpp"

namespace isingbench {

enum class BetaNormalization {
    /// Inverse temperatures are divided by the largest |coefficient|.
    max_abs,
    /// The problem is first multiplied by energy_scale(problem, chip) and the
    /// ladder is applied as given, like a fixed-temperature device with a
    /// bounded coupling range.
    chip_range,
};

struct SamplerParams {
    std::uint64_t reads = 500;
    std::uint64_t sweeps = 64;
    double beta_min = 0.1;
    double beta_max = 10.0;
    std::uint64_t seed = 0;
    std::uint64_t max_postprocess_sweeps = 5;
    /// Independent samples drawn per read, like parallel embeddings on one chip.
    std::uint64_t parallel_copies = 1;
    BetaNormalization normalization = BetaNormalization::max_abs;
    ChipRange chip{};
    unsigned threads = 1;
};

struct ExactResult {
    double ground_energy;
    std::uint64_t ground_count;
    SpinConfig witness;
    std::uint64_t enumerated_states;
};

/// k uniform random configurations.
SampleSet random_sample(const IsingProblem &problem, std::uint64_t k, std::uint64_t seed);

struct PostprocessResult {
    SpinConfig config;
    std::uint64_t sweeps = 0;
    std::uint64_t flips = 0;
    /// A full sweep ended without flips (the output is a 1-flip local minimum).
    bool converged = false;
};

/// Greedy descent: each sweep visits the spins in a fresh random order and
/// flips a spin as soon as that strictly lowers the energy. Stops after a
/// sweep without flips or after `max_sweeps` sweeps (0 means no cap).
PostprocessResult greedy_descent(const IsingProblem &problem, SpinConfig config, std::uint64_t seed,
                                 std::uint64_t max_sweeps = 5);

SpinConfig greedy_postprocess(const IsingProblem &problem, const SpinConfig &config, std::uint64_t seed,
                              std::uint64_t max_sweeps = 5);

/// Greedy postprocessing applied to every sample; sample i uses seed mix_seed(seed, i).
SampleSet postprocess_samples(const IsingProblem &problem, const SampleSet &samples, std::uint64_t seed,
                              std::uint64_t max_sweeps = 5);

/// Five restarts from uniform random states, each descended to convergence;
/// returns the lowest-energy result (first one on ties).
SpinConfig local_solver(const IsingProblem &problem, std::uint64_t seed, std::size_t restarts = 5);

/// Metropolis sweeps in index order under a geometric inverse-temperature
/// ladder. Produces reads * parallel_copies samples; sample k is seeded with
/// mix_seed(seed, k), so output does not depend on the thread count.
/// Throws std::invalid_argument when beta_min >= beta_max or reads == 0.
SampleSet simulated_anneal(const IsingProblem &problem, const SamplerParams &params);

/// Exhaustive enumeration in Gray-code order with O(degree) flip updates.
/// Throws LimitError when num_spins > limit.
ExactResult exact_ground(const IsingProblem &problem, std::size_t limit = 32);

/// True iff no single flip strictly lowers the energy.
bool is_local_min(const IsingProblem &problem, const SpinConfig &config);

}  // namespace isingbench
