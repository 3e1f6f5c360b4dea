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

#include "isingbench/solvers.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "isingbench/errors.hpp"
#include "isingbench/rng.hpp"

namespace isingbench {

namespace {

std::vector<std::int8_t> random_spins(Rng &rng, std::size_t n) {
    std::vector<std::int8_t> s(n);
    for (auto &x : s) x = rng.spin();
    return s;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Runs body(k) for k in [0, count) on up to `threads` workers. Each k writes
// only its own output slot, so results do not depend on scheduling.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t k = 0; k < count; ++k) body(k);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t k = w; k < count; k += threads) body(k);
        });
    }
    for (auto &t : pool) t.join();
}

}  // namespace

SampleSet random_sample(const IsingProblem &problem, std::uint64_t k, std::uint64_t seed) {
    if (k == 0) throw std::invalid_argument("random_sample needs k >= 1");
    const auto start = std::chrono::steady_clock::now();
    SampleSet out(SampleMeta{"random", seed, std::nullopt, k, 1});
    Rng rng(seed);
    for (std::uint64_t r = 0; r < k; ++r) {
        out.add(problem, SpinConfig(random_spins(rng, problem.num_spins())));
    }
    out.meta().wall_time_ms = elapsed_ms(start);
    return out;
}

PostprocessResult greedy_descent(const IsingProblem &problem, SpinConfig config, std::uint64_t seed,
                                 std::uint64_t max_sweeps) {
    if (config.size() != problem.num_spins()) {
        throw DimensionError("config length does not match problem");
    }
    const std::size_t n = problem.num_spins();
    Rng rng(seed);
    std::vector<std::int8_t> s(config.spins().begin(), config.spins().end());
    std::vector<SpinIndex> order(n);
    PostprocessResult res;
    while (max_sweeps == 0 || res.sweeps < max_sweeps) {
        std::iota(order.begin(), order.end(), SpinIndex{0});
        rng.shuffle(std::span<SpinIndex>(order));
        ++res.sweeps;
        std::uint64_t flips = 0;
        for (auto i : order) {
            if (problem.flip_delta(s, i) < 0.0) {
                s[i] = static_cast<std::int8_t>(-s[i]);
                ++flips;
            }
        }
        res.flips += flips;
        if (flips == 0) {
            res.converged = true;
            break;
        }
    }
    res.config = SpinConfig(std::move(s));
    return res;
}

SpinConfig greedy_postprocess(const IsingProblem &problem, const SpinConfig &config, std::uint64_t seed,
                              std::uint64_t max_sweeps) {
    return greedy_descent(problem, config, seed, max_sweeps).config;
}

SampleSet postprocess_samples(const IsingProblem &problem, const SampleSet &samples, std::uint64_t seed,
                              std::uint64_t max_sweeps) {
    SampleMeta meta = samples.meta();
    meta.sampler += "+greedy";
    SampleSet out(meta);
    std::uint64_t k = 0;
    for (const auto &s : samples.entries()) {
        for (std::uint64_t m = 0; m < s.multiplicity; ++m, ++k) {
            out.add(problem, greedy_postprocess(problem, s.config, mix_seed(seed, k), max_sweeps));
        }
    }
    return out;
}

SpinConfig local_solver(const IsingProblem &problem, std::uint64_t seed, std::size_t restarts) {
    if (restarts == 0) throw std::invalid_argument("local_solver needs at least one restart");
    std::optional<SpinConfig> best;
    double best_e = 0.0;
    for (std::size_t r = 0; r < restarts; ++r) {
        Rng rng(mix_seed(seed, 2 * r));
        SpinConfig start(random_spins(rng, problem.num_spins()));
        auto res = greedy_descent(problem, std::move(start), mix_seed(seed, 2 * r + 1), 0);
        const double e = energy(problem, res.config);
        if (!best || e < best_e) {
            best = std::move(res.config);
            best_e = e;
        }
    }
    return *best;
}

SampleSet simulated_anneal(const IsingProblem &problem, const SamplerParams &params) {
    if (params.reads == 0 || params.parallel_copies == 0) {
        throw std::invalid_argument("simulated_anneal needs reads >= 1 and parallel_copies >= 1");
    }
    if (!(params.beta_min > 0.0) || !(params.beta_min < params.beta_max)) {
        throw std::invalid_argument("invalid schedule: need 0 < beta_min < beta_max");
    }
    const auto start = std::chrono::steady_clock::now();

    const IsingProblem *work = &problem;
    IsingProblem rescaled;
    double norm = 1.0;
    if (params.normalization == BetaNormalization::chip_range) {
        rescaled = problem.scaled(energy_scale(problem, params.chip));
        work = &rescaled;
    } else if (const double m = problem.max_abs_coefficient(); m > 0.0) {
        norm = 1.0 / m;
    }

    std::vector<double> ladder(params.sweeps);
    for (std::size_t t = 0; t < ladder.size(); ++t) {
        const double frac = ladder.size() == 1 ? 1.0 : static_cast<double>(t) / static_cast<double>(ladder.size() - 1);
        ladder[t] = norm * params.beta_min * std::pow(params.beta_max / params.beta_min, frac);
    }

    const std::size_t n = problem.num_spins();
    const std::size_t total = params.reads * params.parallel_copies;
    std::vector<std::vector<std::int8_t>> results(total);
    parallel_for(total, params.threads, [&](std::size_t k) {
        Rng rng(mix_seed(params.seed, k));
        auto s = random_spins(rng, n);
        for (double beta : ladder) {
            for (SpinIndex i = 0; i < n; ++i) {
                const double d = work->flip_delta(s, i);
                if (d <= 0.0 || rng.uniform01() < std::exp(-beta * d)) {
                    s[i] = static_cast<std::int8_t>(-s[i]);
                }
            }
        }
        results[k] = std::move(s);
    });

    SampleSet out(SampleMeta{"sa", params.seed, std::nullopt, params.reads, params.parallel_copies});
    for (auto &s : results) out.add(problem, SpinConfig(std::move(s)));
    out.meta().wall_time_ms = elapsed_ms(start);
    return out;
}

ExactResult exact_ground(const IsingProblem &problem, std::size_t limit) {
    const std::size_t n = problem.num_spins();
    if (n > limit || n > 62) {
        throw LimitError("exact_ground enumerates 2^n states; n = " + std::to_string(n) + " exceeds the limit " +
                         std::to_string(limit) + " (use a heuristic solver or supply a known optimum)");
    }
    constexpr double kTol = 1e-9;
    const bool exact_arith = problem.integer_valued();
    std::vector<std::int8_t> s(n, 1);
    double e = energy(problem, SpinConfig(s));
    ExactResult res{e, 1, SpinConfig(s), 1};
    const std::uint64_t states = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < states; ++k) {
        const auto i = static_cast<SpinIndex>(std::countr_zero(k));
        e += problem.flip_delta(s, i);
        s[i] = static_cast<std::int8_t>(-s[i]);
        if (!exact_arith && (k & 0xffff) == 0) {
            e = energy(problem, SpinConfig(s));
        }
        if (e < res.ground_energy - kTol) {
            res.ground_energy = e;
            res.ground_count = 1;
            res.witness = SpinConfig(s);
        } else if (std::abs(e - res.ground_energy) <= kTol) {
            ++res.ground_count;
        }
    }
    res.enumerated_states = states;
    res.ground_energy = energy(problem, res.witness);
    return res;
}

bool is_local_min(const IsingProblem &problem, const SpinConfig &config) {
    if (config.size() != problem.num_spins()) {
        throw DimensionError("config length does not match problem");
    }
    for (SpinIndex i = 0; i < problem.num_spins(); ++i) {
        if (problem.flip_delta(config.spins(), i) < 0.0) return false;
    }
    return true;
}

}  // namespace isingbench
