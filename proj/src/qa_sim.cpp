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

#include "isingbench/qa_sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "isingbench/errors.hpp"
#include "isingbench/rng.hpp"

namespace isingbench {

Profile::Profile(std::vector<std::pair<double, double>> knots) : knots_(std::move(knots)) {
    if (knots_.size() < 2 || knots_.front().first != 0.0 || knots_.back().first != 1.0) {
        throw std::invalid_argument("profile knots must span s in [0, 1]");
    }
    for (std::size_t k = 0; k < knots_.size(); ++k) {
        if (knots_[k].second < 0.0) throw std::invalid_argument("profile values must be nonnegative");
        if (k > 0 && !(knots_[k].first > knots_[k - 1].first)) {
            throw std::invalid_argument("profile knots must be strictly increasing in s");
        }
    }
}

double Profile::operator()(double s) const {
    if (knots_.empty()) return 0.0;
    s = std::clamp(s, 0.0, 1.0);
    auto hi = std::lower_bound(knots_.begin(), knots_.end(), s,
                               [](const std::pair<double, double> &k, double x) { return k.first < x; });
    if (hi == knots_.begin()) return hi->second;
    auto lo = std::prev(hi);
    const double w = (s - lo->first) / (hi->first - lo->first);
    return lo->second + w * (hi->second - lo->second);
}

QuantumState QuantumState::uniform(std::size_t num_spins) {
    QuantumState st;
    st.num_spins_ = num_spins;
    const std::size_t dim = std::size_t{1} << num_spins;
    st.amps_.assign(dim, std::complex<double>(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
    return st;
}

QuantumState QuantumState::basis(std::size_t num_spins, std::uint64_t index) {
    QuantumState st;
    st.num_spins_ = num_spins;
    st.amps_.assign(std::size_t{1} << num_spins, 0.0);
    st.amps_.at(index) = 1.0;
    return st;
}

double QuantumState::squared_norm() const {
    double sum = 0.0;
    for (const auto &a : amps_) sum += std::norm(a);
    return sum;
}

std::vector<double> QuantumState::probabilities() const {
    std::vector<double> p(amps_.size());
    for (std::size_t k = 0; k < amps_.size(); ++k) p[k] = std::norm(amps_[k]);
    return p;
}

SpinConfig basis_config(std::size_t num_spins, std::uint64_t index) {
    std::vector<std::int8_t> s(num_spins);
    for (std::size_t i = 0; i < num_spins; ++i) s[i] = ((index >> i) & 1U) ? -1 : 1;
    return SpinConfig(std::move(s));
}

std::vector<double> diagonal_energies(const IsingProblem &problem) {
    const std::size_t n = problem.num_spins();
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> out(dim);
    std::vector<std::int8_t> s(n, 1);
    double e = energy(problem, SpinConfig(s));
    std::uint64_t index = 0;
    out[0] = e;
    for (std::uint64_t k = 1; k < dim; ++k) {
        const auto i = static_cast<SpinIndex>(std::countr_zero(k));
        e += problem.flip_delta(s, i);
        s[i] = static_cast<std::int8_t>(-s[i]);
        index ^= std::uint64_t{1} << i;
        out[index] = e;
    }
    return out;
}

namespace {

// exp(i theta X) on every qubit.
void mix(std::span<std::complex<double>> amps, std::size_t n, double theta) {
    const double c = std::cos(theta);
    const std::complex<double> is(0.0, std::sin(theta));
    for (std::size_t q = 0; q < n; ++q) {
        const std::size_t bit = std::size_t{1} << q;
        for (std::size_t k = 0; k < amps.size(); ++k) {
            if (k & bit) continue;
            const auto a0 = amps[k];
            const auto a1 = amps[k | bit];
            amps[k] = c * a0 + is * a1;
            amps[k | bit] = is * a0 + c * a1;
        }
    }
}

}  // namespace

QuantumState trotter_anneal(const IsingProblem &problem, const AnnealSchedule &schedule, std::size_t max_spins) {
    const std::size_t n = problem.num_spins();
    if (n > max_spins || n > 30) {
        throw LimitError("state-vector simulation limited to " + std::to_string(max_spins) + " spins, got " +
                         std::to_string(n));
    }
    if (problem.has_cubic()) {
        throw std::invalid_argument("trotter_anneal expects a quadratic problem");
    }
    if (schedule.total_time < 0.0) throw std::invalid_argument("total_time must be nonnegative");
    if (schedule.slices == 0 && schedule.total_time != 0.0) {
        throw std::invalid_argument("zero slices with nonzero total_time");
    }
    QuantumState state = QuantumState::uniform(n);
    if (schedule.slices == 0 || schedule.total_time == 0.0) return state;

    const auto diag = diagonal_energies(problem);
    auto work = state.amplitudes();
    const double dt = schedule.total_time / static_cast<double>(schedule.slices);
    for (std::size_t k = 0; k < schedule.slices; ++k) {
        const double s = (static_cast<double>(k) + 0.5) / static_cast<double>(schedule.slices);
        const double a = schedule.mixer(s);
        const double b = schedule.problem(s);
        // H_mixer = -a sum X, so exp(-i (dt/2) H_mixer) = prod exp(+i a dt/2 X).
        mix(work, n, 0.5 * a * dt);
        for (std::size_t z = 0; z < work.size(); ++z) {
            const double phase = -dt * b * diag[z];
            work[z] *= std::complex<double>(std::cos(phase), std::sin(phase));
        }
        mix(work, n, 0.5 * a * dt);
    }
    return state;
}

SampleSet measure(const QuantumState &state, const IsingProblem &problem, std::uint64_t shots, std::uint64_t seed) {
    if (state.num_spins() != problem.num_spins()) {
        throw DimensionError("state and problem sizes differ");
    }
    const auto p = state.probabilities();
    std::vector<double> cdf(p.size());
    std::partial_sum(p.begin(), p.end(), cdf.begin());
    const double total = cdf.back();
    Rng rng(seed);
    std::map<std::uint64_t, std::uint64_t> counts;
    for (std::uint64_t k = 0; k < shots; ++k) {
        const double u = rng.uniform01() * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) --it;
        // upper_bound lands on the first state whose cdf step exceeds u, never on a zero-probability state.
        auto idx = static_cast<std::uint64_t>(it - cdf.begin());
        ++counts[idx];
    }
    SampleSet out(SampleMeta{"trotter", seed, std::nullopt, shots, 1});
    for (const auto &[idx, count] : counts) out.add(problem, basis_config(state.num_spins(), idx), count);
    return out;
}

double residual_energy(const SampleSet &samples, const IsingProblem &problem, double ground_energy) {
    if (samples.empty()) throw UndefinedError("residual energy of an empty sample set");
    return (samples.mean_energy() - ground_energy) / static_cast<double>(problem.num_spins());
}

double digitized_time_us(std::uint64_t slices, std::uint64_t gate_depth, double gate_time_ns) {
    return static_cast<double>(slices) * static_cast<double>(gate_depth) * gate_time_ns / 1000.0;
}

std::vector<AnnealRow> anneal_sweep(const IsingProblem &problem, double ground_energy,
                                    std::span<const double> total_times, double slices_per_unit,
                                    std::uint64_t shots, std::uint64_t seed, std::size_t max_spins) {
    if (!(slices_per_unit > 0.0)) throw std::invalid_argument("slices_per_unit must be positive");
    if (shots == 0) throw std::invalid_argument("anneal_sweep needs shots >= 1");
    std::vector<AnnealRow> rows;
    rows.reserve(total_times.size());
    for (std::size_t k = 0; k < total_times.size(); ++k) {
        AnnealSchedule schedule;
        schedule.total_time = total_times[k];
        schedule.slices = static_cast<std::size_t>(std::ceil(slices_per_unit * total_times[k]));
        const auto state = trotter_anneal(problem, schedule, max_spins);
        const auto samples = measure(state, problem, shots, mix_seed(seed, k));
        std::uint64_t hits = 0;
        for (const auto &s : samples.entries()) {
            if (std::abs(s.energy - ground_energy) <= 1e-9) hits += s.multiplicity;
        }
        rows.push_back({schedule.total_time, schedule.slices, digitized_time_us(schedule.slices),
                        residual_energy(samples, problem, ground_energy),
                        static_cast<double>(hits) / static_cast<double>(shots)});
    }
    return rows;
}

}  // namespace isingbench
