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

// State-vector simulation of digitized (Trotterized) transverse-field
// annealing,
//
//   H(s) = -A(s) sum_i X_i + B(s) H_problem,   s = t / total_time,
//
// for small problems. Basis index bit i set means spin i is -1.

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "isingbench/model.hpp"

namespace isingbench {

/// Piecewise-linear function on [0, 1] through the given (s, value) knots.
class Profile {
  public:
    Profile() = default;
    /// Knots must be sorted by s, span [0, 1] and have nonnegative values.
    explicit Profile(std::vector<std::pair<double, double>> knots);
    static Profile ramp_down() { return Profile({{0.0, 1.0}, {1.0, 0.0}}); }
    static Profile ramp_up() { return Profile({{0.0, 0.0}, {1.0, 1.0}}); }

    double operator()(double s) const;
    std::span<const std::pair<double, double>> knots() const { return knots_; }

  private:
    std::vector<std::pair<double, double>> knots_;
};

struct AnnealSchedule {
    /// Dimensionless evolution time; digitized_time_us gives the device mapping.
    double total_time = 0.0;
    std::size_t slices = 0;
    Profile mixer = Profile::ramp_down();
    Profile problem = Profile::ramp_up();
};

class QuantumState {
  public:
    /// Uniform superposition, the ground state of -sum_i X_i.
    static QuantumState uniform(std::size_t num_spins);
    static QuantumState basis(std::size_t num_spins, std::uint64_t index);

    std::size_t num_spins() const { return num_spins_; }
    std::span<const std::complex<double>> amplitudes() const { return amps_; }
    std::span<std::complex<double>> amplitudes() { return amps_; }
    double squared_norm() const;
    std::vector<double> probabilities() const;

  private:
    std::size_t num_spins_ = 0;
    std::vector<std::complex<double>> amps_;
};

/// Spin configuration of basis state `index`.
SpinConfig basis_config(std::size_t num_spins, std::uint64_t index);

/// Problem energy of every basis state, computed by Gray-code traversal.
std::vector<double> diagonal_energies(const IsingProblem &problem);

/// One symmetric split step per slice (half mixer, full problem phase, half
/// mixer) with dt = total_time / slices and profiles taken at the slice
/// midpoint. Starts from the uniform superposition. Throws LimitError above
/// `max_spins`, std::invalid_argument for cubic problems or zero slices with
/// nonzero time.
QuantumState trotter_anneal(const IsingProblem &problem, const AnnealSchedule &schedule,
                            std::size_t max_spins = 20);

/// Samples `shots` configurations from |amplitude|^2.
SampleSet measure(const QuantumState &state, const IsingProblem &problem, std::uint64_t shots,
                  std::uint64_t seed);

/// (mean sample energy - ground_energy) / num_spins. Throws UndefinedError
/// for an empty sample set.
double residual_energy(const SampleSet &samples, const IsingProblem &problem, double ground_energy);

/// Device time of a digitized anneal in microseconds.
double digitized_time_us(std::uint64_t slices, std::uint64_t gate_depth = 4, double gate_time_ns = 84.0);

struct AnnealRow {
    double total_time;
    std::size_t slices;
    double digitized_time_us;
    /// Per spin.
    double residual_energy;
    double p_gs;
};

/// One anneal per total_time with slices = ceil(slices_per_unit * total_time)
/// (zero for zero time) and `shots` measurements seeded with
/// mix_seed(seed, point index).
std::vector<AnnealRow> anneal_sweep(const IsingProblem &problem, double ground_energy,
                                    std::span<const double> total_times, double slices_per_unit,
                                    std::uint64_t shots, std::uint64_t seed, std::size_t max_spins = 20);

}  // namespace isingbench
