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

// Energy model shared by every other component:
//
//   E(s) = offset + sum_i h_i s_i + sum_{i<j} J_ij s_i s_j + sum_{i<j<k} K_ijk s_i s_j s_k
//
// over spins s_i in {-1, +1}. Lower energy is better everywhere.

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <span>
#include <string>
#include <vector>

namespace isingbench {

using SpinIndex = std::uint32_t;

struct LinearTerm {
    SpinIndex i;
    double coeff;
    friend bool operator==(const LinearTerm &, const LinearTerm &) = default;
};

/// Canonical form has i < j.
struct QuadraticTerm {
    SpinIndex i, j;
    double coeff;
    friend bool operator==(const QuadraticTerm &, const QuadraticTerm &) = default;
};

/// Canonical form has i < j < k.
struct CubicTerm {
    SpinIndex i, j, k;
    double coeff;
    friend bool operator==(const CubicTerm &, const CubicTerm &) = default;
};

/// A +-1 assignment. Every entry is exactly -1 or +1.
class SpinConfig {
  public:
    SpinConfig() = default;
    explicit SpinConfig(std::vector<std::int8_t> spins);
    static SpinConfig all_up(std::size_t n) { return SpinConfig(std::vector<std::int8_t>(n, 1)); }

    std::size_t size() const { return spins_.size(); }
    int operator[](std::size_t i) const { return spins_[i]; }
    void flip(std::size_t i) { spins_[i] = static_cast<std::int8_t>(-spins_[i]); }
    std::span<const std::int8_t> spins() const { return spins_; }

    /// The first `n` spins, e.g. the original variables of a reduced problem.
    SpinConfig prefix(std::size_t n) const;

    /// "+-+..." rendering used in reports and logs.
    std::string to_string() const;
    static SpinConfig from_string(const std::string &text);

    friend bool operator==(const SpinConfig &, const SpinConfig &) = default;
    friend auto operator<=>(const SpinConfig &, const SpinConfig &) = default;

  private:
    std::vector<std::int8_t> spins_;
};

SpinConfig flipped(SpinConfig config, std::size_t i);

/// Immutable after construction; safe to share across threads.
class IsingProblem {
  public:
    /// Accumulates terms in any order; repeated keys add. build() drops zeros.
    class Builder {
      public:
        explicit Builder(std::size_t num_spins) : num_spins_(num_spins) {}
        Builder &add_linear(SpinIndex i, double c);
        Builder &add_quadratic(SpinIndex i, SpinIndex j, double c);
        Builder &add_cubic(SpinIndex i, SpinIndex j, SpinIndex k, double c);
        Builder &add_offset(double c);
        IsingProblem build() const;

      private:
        std::size_t num_spins_;
        double offset_ = 0.0;
        std::map<SpinIndex, double> linear_;
        std::map<std::pair<SpinIndex, SpinIndex>, double> quadratic_;
        std::map<std::tuple<SpinIndex, SpinIndex, SpinIndex>, double> cubic_;
    };

    IsingProblem() = default;

    /// Canonicalizes index order and sorts by key. Throws IndexError for
    /// out-of-range indices, std::invalid_argument for repeated members in a
    /// key or a key given twice. Zero coefficients are dropped.
    IsingProblem(std::size_t num_spins, std::vector<LinearTerm> linear,
                 std::vector<QuadraticTerm> quadratic, std::vector<CubicTerm> cubic = {},
                 double offset = 0.0);

    std::size_t num_spins() const { return num_spins_; }
    std::span<const LinearTerm> linear() const { return linear_; }
    std::span<const QuadraticTerm> quadratic() const { return quadratic_; }
    std::span<const CubicTerm> cubic() const { return cubic_; }
    double offset() const { return offset_; }
    bool has_cubic() const { return !cubic_.empty(); }
    std::size_t num_terms() const { return linear_.size() + quadratic_.size() + cubic_.size(); }

    /// Largest |coefficient| over all non-constant terms; 0 for an empty problem.
    double max_abs_coefficient() const;

    /// True when every coefficient and the offset are integers.
    bool integer_valued() const;

    /// Every coefficient and the offset multiplied by `factor`.
    IsingProblem scaled(double factor) const;

    /// Change in energy from flipping spin i; no bounds checking.
    double flip_delta(std::span<const std::int8_t> spins, SpinIndex i) const {
        const auto s = static_cast<double>(spins[i]);
        double field = field_[i];
        for (auto p = pair_begin_[i]; p != pair_begin_[i + 1]; ++p) {
            field += pair_nbr_[p].coeff * spins[pair_nbr_[p].other];
        }
        for (auto t = triple_begin_[i]; t != triple_begin_[i + 1]; ++t) {
            const auto &n = triple_nbr_[t];
            field += n.coeff * spins[n.a] * spins[n.b];
        }
        return -2.0 * s * field;
    }

    friend bool operator==(const IsingProblem &a, const IsingProblem &b) {
        return a.num_spins_ == b.num_spins_ && a.offset_ == b.offset_ && a.linear_ == b.linear_ &&
               a.quadratic_ == b.quadratic_ && a.cubic_ == b.cubic_;
    }

  private:
    void index_neighbours();

    struct PairNeighbour {
        SpinIndex other;
        double coeff;
    };
    struct TripleNeighbour {
        SpinIndex a, b;
        double coeff;
    };

    std::size_t num_spins_ = 0;
    double offset_ = 0.0;
    std::vector<LinearTerm> linear_;
    std::vector<QuadraticTerm> quadratic_;
    std::vector<CubicTerm> cubic_;

    // CSR incidence lists for O(degree) flip deltas.
    std::vector<double> field_;
    std::vector<std::uint32_t> pair_begin_, triple_begin_;
    std::vector<PairNeighbour> pair_nbr_;
    std::vector<TripleNeighbour> triple_nbr_;
};

/// Deterministic summation: offset, then linear, quadratic and cubic terms in
/// sorted key order. Throws DimensionError on length mismatch.
double energy(const IsingProblem &problem, const SpinConfig &config);

/// energy(flip(config, i)) - energy(config) in time proportional to the
/// number of terms touching i. Throws DimensionError or IndexError.
double energy_delta_flip(const IsingProblem &problem, const SpinConfig &config, SpinIndex i);

struct Sample {
    SpinConfig config;
    double energy;
    std::uint64_t multiplicity = 1;
};

struct SampleMeta {
    std::string sampler;
    std::uint64_t seed = 0;
    std::optional<double> wall_time_ms;
    std::uint64_t reads = 0;
    std::uint64_t parallel_copies = 1;
};

/// A weighted collection of evaluated configurations from one sampler run.
class SampleSet {
  public:
    SampleSet() = default;
    explicit SampleSet(SampleMeta meta) : meta_(std::move(meta)) {}

    /// Evaluates `config` against `problem` so stored energies are always exact.
    void add(const IsingProblem &problem, SpinConfig config, std::uint64_t multiplicity = 1);

    std::span<const Sample> entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::uint64_t total_multiplicity() const;

    const SampleMeta &meta() const { return meta_; }
    SampleMeta &meta() { return meta_; }

    /// Wall time per sample in milliseconds, when wall time was recorded.
    std::optional<double> t_sample_ms() const;

    /// Lowest-energy entry. Throws UndefinedError when empty.
    const Sample &best() const;

    double mean_energy() const;

    /// Identical configurations merged, sorted by (energy, config).
    SampleSet aggregated() const;

  private:
    std::vector<Sample> entries_;
    SampleMeta meta_;
};

}  // namespace isingbench
