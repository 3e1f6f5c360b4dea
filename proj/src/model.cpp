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

#include "isingbench/model.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <tuple>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "isingbench/errors.hpp"

namespace isingbench {

namespace {

void check_index(SpinIndex i, std::size_t n) {
    if (i >= n) {
        throw IndexError("spin index " + std::to_string(i) + " out of range for " + std::to_string(n) +
                         " spins");
    }
}

void check_length(const IsingProblem &p, const SpinConfig &c) {
    if (c.size() != p.num_spins()) {
        throw DimensionError("config has " + std::to_string(c.size()) + " spins, problem has " +
                             std::to_string(p.num_spins()));
    }
}

}  // namespace

SpinConfig::SpinConfig(std::vector<std::int8_t> spins) : spins_(std::move(spins)) {
    for (auto s : spins_) {
        if (s != 1 && s != -1) {
            throw std::invalid_argument("spin values must be -1 or +1");
        }
    }
}

SpinConfig SpinConfig::prefix(std::size_t n) const {
    if (n > spins_.size()) {
        throw DimensionError("prefix longer than config");
    }
    return SpinConfig(std::vector<std::int8_t>(spins_.begin(), spins_.begin() + static_cast<std::ptrdiff_t>(n)));
}

std::string SpinConfig::to_string() const {
    std::string out;
    out.reserve(spins_.size());
    for (auto s : spins_) {
        out.push_back(s > 0 ? '+' : '-');
    }
    return out;
}

SpinConfig SpinConfig::from_string(const std::string &text) {
    std::vector<std::int8_t> spins;
    spins.reserve(text.size());
    for (char ch : text) {
        if (ch == '+') {
            spins.push_back(1);
        } else if (ch == '-') {
            spins.push_back(-1);
        } else {
            throw std::invalid_argument(std::string("bad spin character '") + ch + "'");
        }
    }
    return SpinConfig(std::move(spins));
}

SpinConfig flipped(SpinConfig config, std::size_t i) {
    if (i >= config.size()) {
        throw IndexError("flip index out of range");
    }
    config.flip(i);
    return config;
}

IsingProblem::Builder &IsingProblem::Builder::add_linear(SpinIndex i, double c) {
    check_index(i, num_spins_);
    linear_[i] += c;
    return *this;
}

IsingProblem::Builder &IsingProblem::Builder::add_quadratic(SpinIndex i, SpinIndex j, double c) {
    check_index(i, num_spins_);
    check_index(j, num_spins_);
    if (i == j) {
        throw std::invalid_argument("quadratic term needs two distinct spins");
    }
    quadratic_[{std::min(i, j), std::max(i, j)}] += c;
    return *this;
}

IsingProblem::Builder &IsingProblem::Builder::add_cubic(SpinIndex i, SpinIndex j, SpinIndex k, double c) {
    check_index(i, num_spins_);
    check_index(j, num_spins_);
    check_index(k, num_spins_);
    std::array<SpinIndex, 3> key{i, j, k};
    std::sort(key.begin(), key.end());
    if (key[0] == key[1] || key[1] == key[2]) {
        throw std::invalid_argument("cubic term needs three distinct spins");
    }
    cubic_[{key[0], key[1], key[2]}] += c;
    return *this;
}

IsingProblem::Builder &IsingProblem::Builder::add_offset(double c) {
    offset_ += c;
    return *this;
}

IsingProblem IsingProblem::Builder::build() const {
    std::vector<LinearTerm> lin;
    std::vector<QuadraticTerm> quad;
    std::vector<CubicTerm> cub;
    for (const auto &[i, c] : linear_) lin.push_back({i, c});
    for (const auto &[key, c] : quadratic_) quad.push_back({key.first, key.second, c});
    for (const auto &[key, c] : cubic_) cub.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), c});
    return IsingProblem(num_spins_, std::move(lin), std::move(quad), std::move(cub), offset_);
}

IsingProblem::IsingProblem(std::size_t num_spins, std::vector<LinearTerm> linear,
                           std::vector<QuadraticTerm> quadratic, std::vector<CubicTerm> cubic, double offset)
    : num_spins_(num_spins), offset_(offset) {
    if (num_spins == 0) {
        throw std::invalid_argument("problem needs at least one spin");
    }
    if (num_spins > std::numeric_limits<SpinIndex>::max()) {
        throw std::invalid_argument("too many spins");
    }
    for (auto &t : linear) {
        check_index(t.i, num_spins);
    }
    for (auto &t : quadratic) {
        check_index(t.i, num_spins);
        check_index(t.j, num_spins);
        if (t.i == t.j) throw std::invalid_argument("quadratic term needs two distinct spins");
        if (t.i > t.j) std::swap(t.i, t.j);
    }
    for (auto &t : cubic) {
        check_index(t.i, num_spins);
        check_index(t.j, num_spins);
        check_index(t.k, num_spins);
        std::array<SpinIndex, 3> key{t.i, t.j, t.k};
        std::sort(key.begin(), key.end());
        if (key[0] == key[1] || key[1] == key[2]) throw std::invalid_argument("cubic term needs three distinct spins");
        t.i = key[0];
        t.j = key[1];
        t.k = key[2];
    }
    std::sort(linear.begin(), linear.end(), [](auto &a, auto &b) { return a.i < b.i; });
    std::sort(quadratic.begin(), quadratic.end(),
              [](auto &a, auto &b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
    std::sort(cubic.begin(), cubic.end(),
              [](auto &a, auto &b) { return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k); });
    for (std::size_t t = 1; t < linear.size(); ++t) {
        if (linear[t].i == linear[t - 1].i) throw std::invalid_argument("duplicate linear term " + std::to_string(linear[t].i));
    }
    for (std::size_t t = 1; t < quadratic.size(); ++t) {
        if (quadratic[t].i == quadratic[t - 1].i && quadratic[t].j == quadratic[t - 1].j) {
            throw std::invalid_argument("duplicate quadratic term (" + std::to_string(quadratic[t].i) + "," +
                                        std::to_string(quadratic[t].j) + ")");
        }
    }
    for (std::size_t t = 1; t < cubic.size(); ++t) {
        const auto &a = cubic[t - 1];
        const auto &b = cubic[t];
        if (a.i == b.i && a.j == b.j && a.k == b.k) {
            throw std::invalid_argument("duplicate cubic term (" + std::to_string(b.i) + "," + std::to_string(b.j) +
                                        "," + std::to_string(b.k) + ")");
        }
    }
    std::erase_if(linear, [](auto &t) { return t.coeff == 0.0; });
    std::erase_if(quadratic, [](auto &t) { return t.coeff == 0.0; });
    std::erase_if(cubic, [](auto &t) { return t.coeff == 0.0; });
    linear_ = std::move(linear);
    quadratic_ = std::move(quadratic);
    cubic_ = std::move(cubic);
    index_neighbours();
}

void IsingProblem::index_neighbours() {
    const auto n = num_spins_;
    field_.assign(n, 0.0);
    for (const auto &t : linear_) field_[t.i] = t.coeff;

    std::vector<std::uint32_t> pair_count(n, 0), triple_count(n, 0);
    for (const auto &t : quadratic_) {
        ++pair_count[t.i];
        ++pair_count[t.j];
    }
    for (const auto &t : cubic_) {
        ++triple_count[t.i];
        ++triple_count[t.j];
        ++triple_count[t.k];
    }
    pair_begin_.assign(n + 1, 0);
    triple_begin_.assign(n + 1, 0);
    std::partial_sum(pair_count.begin(), pair_count.end(), pair_begin_.begin() + 1);
    std::partial_sum(triple_count.begin(), triple_count.end(), triple_begin_.begin() + 1);

    pair_nbr_.resize(pair_begin_[n]);
    triple_nbr_.resize(triple_begin_[n]);
    std::vector<std::uint32_t> pair_fill(pair_begin_.begin(), pair_begin_.end() - 1);
    std::vector<std::uint32_t> triple_fill(triple_begin_.begin(), triple_begin_.end() - 1);
    for (const auto &t : quadratic_) {
        pair_nbr_[pair_fill[t.i]++] = {t.j, t.coeff};
        pair_nbr_[pair_fill[t.j]++] = {t.i, t.coeff};
    }
    for (const auto &t : cubic_) {
        triple_nbr_[triple_fill[t.i]++] = {t.j, t.k, t.coeff};
        triple_nbr_[triple_fill[t.j]++] = {t.i, t.k, t.coeff};
        triple_nbr_[triple_fill[t.k]++] = {t.i, t.j, t.coeff};
    }
}

double IsingProblem::max_abs_coefficient() const {
    double m = 0.0;
    for (const auto &t : linear_) m = std::max(m, std::abs(t.coeff));
    for (const auto &t : quadratic_) m = std::max(m, std::abs(t.coeff));
    for (const auto &t : cubic_) m = std::max(m, std::abs(t.coeff));
    return m;
}

bool IsingProblem::integer_valued() const {
    auto is_int = [](double x) { return std::nearbyint(x) == x; };
    if (!is_int(offset_)) return false;
    for (const auto &t : linear_) if (!is_int(t.coeff)) return false;
    for (const auto &t : quadratic_) if (!is_int(t.coeff)) return false;
    for (const auto &t : cubic_) if (!is_int(t.coeff)) return false;
    return true;
}

IsingProblem IsingProblem::scaled(double factor) const {
    auto lin = linear_;
    auto quad = quadratic_;
    auto cub = cubic_;
    for (auto &t : lin) t.coeff *= factor;
    for (auto &t : quad) t.coeff *= factor;
    for (auto &t : cub) t.coeff *= factor;
    return IsingProblem(num_spins_, std::move(lin), std::move(quad), std::move(cub), offset_ * factor);
}

double energy(const IsingProblem &problem, const SpinConfig &config) {
    check_length(problem, config);
    const auto s = config.spins();
    double e = problem.offset();
    for (const auto &t : problem.linear()) e += t.coeff * s[t.i];
    for (const auto &t : problem.quadratic()) e += t.coeff * (s[t.i] * s[t.j]);
    for (const auto &t : problem.cubic()) e += t.coeff * (s[t.i] * s[t.j] * s[t.k]);
    return e;
}

double energy_delta_flip(const IsingProblem &problem, const SpinConfig &config, SpinIndex i) {
    check_length(problem, config);
    check_index(i, problem.num_spins());
    return problem.flip_delta(config.spins(), i);
}

void SampleSet::add(const IsingProblem &problem, SpinConfig config, std::uint64_t multiplicity) {
    if (multiplicity == 0) {
        throw std::invalid_argument("sample multiplicity must be positive");
    }
    const double e = energy(problem, config);
    entries_.push_back({std::move(config), e, multiplicity});
}

std::uint64_t SampleSet::total_multiplicity() const {
    std::uint64_t total = 0;
    for (const auto &s : entries_) total += s.multiplicity;
    return total;
}

std::optional<double> SampleSet::t_sample_ms() const {
    const auto total = total_multiplicity();
    if (!meta_.wall_time_ms || total == 0) return std::nullopt;
    return *meta_.wall_time_ms / static_cast<double>(total);
}

const Sample &SampleSet::best() const {
    if (entries_.empty()) throw UndefinedError("best sample of an empty sample set");
    return *std::min_element(entries_.begin(), entries_.end(),
                             [](const Sample &a, const Sample &b) { return a.energy < b.energy; });
}

double SampleSet::mean_energy() const {
    if (entries_.empty()) throw UndefinedError("mean energy of an empty sample set");
    double sum = 0.0;
    for (const auto &s : entries_) sum += s.energy * static_cast<double>(s.multiplicity);
    return sum / static_cast<double>(total_multiplicity());
}

SampleSet SampleSet::aggregated() const {
    std::map<SpinConfig, std::size_t> index;
    SampleSet out(meta_);
    for (const auto &s : entries_) {
        auto [it, inserted] = index.try_emplace(s.config, out.entries_.size());
        if (inserted) {
            out.entries_.push_back(s);
        } else {
            out.entries_[it->second].multiplicity += s.multiplicity;
        }
    }
    std::sort(out.entries_.begin(), out.entries_.end(), [](const Sample &a, const Sample &b) {
        return std::tie(a.energy, a.config) < std::tie(b.energy, b.config);
    });
    return out;
}

}  // namespace isingbench
